#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "trackbench/corpus.hpp"
#include "trackbench/quality.hpp"

namespace trackbench {

inline constexpr int kQualityFormatVersion = 1;

// Shortest decimal form that parses back to exactly the same value.
[[nodiscard]] std::string format_double(double value);

// One box per line as "x,y,w,h"; an empty line or "NaN,NaN,NaN,NaN" marks an
// absent frame. Readers also accept whitespace- or tab-separated fields;
// writers always emit commas.
[[nodiscard]] Trajectory load_trajectory(const std::filesystem::path& file);
void save_trajectory(const Trajectory& trajectory, const std::filesystem::path& file);

// Reads a corpus manifest (JSON). Ground-truth paths are resolved relative
// to the manifest's directory unless absolute.
[[nodiscard]] Corpus load_manifest(const std::filesystem::path& manifest);

// Reads tracker runs laid out as <root>/<tracker>/pass<K>/<sequence id>.txt.
// Every tracker directory must provide every corpus sequence in every pass.
[[nodiscard]] std::vector<ResultSet> load_results(const std::filesystem::path& root,
                                                  const Corpus& corpus);

// Writes dir/manifest.json, the ground truth under dir/gt/, and any attached
// runs under dir/results/. Loading the tree back yields an equal corpus.
void save_corpus(const Corpus& corpus, const std::filesystem::path& dir);

// Quality reports together with the constants that produced them.
struct QualityFile {
    QualityParams params;
    std::vector<QualityReport> reports;
};

void save_quality(const QualityFile& file, const std::filesystem::path& path);
[[nodiscard]] QualityFile load_quality(const std::filesystem::path& path);

}  // namespace trackbench
