#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trackbench/geometry.hpp"

namespace trackbench {

// The nine scenario categories a sequence can belong to.
enum class Scenario {
    human_body,
    human_part,
    animal,
    vehicle,
    sign_and_logo,
    sport_ball,
    object_3d,
    uav,
    cartoon,
};

inline constexpr std::array<Scenario, 9> kAllScenarios{
    Scenario::human_body, Scenario::human_part, Scenario::animal,
    Scenario::vehicle,    Scenario::sign_and_logo, Scenario::sport_ball,
    Scenario::object_3d,  Scenario::uav,        Scenario::cartoon,
};

// Canonical lowercase name, e.g. "human-body" or "3d-object".
[[nodiscard]] std::string_view to_string(Scenario scenario);

// Case-insensitive lookup of a canonical name; empty when unknown.
[[nodiscard]] std::optional<Scenario> parse_scenario(std::string_view name);

// Comma-separated list of all canonical scenario names, for error messages.
[[nodiscard]] std::string scenario_names();

// One annotated sequence of the corpus.
struct SequenceRecord {
    std::string id;
    Scenario scenario{Scenario::human_body};
    std::string sub_scenario;
    std::string source_dataset;
    Trajectory gt;

    [[nodiscard]] std::size_t frame_count() const { return gt.length(); }
};

// One tracker's predictions for one evaluation pass, keyed by sequence id.
struct ResultSet {
    std::string tracker;
    int pass_index{1};
    std::map<std::string, Trajectory> trajectories;
};

// An immutable benchmark corpus: sequences plus any attached tracker runs.
// Sequences are kept sorted by id and result sets by (tracker, pass), so
// iteration order is reproducible no matter how the corpus was assembled.
class Corpus {
public:
    explicit Corpus(std::vector<SequenceRecord> sequences,
                    std::vector<ResultSet> results = {});

    [[nodiscard]] const std::vector<SequenceRecord>& sequences() const { return sequences_; }
    [[nodiscard]] const std::vector<ResultSet>& results() const { return results_; }
    [[nodiscard]] std::size_t size() const { return sequences_.size(); }

    [[nodiscard]] const SequenceRecord* find_sequence(std::string_view id) const;
    // Throws ValidationError when the id is unknown.
    [[nodiscard]] const SequenceRecord& sequence(std::string_view id) const;

    // Sorted unique tracker names across all result sets.
    [[nodiscard]] std::vector<std::string> tracker_names() const;

    // Number of passes per tracker; 0 when no results are attached. Every
    // tracker is required to carry the same passes 1..P.
    [[nodiscard]] int pass_count() const { return pass_count_; }

    // Prediction of one tracker on one pass; null when that tracker has no
    // entry for the sequence.
    [[nodiscard]] const Trajectory* result(std::string_view tracker, int pass,
                                           std::string_view sequence_id) const;

    // Replaces the attached runs, revalidating against the sequences.
    [[nodiscard]] Corpus with_results(std::vector<ResultSet> results) const;

private:
    std::vector<SequenceRecord> sequences_;
    std::vector<ResultSet> results_;
    int pass_count_{0};
};

}  // namespace trackbench
