#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "trackbench/corpus.hpp"
#include "trackbench/metrics.hpp"

namespace trackbench {

// Constants of the sequence quality score.
struct QualityParams {
    double eta{5.0};       // exponent scale on the tracker spread
    double norm_min{0.1};  // lower end of the variation normalization range
    double norm_max{1.0};  // upper end of the variation normalization range
    double epsilon{1e-6};  // floor inside the variation logarithm

    // Throws ValidationError on a non-positive eta or epsilon, or when the
    // normalization range is not 0 < norm_min < norm_max.
    void validate() const;
};

// Which pass of the attached runs feeds the quality score.
enum class PassPolicy { first_pass, mean_over_passes };

// How informative one sequence is, and why.
struct QualityReport {
    std::string sequence_id;
    double challenge{0.0};       // how hard: 1 - grand mean overlap, in [0, 1]
    double discrimination{0.0};  // how well trackers separate: >= 1
    double variation_raw{0.0};   // log of accumulated frame-to-frame overlap change
    double variation{0.0};       // variation_raw after corpus-wide normalization
    double quality{0.0};         // challenge * discrimination * variation
};

// One minus the grand mean of the overlap matrix.
[[nodiscard]] double challenge_degree(const IoUMatrix& m);

// exp(eta * sigma) where sigma is the population standard deviation of the
// per-tracker mean overlaps.
[[nodiscard]] double discriminative_ability(const IoUMatrix& m, double eta);

// log of the accumulated absolute frame-to-frame overlap change, summed over
// trackers, floored at epsilon before the log. This is the raw numerator of
// the variation density; the denominator and normalization need the whole
// corpus.
[[nodiscard]] double variation_mass(const IoUMatrix& m, double epsilon);

// Per-sequence variation density: each raw mass divided by the log of the
// sequence frame count, then min-max rescaled over the corpus into
// [norm_min, norm_max]. When all inputs coincide, everything maps to
// norm_max.
[[nodiscard]] std::vector<double> variation_density(std::span<const double> variation_raw,
                                                    std::span<const std::size_t> frame_counts,
                                                    const QualityParams& params);

[[nodiscard]] double quality_score(double challenge, double discrimination, double variation);

// Scores every sequence of the corpus. Requires attached results covering
// every sequence. threads <= 0 picks the hardware concurrency; the output is
// identical for any thread count.
[[nodiscard]] std::vector<QualityReport> score_corpus(const Corpus& corpus,
                                                      const QualityParams& params,
                                                      PassPolicy policy = PassPolicy::first_pass,
                                                      int threads = 1);

}  // namespace trackbench
