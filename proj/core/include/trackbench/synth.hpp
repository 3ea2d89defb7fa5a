#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "trackbench/corpus.hpp"

namespace trackbench {

// Parameters of the seeded corpus generator. The same spec yields the same
// corpus on every platform: the generator draws from a fixed-width Mersenne
// Twister and maps its words to ranges without any library distribution.
struct SynthSpec {
    std::uint64_t seed{0};
    int n_sequences{10};
    std::pair<int, int> frames_range{30, 120};  // inclusive bounds
    int n_trackers{3};
    // Per-tracker jitter magnitude in pixels; empty means no jitter. When
    // non-empty, the length must equal n_trackers. Entry i bounds the
    // uniform per-coordinate offset of tracker i, so larger entries make
    // strictly worse trackers.
    std::vector<double> tracker_noise;
    // Probability that a predicted frame is dropped (reported absent).
    double absence_rate{0.0};
    // Relative scenario weights; empty means uniform over all scenarios.
    std::map<Scenario, double> scenario_mix;
    int n_passes{1};

    void validate() const;
};

// Canvas the ground-truth walk lives on.
inline constexpr int kSynthCanvasWidth = 1280;
inline constexpr int kSynthCanvasHeight = 720;

// Generates a corpus with ground truth and per-tracker predictions attached.
[[nodiscard]] Corpus generate_corpus(const SynthSpec& spec);

}  // namespace trackbench
