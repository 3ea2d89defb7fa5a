#include "trackbench/synth.hpp"

#include <cmath>
#include <random>
#include <string>

#include "trackbench/error.hpp"

namespace trackbench {

namespace {

constexpr double kMinBoxSize = 20.0;
constexpr double kMaxBoxSize = 200.0;
constexpr double kMaxStep = 10.0;
// Sub-scenario labels per scenario; small on purpose so corpora of a few
// dozen sequences contain duplicate (scenario, sub-scenario) pairs.
constexpr int kSubScenarioPool = 4;

// The raw engine is pinned by the language standard; the mappings below are
// pinned here. Library distributions are avoided because their algorithms
// differ between standard library implementations.
double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_real(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

double reflect_into(double v, double limit) {
    while (v < 0.0 || v > limit) {
        if (v < 0.0) {
            v = -v;
        }
        if (v > limit) {
            v = 2.0 * limit - v;
        }
    }
    return v;
}

std::string zero_padded(int value, int width) {
    std::string digits = std::to_string(value);
    while (static_cast<int>(digits.size()) < width) {
        digits.insert(digits.begin(), '0');
    }
    return digits;
}

Scenario draw_scenario(std::mt19937_64& rng, const std::map<Scenario, double>& mix) {
    if (mix.empty()) {
        return kAllScenarios[static_cast<std::size_t>(
            uniform_int(rng, 0, static_cast<int>(kAllScenarios.size()) - 1))];
    }
    std::vector<std::pair<Scenario, double>> weighted;
    double total = 0.0;
    for (const auto& [scenario, weight] : mix) {
        if (weight > 0.0) {
            weighted.emplace_back(scenario, weight);
            total += weight;
        }
    }
    const double u = uniform_real(rng, 0.0, total);
    double cumulative = 0.0;
    for (const auto& [scenario, weight] : weighted) {
        cumulative += weight;
        if (u < cumulative) {
            return scenario;
        }
    }
    return weighted.back().first;
}

}  // namespace

void SynthSpec::validate() const {
    if (n_sequences < 1 || n_sequences > 9999) {
        throw ValidationError("synthetic corpus needs 1 to 9999 sequences");
    }
    if (frames_range.first < 2 || frames_range.first > frames_range.second) {
        throw ValidationError(
            "synthetic frame range must satisfy 2 <= min <= max; got " +
            std::to_string(frames_range.first) + ".." + std::to_string(frames_range.second));
    }
    if (n_trackers < 1 || n_trackers > 99) {
        throw ValidationError("synthetic corpus needs 1 to 99 trackers");
    }
    if (!tracker_noise.empty() &&
        tracker_noise.size() != static_cast<std::size_t>(n_trackers)) {
        throw ValidationError("tracker noise list has " +
                              std::to_string(tracker_noise.size()) + " entries for " +
                              std::to_string(n_trackers) + " trackers");
    }
    for (const double noise : tracker_noise) {
        if (!std::isfinite(noise) || noise < 0.0) {
            throw ValidationError("tracker noise magnitudes must be finite and non-negative");
        }
    }
    if (!(absence_rate >= 0.0) || !(absence_rate <= 1.0)) {
        throw ValidationError("absence rate must lie in [0, 1]");
    }
    double mix_total = 0.0;
    for (const auto& [scenario, weight] : scenario_mix) {
        if (!std::isfinite(weight) || weight < 0.0) {
            throw ValidationError("scenario mix weights must be finite and non-negative");
        }
        mix_total += weight;
    }
    if (!scenario_mix.empty() && !(mix_total > 0.0)) {
        throw ValidationError("scenario mix weights must not all be zero");
    }
    if (n_passes < 1 || n_passes > 99) {
        throw ValidationError("synthetic corpus needs 1 to 99 passes");
    }
}

Corpus generate_corpus(const SynthSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::vector<SequenceRecord> sequences;
    sequences.reserve(static_cast<std::size_t>(spec.n_sequences));
    std::vector<ResultSet> results(
        static_cast<std::size_t>(spec.n_passes) * static_cast<std::size_t>(spec.n_trackers));
    for (int pass = 1; pass <= spec.n_passes; ++pass) {
        for (int t = 0; t < spec.n_trackers; ++t) {
            auto& run = results[static_cast<std::size_t>(pass - 1) *
                                    static_cast<std::size_t>(spec.n_trackers) +
                                static_cast<std::size_t>(t)];
            run.tracker = "tracker-" + zero_padded(t, 2);
            run.pass_index = pass;
        }
    }
    for (int i = 0; i < spec.n_sequences; ++i) {
        const Scenario scenario = draw_scenario(rng, spec.scenario_mix);
        const int sub = uniform_int(rng, 1, kSubScenarioPool);
        const int frames = uniform_int(rng, spec.frames_range.first, spec.frames_range.second);

        // Ground truth: a fixed-size box on a random walk that bounces off
        // the canvas borders.
        const double w = uniform_real(rng, kMinBoxSize, kMaxBoxSize);
        const double h = uniform_real(rng, kMinBoxSize, kMaxBoxSize);
        const double max_x = kSynthCanvasWidth - w;
        const double max_y = kSynthCanvasHeight - h;
        double x = uniform_real(rng, 0.0, max_x);
        double y = uniform_real(rng, 0.0, max_y);
        std::vector<BoundingBox> gt;
        gt.reserve(static_cast<std::size_t>(frames));
        gt.push_back({x, y, w, h});
        for (int f = 1; f < frames; ++f) {
            x = reflect_into(x + uniform_real(rng, -kMaxStep, kMaxStep), max_x);
            y = reflect_into(y + uniform_real(rng, -kMaxStep, kMaxStep), max_y);
            gt.push_back({x, y, w, h});
        }

        const std::string id = "seq-" + zero_padded(i, 4);
        sequences.push_back({id, scenario,
                             std::string(to_string(scenario)) + "-v" + std::to_string(sub),
                             "synthetic", Trajectory::from_boxes(gt)});

        // Predictions: the ground truth offset by per-tracker jitter, with
        // frames dropped at the absence rate. Later passes redraw the noise,
        // so passes differ but any one pass is reproducible.
        for (int pass = 1; pass <= spec.n_passes; ++pass) {
            for (int t = 0; t < spec.n_trackers; ++t) {
                const double noise =
                    spec.tracker_noise.empty() ? 0.0 : spec.tracker_noise[static_cast<std::size_t>(t)];
                std::vector<FrameBox> pred;
                pred.reserve(static_cast<std::size_t>(frames));
                for (int f = 0; f < frames; ++f) {
                    const double drop = unit_real(rng);
                    if (drop < spec.absence_rate) {
                        pred.emplace_back(std::nullopt);
                        continue;
                    }
                    const BoundingBox& truth = gt[static_cast<std::size_t>(f)];
                    const double dx = uniform_real(rng, -noise, noise);
                    const double dy = uniform_real(rng, -noise, noise);
                    pred.emplace_back(BoundingBox{truth.x + dx, truth.y + dy, truth.w, truth.h});
                }
                results[static_cast<std::size_t>(pass - 1) *
                            static_cast<std::size_t>(spec.n_trackers) +
                        static_cast<std::size_t>(t)]
                    .trajectories.emplace(id, Trajectory(std::move(pred)));
            }
        }
    }
    return Corpus(std::move(sequences), std::move(results));
}

}  // namespace trackbench
