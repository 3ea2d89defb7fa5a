#include "trackbench/quality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trackbench/error.hpp"
#include "trackbench/parallel.hpp"

namespace trackbench {

namespace {

std::vector<double> row_means(const IoUMatrix& m) {
    std::vector<double> means;
    means.reserve(m.tracker_count());
    for (std::size_t t = 0; t < m.tracker_count(); ++t) {
        const auto row = m.row(t);
        means.push_back(std::accumulate(row.begin(), row.end(), 0.0) /
                        static_cast<double>(row.size()));
    }
    return means;
}

// Entry-wise mean of per-pass matrices with identical shape.
IoUMatrix average_matrices(std::vector<IoUMatrix> matrices) {
    if (matrices.size() == 1) {
        return std::move(matrices.front());
    }
    std::vector<double> values = matrices.front().values();
    for (std::size_t i = 1; i < matrices.size(); ++i) {
        const auto& other = matrices[i].values();
        for (std::size_t k = 0; k < values.size(); ++k) {
            values[k] += other[k];
        }
    }
    for (auto& v : values) {
        v /= static_cast<double>(matrices.size());
    }
    return IoUMatrix(matrices.front().sequence_id(), matrices.front().tracker_ids(),
                     matrices.front().frame_count(), std::move(values));
}

}  // namespace

void QualityParams::validate() const {
    if (!(eta > 0.0)) {
        throw ValidationError("quality parameter eta must be positive");
    }
    if (!(norm_min > 0.0) || !(norm_min < norm_max)) {
        throw ValidationError(
            "quality normalization range must satisfy 0 < norm_min < norm_max");
    }
    if (!(epsilon > 0.0)) {
        throw ValidationError("quality parameter epsilon must be positive");
    }
}

double challenge_degree(const IoUMatrix& m) {
    const double total = std::accumulate(m.values().begin(), m.values().end(), 0.0);
    const double grand_mean =
        total / static_cast<double>(m.tracker_count() * m.frame_count());
    return 1.0 - grand_mean;
}

double discriminative_ability(const IoUMatrix& m, double eta) {
    const auto means = row_means(m);
    const double mean =
        std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(means.size());
    double accum = 0.0;
    for (const double v : means) {
        accum += (v - mean) * (v - mean);
    }
    const double sigma = std::sqrt(accum / static_cast<double>(means.size()));
    return std::exp(eta * sigma);
}

double variation_mass(const IoUMatrix& m, double epsilon) {
    double total = 0.0;
    for (std::size_t t = 0; t < m.tracker_count(); ++t) {
        const auto row = m.row(t);
        for (std::size_t f = 0; f + 1 < row.size(); ++f) {
            total += std::abs(row[f + 1] - row[f]);
        }
    }
    return std::log(std::max(total, epsilon));
}

std::vector<double> variation_density(std::span<const double> variation_raw,
                                      std::span<const std::size_t> frame_counts,
                                      const QualityParams& params) {
    params.validate();
    if (variation_raw.size() != frame_counts.size()) {
        throw ValidationError("variation normalization got " +
                              std::to_string(variation_raw.size()) + " masses for " +
                              std::to_string(frame_counts.size()) + " frame counts");
    }
    if (variation_raw.empty()) {
        throw ValidationError("variation normalization needs at least one sequence");
    }
    std::vector<double> density;
    density.reserve(variation_raw.size());
    for (std::size_t i = 0; i < variation_raw.size(); ++i) {
        if (frame_counts[i] < 2) {
            throw ValidationError("variation density needs at least two frames per sequence");
        }
        density.push_back(variation_raw[i] / std::log(static_cast<double>(frame_counts[i])));
    }
    const auto [lo_it, hi_it] = std::minmax_element(density.begin(), density.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    for (auto& v : density) {
        if (hi == lo) {
            // A flat corpus carries no ordering information; map everything
            // to the top of the range so quality reduces to the other terms.
            v = params.norm_max;
        } else {
            v = params.norm_min +
                (v - lo) / (hi - lo) * (params.norm_max - params.norm_min);
        }
    }
    return density;
}

double quality_score(double challenge, double discrimination, double variation) {
    return challenge * discrimination * variation;
}

std::vector<QualityReport> score_corpus(const Corpus& corpus, const QualityParams& params,
                                        PassPolicy policy, int threads) {
    params.validate();
    const auto trackers = corpus.tracker_names();
    if (trackers.empty()) {
        throw ValidationError("corpus has no attached results to score");
    }
    // Validate serially so failures surface in a fixed order no matter how
    // many worker threads run below.
    for (const auto& seq : corpus.sequences()) {
        const bool annotated =
            std::any_of(seq.gt.frames().begin(), seq.gt.frames().end(),
                        [](const FrameBox& f) { return f.has_value(); });
        if (!annotated) {
            throw ValidationError("sequence \"" + seq.id +
                                  "\" has no annotated frames to evaluate");
        }
        for (const auto& tracker : trackers) {
            const int passes = policy == PassPolicy::first_pass ? 1 : corpus.pass_count();
            for (int pass = 1; pass <= passes; ++pass) {
                if (corpus.result(tracker, pass, seq.id) == nullptr) {
                    throw ValidationError("tracker \"" + tracker +
                                          "\" has no prediction for sequence \"" + seq.id +
                                          "\" in pass " + std::to_string(pass));
                }
            }
        }
    }
    const auto& sequences = corpus.sequences();
    std::vector<QualityReport> reports(sequences.size());
    std::vector<std::size_t> frame_counts(sequences.size());
    parallel_for(sequences.size(), threads, [&](std::size_t i) {
        const SequenceRecord& seq = sequences[i];
        IoUMatrix m = [&] {
            if (policy == PassPolicy::first_pass) {
                return build_iou_matrix(corpus, seq, 1);
            }
            std::vector<IoUMatrix> per_pass;
            per_pass.reserve(static_cast<std::size_t>(corpus.pass_count()));
            for (int pass = 1; pass <= corpus.pass_count(); ++pass) {
                per_pass.push_back(build_iou_matrix(corpus, seq, pass));
            }
            return average_matrices(std::move(per_pass));
        }();
        QualityReport& report = reports[i];
        report.sequence_id = seq.id;
        report.challenge = challenge_degree(m);
        report.discrimination = discriminative_ability(m, params.eta);
        report.variation_raw = variation_mass(m, params.epsilon);
        frame_counts[i] = seq.frame_count();
    });
    std::vector<double> raw;
    raw.reserve(reports.size());
    for (const auto& report : reports) {
        raw.push_back(report.variation_raw);
    }
    const auto density = variation_density(raw, frame_counts, params);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        reports[i].variation = density[i];
        reports[i].quality =
            quality_score(reports[i].challenge, reports[i].discrimination, reports[i].variation);
    }
    return reports;
}

}  // namespace trackbench
