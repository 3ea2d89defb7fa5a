#include "trackbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "trackbench/error.hpp"

namespace trackbench {

namespace {

// Number of thresholds for a curve sampled at 0, step, ..., 1. The step must
// divide the unit interval evenly.
std::size_t threshold_count(double step, const char* what) {
    if (!(step > 0.0) || step > 1.0) {
        throw ValidationError(std::string(what) + " step must lie in (0, 1]");
    }
    const double slots = 1.0 / step;
    const auto rounded = static_cast<long long>(std::llround(slots));
    if (std::abs(slots - static_cast<double>(rounded)) > 1e-9) {
        throw ValidationError(std::string(what) + " step must divide 1 evenly");
    }
    return static_cast<std::size_t>(rounded) + 1;
}

double mean_of(std::span<const double> values) {
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

// Per-pass, per-tracker scores over the given sequences, averaged across
// passes. Rows follow corpus tracker order.
std::vector<double> pass_averaged_scores(const Corpus& corpus,
                                         std::span<const std::string> sequence_ids,
                                         RankingMetric metric) {
    const auto trackers = corpus.tracker_names();
    if (trackers.empty()) {
        throw ValidationError("corpus has no attached results to rank");
    }
    if (sequence_ids.empty()) {
        throw ValidationError("tracker ranking needs at least one sequence");
    }
    std::vector<double> sums(trackers.size(), 0.0);
    for (const auto& id : sequence_ids) {
        const SequenceRecord& seq = corpus.sequence(id);
        std::vector<std::vector<double>> by_tracker(trackers.size());
        for (int pass = 1; pass <= corpus.pass_count(); ++pass) {
            const IoUMatrix m = build_iou_matrix(corpus, seq, pass);
            for (std::size_t t = 0; t < trackers.size(); ++t) {
                const double score = metric == RankingMetric::miou
                                         ? miou(m, t)
                                         : success_auc(m.row(t));
                by_tracker[t].push_back(score);
            }
        }
        for (std::size_t t = 0; t < trackers.size(); ++t) {
            sums[t] += aggregate_passes(by_tracker[t]);
        }
    }
    for (auto& sum : sums) {
        sum /= static_cast<double>(sequence_ids.size());
    }
    return sums;
}

}  // namespace

IoUMatrix::IoUMatrix(std::string sequence_id, std::vector<std::string> tracker_ids,
                     std::size_t frame_count, std::vector<double> values)
    : sequence_id_(std::move(sequence_id)),
      tracker_ids_(std::move(tracker_ids)),
      frame_count_(frame_count),
      values_(std::move(values)) {
    if (tracker_ids_.empty()) {
        throw ValidationError("overlap matrix needs at least one tracker row");
    }
    if (frame_count_ == 0) {
        throw ValidationError("overlap matrix for sequence \"" + sequence_id_ +
                              "\" has no evaluable frames");
    }
    if (values_.size() != tracker_ids_.size() * frame_count_) {
        throw ValidationError("overlap matrix value count " + std::to_string(values_.size()) +
                              " does not match " + std::to_string(tracker_ids_.size()) + "x" +
                              std::to_string(frame_count_));
    }
}

IoUMatrix build_iou_matrix(
    const SequenceRecord& seq,
    const std::vector<std::pair<std::string, const Trajectory*>>& predictions) {
    if (predictions.empty()) {
        throw ValidationError("sequence \"" + seq.id + "\" has no predictions to evaluate");
    }
    std::vector<std::size_t> kept;
    for (std::size_t f = 0; f < seq.gt.length(); ++f) {
        if (seq.gt.frame(f).has_value()) {
            kept.push_back(f);
        }
    }
    if (kept.empty()) {
        throw ValidationError("sequence \"" + seq.id +
                              "\" has no annotated frames to evaluate");
    }
    std::vector<std::string> tracker_ids;
    tracker_ids.reserve(predictions.size());
    std::vector<double> values;
    values.reserve(predictions.size() * kept.size());
    for (const auto& [tracker, trajectory] : predictions) {
        if (trajectory == nullptr) {
            throw ValidationError("tracker \"" + tracker + "\" has no prediction for sequence \"" +
                                  seq.id + "\"");
        }
        if (trajectory->length() != seq.gt.length()) {
            throw ValidationError("tracker \"" + tracker + "\" predicts " +
                                  std::to_string(trajectory->length()) +
                                  " frames for sequence \"" + seq.id + "\", expected " +
                                  std::to_string(seq.gt.length()));
        }
        tracker_ids.push_back(tracker);
        for (const std::size_t f : kept) {
            values.push_back(*frame_iou(seq.gt.frame(f), trajectory->frame(f)));
        }
    }
    return IoUMatrix(seq.id, std::move(tracker_ids), kept.size(), std::move(values));
}

IoUMatrix build_iou_matrix(const Corpus& corpus, const SequenceRecord& seq, int pass) {
    std::vector<std::pair<std::string, const Trajectory*>> predictions;
    for (const auto& tracker : corpus.tracker_names()) {
        predictions.emplace_back(tracker, corpus.result(tracker, pass, seq.id));
    }
    return build_iou_matrix(seq, predictions);
}

double miou(const IoUMatrix& m, std::size_t tracker) {
    return mean_of(m.row(tracker));
}

double mean_score(std::span<const double> per_tracker_scores) {
    if (per_tracker_scores.empty()) {
        throw ValidationError("mean score needs at least one tracker");
    }
    return mean_of(per_tracker_scores);
}

double nstd_score(std::span<const double> per_tracker_scores) {
    if (per_tracker_scores.empty()) {
        throw ValidationError("normalized standard deviation needs at least one tracker");
    }
    const double mean = mean_of(per_tracker_scores);
    if (mean == 0.0) {
        throw ValidationError("normalized standard deviation is undefined for a zero mean score");
    }
    double accum = 0.0;
    for (const double v : per_tracker_scores) {
        accum += (v - mean) * (v - mean);
    }
    const double sigma = std::sqrt(accum / static_cast<double>(per_tracker_scores.size()));
    return sigma / mean * 100.0;
}

double success_auc(std::span<const double> overlaps, double step) {
    if (overlaps.empty()) {
        throw ValidationError("success curve needs at least one overlap score");
    }
    const std::size_t count = threshold_count(step, "success curve");
    double total = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double threshold = static_cast<double>(k) / static_cast<double>(count - 1);
        std::size_t above = 0;
        for (const double v : overlaps) {
            if (v > threshold) {
                ++above;
            }
        }
        total += static_cast<double>(above) / static_cast<double>(overlaps.size());
    }
    return total / static_cast<double>(count);
}

ChallengeCurve challenge_curve(std::span<const double> errors, double step) {
    if (errors.empty()) {
        throw ValidationError("challenge curve needs at least one sequence error");
    }
    for (const double e : errors) {
        if (!(e >= 0.0) || !(e <= 1.0)) {
            throw ValidationError("challenge curve errors must lie in [0, 1]");
        }
    }
    const std::size_t count = threshold_count(step, "challenge curve");
    ChallengeCurve curve;
    curve.thresholds.reserve(count);
    curve.fractions.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double threshold = static_cast<double>(k) / static_cast<double>(count - 1);
        std::size_t above = 0;
        for (const double e : errors) {
            if (e > threshold) {
                ++above;
            }
        }
        curve.thresholds.push_back(threshold);
        curve.fractions.push_back(static_cast<double>(above) /
                                  static_cast<double>(errors.size()));
    }
    for (std::size_t k = 0; k + 1 < count; ++k) {
        const double width = curve.thresholds[k + 1] - curve.thresholds[k];
        curve.auc += 0.5 * (curve.fractions[k] + curve.fractions[k + 1]) * width;
    }
    return curve;
}

double aggregate_passes(std::span<const double> per_pass_scores) {
    if (per_pass_scores.empty()) {
        throw ValidationError("pass aggregation needs at least one pass score");
    }
    return mean_of(per_pass_scores);
}

std::optional<RankingMetric> parse_ranking_metric(std::string_view name) {
    if (name == "miou") {
        return RankingMetric::miou;
    }
    if (name == "success_auc") {
        return RankingMetric::success_auc;
    }
    return std::nullopt;
}

std::string_view to_string(RankingMetric metric) {
    return metric == RankingMetric::miou ? "miou" : "success_auc";
}

std::vector<TrackerScore> rank_trackers(const Corpus& corpus,
                                        std::span<const std::string> sequence_ids,
                                        RankingMetric metric) {
    const auto trackers = corpus.tracker_names();
    const auto scores = pass_averaged_scores(corpus, sequence_ids, metric);
    std::vector<TrackerScore> ranking;
    ranking.reserve(trackers.size());
    for (std::size_t t = 0; t < trackers.size(); ++t) {
        ranking.push_back({trackers[t], scores[t]});
    }
    std::sort(ranking.begin(), ranking.end(), [](const TrackerScore& a, const TrackerScore& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        return a.tracker < b.tracker;
    });
    return ranking;
}

std::vector<double> sequence_miou_errors(const Corpus& corpus) {
    const auto trackers = corpus.tracker_names();
    if (trackers.empty()) {
        throw ValidationError("corpus has no attached results to measure difficulty");
    }
    std::vector<double> errors;
    errors.reserve(corpus.size());
    for (const auto& seq : corpus.sequences()) {
        std::vector<double> tracker_sums(trackers.size(), 0.0);
        for (int pass = 1; pass <= corpus.pass_count(); ++pass) {
            const IoUMatrix m = build_iou_matrix(corpus, seq, pass);
            for (std::size_t t = 0; t < trackers.size(); ++t) {
                tracker_sums[t] += miou(m, t);
            }
        }
        double tracker_mean = 0.0;
        for (const double sum : tracker_sums) {
            tracker_mean += sum / static_cast<double>(corpus.pass_count());
        }
        tracker_mean /= static_cast<double>(trackers.size());
        errors.push_back(1.0 - tracker_mean);
    }
    return errors;
}

}  // namespace trackbench
