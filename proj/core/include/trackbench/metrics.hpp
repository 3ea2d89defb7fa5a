#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trackbench/corpus.hpp"

namespace trackbench {

// Per-frame overlap scores of every tracker on one sequence, trackers by
// rows. Frames without ground truth are dropped for all rows alike, so all
// rows share the same kept-frame axis.
class IoUMatrix {
public:
    IoUMatrix(std::string sequence_id, std::vector<std::string> tracker_ids,
              std::size_t frame_count, std::vector<double> values);

    [[nodiscard]] std::size_t tracker_count() const { return tracker_ids_.size(); }
    [[nodiscard]] std::size_t frame_count() const { return frame_count_; }
    [[nodiscard]] double at(std::size_t tracker, std::size_t frame) const {
        return values_[tracker * frame_count_ + frame];
    }
    [[nodiscard]] std::span<const double> row(std::size_t tracker) const {
        return {values_.data() + tracker * frame_count_, frame_count_};
    }
    [[nodiscard]] const std::vector<std::string>& tracker_ids() const { return tracker_ids_; }
    [[nodiscard]] const std::string& sequence_id() const { return sequence_id_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }

private:
    std::string sequence_id_;
    std::vector<std::string> tracker_ids_;
    std::size_t frame_count_{0};
    std::vector<double> values_;
};

// Builds the overlap matrix of one sequence from (tracker id, prediction)
// pairs, in the given row order. Errors when a prediction length disagrees
// with the sequence or no frame carries ground truth.
[[nodiscard]] IoUMatrix build_iou_matrix(
    const SequenceRecord& seq,
    const std::vector<std::pair<std::string, const Trajectory*>>& predictions);

// Same, drawing all trackers of the corpus (canonical name order) at the
// given pass.
[[nodiscard]] IoUMatrix build_iou_matrix(const Corpus& corpus, const SequenceRecord& seq,
                                         int pass);

// Mean overlap of one tracker row.
[[nodiscard]] double miou(const IoUMatrix& m, std::size_t tracker);

// Mean of per-tracker scores; the dataset-level headline number.
[[nodiscard]] double mean_score(std::span<const double> per_tracker_scores);

// Population standard deviation over the per-tracker scores divided by their
// mean, as a percentage. Low values mean the benchmark barely separates the
// trackers. Errors when the mean is zero.
[[nodiscard]] double nstd_score(std::span<const double> per_tracker_scores);

// Success AUC: fraction of frames whose overlap strictly exceeds each
// threshold 0, step, 2*step, ..., 1, averaged over the thresholds.
[[nodiscard]] double success_auc(std::span<const double> overlaps, double step = 0.05);

// Fraction of sequences whose error strictly exceeds each threshold, plus
// the trapezoidal area under that curve.
struct ChallengeCurve {
    std::vector<double> thresholds;
    std::vector<double> fractions;
    double auc{0.0};
};

[[nodiscard]] ChallengeCurve challenge_curve(std::span<const double> errors,
                                             double step = 0.01);

// Mean of per-pass scores of one tracker on one sequence.
[[nodiscard]] double aggregate_passes(std::span<const double> per_pass_scores);

// Metric used to order trackers.
enum class RankingMetric { miou, success_auc };

[[nodiscard]] std::optional<RankingMetric> parse_ranking_metric(std::string_view name);
[[nodiscard]] std::string_view to_string(RankingMetric metric);

struct TrackerScore {
    std::string tracker;
    double score{0.0};
};

// Ranks every tracker of the corpus over the given sequences: the chosen
// metric per sequence and pass, passes averaged, then the mean over
// sequences. Descending score, ties broken by name.
[[nodiscard]] std::vector<TrackerScore> rank_trackers(const Corpus& corpus,
                                                      std::span<const std::string> sequence_ids,
                                                      RankingMetric metric);

// Per-sequence difficulty for challenge curves: one minus the mean overlap
// across all trackers and passes, in corpus sequence order.
[[nodiscard]] std::vector<double> sequence_miou_errors(const Corpus& corpus);

}  // namespace trackbench
