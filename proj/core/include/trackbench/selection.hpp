#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trackbench/corpus.hpp"
#include "trackbench/metrics.hpp"
#include "trackbench/quality.hpp"

namespace trackbench {

// Knobs of the informative-subset selection.
struct SelectionConfig {
    double top_fraction{0.10};          // share of the corpus taken from the top
    int per_scenario_quota{20};         // minimum sequences per scenario, supply permitting
    bool dedupe_by_sub_scenario{true};  // keep one sequence per (scenario, sub-scenario)
    bool paper_order{false};            // cut by fraction first, dedupe within the cut
    RankingMetric ranking_metric{RankingMetric::miou};

    // Throws ValidationError when top_fraction is outside (0, 1] or the
    // quota is negative.
    void validate() const;
};

enum class SelectionReason { top_quality, quota_fill };

[[nodiscard]] std::string_view to_string(SelectionReason reason);

// Result of a selection run, ordered by descending quality (ties by id).
struct SelectionOutcome {
    struct Entry {
        std::string id;
        Scenario scenario{Scenario::human_body};
        SelectionReason reason{SelectionReason::top_quality};
        double quality{0.0};
    };

    std::vector<Entry> selected;
    std::map<Scenario, int> per_scenario_counts;
    // Scenarios whose quota could not be met from the corpus, with the
    // shortfall.
    std::vector<std::pair<Scenario, int>> unmet_quotas;

    [[nodiscard]] std::vector<std::string> selected_ids() const;
    [[nodiscard]] bool contains(std::string_view id) const;
};

// Sequence ids ordered by descending quality, ties broken by ascending id.
[[nodiscard]] std::vector<std::string> rank_by_quality(std::span<const QualityReport> reports);

// Keeps the first (highest ranked) sequence of every (scenario,
// sub-scenario) pair, preserving order.
[[nodiscard]] std::vector<std::string> dedupe_sub_scenarios(std::span<const std::string> ranked_ids,
                                                            const Corpus& corpus);

// Picks the informative subset: the top slice by quality, de-duplicated by
// sub-scenario, then topped up per scenario until each quota is met or the
// corpus runs out.
[[nodiscard]] SelectionOutcome select_informative(std::span<const QualityReport> reports,
                                                  const Corpus& corpus,
                                                  const SelectionConfig& config);

// Rank correlation of two orderings of the same items, in [-1, 1]:
// (concordant - discordant) / (n * (n - 1) / 2). Errors when the rankings
// are not permutations of each other or n < 2.
[[nodiscard]] double kendall_tau(std::span<const std::string> ranking_a,
                                 std::span<const std::string> ranking_b);

// Tracker ranking on the full corpus versus on a subset, and how much the
// order survived.
struct RankingComparison {
    std::vector<TrackerScore> full_ranking;
    std::vector<TrackerScore> subset_ranking;
    double tau{0.0};
};

[[nodiscard]] RankingComparison ranking_preservation(const Corpus& corpus,
                                                     std::span<const std::string> subset_ids,
                                                     RankingMetric metric);

}  // namespace trackbench
