#include "trackbench/selection.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "trackbench/error.hpp"

namespace trackbench {

namespace {

struct Candidate {
    const QualityReport* report{nullptr};
    const SequenceRecord* sequence{nullptr};
};

// Reports joined with their corpus records, ordered by descending quality
// (ties by ascending id).
std::vector<Candidate> ranked_candidates(std::span<const QualityReport> reports,
                                         const Corpus& corpus) {
    if (reports.empty()) {
        throw ValidationError("selection needs at least one quality report");
    }
    std::vector<Candidate> candidates;
    candidates.reserve(reports.size());
    std::set<std::string_view> seen;
    for (const auto& report : reports) {
        if (!seen.insert(report.sequence_id).second) {
            throw ValidationError("duplicate quality report for sequence \"" +
                                  report.sequence_id + "\"");
        }
        candidates.push_back({&report, &corpus.sequence(report.sequence_id)});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.report->quality != b.report->quality) {
            return a.report->quality > b.report->quality;
        }
        return a.report->sequence_id < b.report->sequence_id;
    });
    return candidates;
}

std::pair<Scenario, std::string_view> sub_key(const Candidate& c) {
    return {c.sequence->scenario, c.sequence->sub_scenario};
}

}  // namespace

void SelectionConfig::validate() const {
    if (!(top_fraction > 0.0) || top_fraction > 1.0) {
        throw ValidationError("selection top fraction must lie in (0, 1]");
    }
    if (per_scenario_quota < 1) {
        throw ValidationError("per-scenario quota must be at least 1");
    }
}

std::string_view to_string(SelectionReason reason) {
    return reason == SelectionReason::top_quality ? "top_quality" : "quota_fill";
}

std::vector<std::string> SelectionOutcome::selected_ids() const {
    std::vector<std::string> ids;
    ids.reserve(selected.size());
    for (const auto& entry : selected) {
        ids.push_back(entry.id);
    }
    return ids;
}

bool SelectionOutcome::contains(std::string_view id) const {
    return std::any_of(selected.begin(), selected.end(),
                       [&](const Entry& e) { return e.id == id; });
}

std::vector<std::string> rank_by_quality(std::span<const QualityReport> reports) {
    std::vector<const QualityReport*> order;
    order.reserve(reports.size());
    for (const auto& report : reports) {
        order.push_back(&report);
    }
    std::sort(order.begin(), order.end(), [](const QualityReport* a, const QualityReport* b) {
        if (a->quality != b->quality) {
            return a->quality > b->quality;
        }
        return a->sequence_id < b->sequence_id;
    });
    std::vector<std::string> ids;
    ids.reserve(order.size());
    for (const auto* report : order) {
        ids.push_back(report->sequence_id);
    }
    return ids;
}

std::vector<std::string> dedupe_sub_scenarios(std::span<const std::string> ranked_ids,
                                              const Corpus& corpus) {
    std::set<std::pair<Scenario, std::string_view>> seen;
    std::vector<std::string> kept;
    for (const auto& id : ranked_ids) {
        const SequenceRecord& seq = corpus.sequence(id);
        if (seen.insert({seq.scenario, seq.sub_scenario}).second) {
            kept.push_back(id);
        }
    }
    return kept;
}

SelectionOutcome select_informative(std::span<const QualityReport> reports,
                                    const Corpus& corpus, const SelectionConfig& config) {
    config.validate();
    const auto candidates = ranked_candidates(reports, corpus);
    const auto budget = static_cast<std::size_t>(
        std::floor(config.top_fraction * static_cast<double>(candidates.size())));

    // Phase one: the top-quality slice. By default duplicates of an already
    // seen (scenario, sub-scenario) pair are skipped while walking down the
    // ranking, so the slice holds `budget` distinct pairs. In paper order
    // the slice is cut off first and de-duplicated afterwards, which can
    // leave it smaller than the budget.
    std::vector<const Candidate*> slice;
    std::set<std::pair<Scenario, std::string_view>> used_keys;
    std::set<std::string_view> used_ids;
    if (config.paper_order) {
        for (std::size_t i = 0; i < candidates.size() && i < budget; ++i) {
            const Candidate& c = candidates[i];
            if (!config.dedupe_by_sub_scenario || used_keys.insert(sub_key(c)).second) {
                slice.push_back(&c);
                used_ids.insert(c.report->sequence_id);
            }
        }
    } else {
        for (const Candidate& c : candidates) {
            if (slice.size() >= budget) {
                break;
            }
            if (!config.dedupe_by_sub_scenario || used_keys.insert(sub_key(c)).second) {
                slice.push_back(&c);
                used_ids.insert(c.report->sequence_id);
            }
        }
    }

    SelectionOutcome outcome;
    for (const auto* c : slice) {
        outcome.selected.push_back({c->report->sequence_id, c->sequence->scenario,
                                    SelectionReason::top_quality, c->report->quality});
    }

    // Phase two: top up each scenario to its quota with the next-best unused
    // sequences of that scenario, still honoring the dedupe policy. Nothing
    // is ever removed from a scenario already over quota, and a scenario
    // that runs out of eligible sequences is reported, not failed: filling
    // such a gap would take new footage, which no selection pass can
    // conjure.
    std::map<Scenario, int> counts;
    for (const auto& entry : outcome.selected) {
        ++counts[entry.scenario];
    }
    for (const Scenario scenario : kAllScenarios) {
        int have = counts[scenario];
        for (const Candidate& c : candidates) {
            if (have >= config.per_scenario_quota) {
                break;
            }
            if (c.sequence->scenario != scenario ||
                used_ids.count(c.report->sequence_id) != 0) {
                continue;
            }
            if (config.dedupe_by_sub_scenario && used_keys.count(sub_key(c)) != 0) {
                continue;
            }
            used_ids.insert(c.report->sequence_id);
            used_keys.insert(sub_key(c));
            outcome.selected.push_back({c.report->sequence_id, scenario,
                                        SelectionReason::quota_fill, c.report->quality});
            ++have;
        }
        counts[scenario] = have;
        if (have < config.per_scenario_quota) {
            outcome.unmet_quotas.emplace_back(scenario, config.per_scenario_quota - have);
        }
    }

    std::sort(outcome.selected.begin(), outcome.selected.end(),
              [](const SelectionOutcome::Entry& a, const SelectionOutcome::Entry& b) {
                  if (a.quality != b.quality) {
                      return a.quality > b.quality;
                  }
                  return a.id < b.id;
              });
    for (const auto& entry : outcome.selected) {
        ++outcome.per_scenario_counts[entry.scenario];
    }
    std::sort(outcome.unmet_quotas.begin(), outcome.unmet_quotas.end());
    return outcome;
}

double kendall_tau(std::span<const std::string> ranking_a,
                   std::span<const std::string> ranking_b) {
    if (ranking_a.size() != ranking_b.size()) {
        throw ValidationError("rank correlation needs rankings of equal length");
    }
    const std::size_t n = ranking_a.size();
    if (n < 2) {
        throw ValidationError("rank correlation needs at least two items");
    }
    std::map<std::string_view, std::size_t> position_b;
    for (std::size_t i = 0; i < n; ++i) {
        if (!position_b.emplace(ranking_b[i], i).second) {
            throw ValidationError("rank correlation input repeats item \"" +
                                  ranking_b[i] + "\"");
        }
    }
    std::vector<std::size_t> mapped;
    mapped.reserve(n);
    std::set<std::string_view> seen_a;
    for (const auto& item : ranking_a) {
        if (!seen_a.insert(item).second) {
            throw ValidationError("rank correlation input repeats item \"" + item + "\"");
        }
        const auto it = position_b.find(item);
        if (it == position_b.end()) {
            throw ValidationError("rank correlation item \"" + item +
                                  "\" is missing from the other ranking");
        }
        mapped.push_back(it->second);
    }
    long long concordant = 0;
    long long discordant = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (mapped[i] < mapped[j]) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return static_cast<double>(concordant - discordant) / pairs;
}

RankingComparison ranking_preservation(const Corpus& corpus,
                                       std::span<const std::string> subset_ids,
                                       RankingMetric metric) {
    std::vector<std::string> all_ids;
    all_ids.reserve(corpus.size());
    for (const auto& seq : corpus.sequences()) {
        all_ids.push_back(seq.id);
    }
    RankingComparison comparison;
    comparison.full_ranking = rank_trackers(corpus, all_ids, metric);
    comparison.subset_ranking = rank_trackers(corpus, subset_ids, metric);
    std::vector<std::string> full_names;
    std::vector<std::string> subset_names;
    for (const auto& entry : comparison.full_ranking) {
        full_names.push_back(entry.tracker);
    }
    for (const auto& entry : comparison.subset_ranking) {
        subset_names.push_back(entry.tracker);
    }
    comparison.tau = kendall_tau(full_names, subset_names);
    return comparison;
}

}  // namespace trackbench
