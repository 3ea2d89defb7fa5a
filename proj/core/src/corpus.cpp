#include "trackbench/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "trackbench/error.hpp"

namespace trackbench {

namespace {

constexpr std::array<std::string_view, 9> kScenarioNames{
    "human-body", "human-part", "animal",     "vehicle", "sign-and-logo",
    "sport-ball", "3d-object",  "uav",        "cartoon",
};

std::string to_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

void validate_sequences(const std::vector<SequenceRecord>& sequences) {
    std::set<std::string_view> seen;
    for (const auto& seq : sequences) {
        if (seq.id.empty()) {
            throw ValidationError("sequence with empty id");
        }
        if (!seen.insert(seq.id).second) {
            throw ValidationError("duplicate sequence id \"" + seq.id + "\"");
        }
        if (seq.sub_scenario.empty()) {
            throw ValidationError("sequence \"" + seq.id + "\" has an empty sub-scenario");
        }
    }
}

void validate_results(const std::vector<SequenceRecord>& sequences,
                      const std::vector<ResultSet>& results, int pass_count) {
    std::map<std::string_view, std::size_t> frames_by_id;
    for (const auto& seq : sequences) {
        frames_by_id.emplace(seq.id, seq.frame_count());
    }
    std::set<std::pair<std::string_view, int>> seen;
    std::map<std::string_view, std::set<int>> passes_by_tracker;
    for (const auto& run : results) {
        if (run.tracker.empty()) {
            throw ValidationError("result set with empty tracker name");
        }
        if (run.pass_index < 1) {
            throw ValidationError("result set for tracker \"" + run.tracker +
                                  "\" has pass index " + std::to_string(run.pass_index) +
                                  ", expected at least 1");
        }
        if (!seen.insert({run.tracker, run.pass_index}).second) {
            throw ValidationError("duplicate result set for tracker \"" + run.tracker +
                                  "\" pass " + std::to_string(run.pass_index));
        }
        passes_by_tracker[run.tracker].insert(run.pass_index);
        for (const auto& [id, trajectory] : run.trajectories) {
            const auto it = frames_by_id.find(id);
            if (it == frames_by_id.end()) {
                throw ValidationError("result set for tracker \"" + run.tracker +
                                      "\" references unknown sequence \"" + id + "\"");
            }
            if (trajectory.length() != it->second) {
                throw ValidationError(
                    "tracker \"" + run.tracker + "\" pass " + std::to_string(run.pass_index) +
                    " predicts " + std::to_string(trajectory.length()) + " frames for sequence \"" +
                    id + "\", expected " + std::to_string(it->second));
            }
        }
    }
    for (const auto& [tracker, passes] : passes_by_tracker) {
        if (static_cast<int>(passes.size()) != pass_count || *passes.rbegin() != pass_count) {
            throw ValidationError("tracker \"" + std::string(tracker) + "\" covers " +
                                  std::to_string(passes.size()) + " pass(es) up to " +
                                  std::to_string(*passes.rbegin()) + ", expected passes 1.." +
                                  std::to_string(pass_count));
        }
    }
}

}  // namespace

std::string_view to_string(Scenario scenario) {
    return kScenarioNames[static_cast<std::size_t>(scenario)];
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    const std::string lowered = to_lower(name);
    for (std::size_t i = 0; i < kScenarioNames.size(); ++i) {
        if (lowered == kScenarioNames[i]) {
            return kAllScenarios[i];
        }
    }
    return std::nullopt;
}

std::string scenario_names() {
    std::string out;
    for (const auto name : kScenarioNames) {
        if (!out.empty()) {
            out += ", ";
        }
        out += name;
    }
    return out;
}

Corpus::Corpus(std::vector<SequenceRecord> sequences, std::vector<ResultSet> results)
    : sequences_(std::move(sequences)), results_(std::move(results)) {
    std::sort(sequences_.begin(), sequences_.end(),
              [](const SequenceRecord& a, const SequenceRecord& b) { return a.id < b.id; });
    validate_sequences(sequences_);
    std::sort(results_.begin(), results_.end(), [](const ResultSet& a, const ResultSet& b) {
        return std::tie(a.tracker, a.pass_index) < std::tie(b.tracker, b.pass_index);
    });
    for (const auto& run : results_) {
        pass_count_ = std::max(pass_count_, run.pass_index);
    }
    validate_results(sequences_, results_, pass_count_);
}

const SequenceRecord* Corpus::find_sequence(std::string_view id) const {
    const auto it = std::lower_bound(
        sequences_.begin(), sequences_.end(), id,
        [](const SequenceRecord& s, std::string_view key) { return s.id < key; });
    if (it == sequences_.end() || it->id != id) {
        return nullptr;
    }
    return &*it;
}

const SequenceRecord& Corpus::sequence(std::string_view id) const {
    const SequenceRecord* found = find_sequence(id);
    if (found == nullptr) {
        throw ValidationError("unknown sequence id \"" + std::string(id) + "\"");
    }
    return *found;
}

std::vector<std::string> Corpus::tracker_names() const {
    std::vector<std::string> names;
    for (const auto& run : results_) {
        if (names.empty() || names.back() != run.tracker) {
            names.push_back(run.tracker);
        }
    }
    return names;
}

const Trajectory* Corpus::result(std::string_view tracker, int pass,
                                 std::string_view sequence_id) const {
    const auto it = std::find_if(results_.begin(), results_.end(), [&](const ResultSet& run) {
        return run.tracker == tracker && run.pass_index == pass;
    });
    if (it == results_.end()) {
        return nullptr;
    }
    const auto traj = it->trajectories.find(std::string(sequence_id));
    if (traj == it->trajectories.end()) {
        return nullptr;
    }
    return &traj->second;
}

Corpus Corpus::with_results(std::vector<ResultSet> results) const {
    return Corpus(sequences_, std::move(results));
}

}  // namespace trackbench
