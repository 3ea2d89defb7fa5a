#include "trackbench/cli/app.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trackbench/cli/plots.hpp"
#include "trackbench/cli/tables.hpp"
#include "trackbench/corpus.hpp"
#include "trackbench/error.hpp"
#include "trackbench/io.hpp"
#include "trackbench/metrics.hpp"
#include "trackbench/quality.hpp"
#include "trackbench/selection.hpp"
#include "trackbench/synth.hpp"

namespace trackbench::cli {
namespace {

namespace fs = std::filesystem;

// Flag misuse that the option parser cannot express on its own; mapped to
// the usage exit status.
struct UsageError : Error {
    using Error::Error;
};

std::string trim_copy(std::string_view text) {
    const char* whitespace = " \t\r\n";
    const auto begin = text.find_first_not_of(whitespace);
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = text.find_last_not_of(whitespace);
    return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double flag_double(std::string_view token, const std::string& flag) {
    double value{};
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError(flag + " expects a number, got '" + std::string(token) + "'");
    }
    return value;
}

int flag_int(std::string_view token, const std::string& flag) {
    int value{};
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError(flag + " expects an integer, got '" + std::string(token) + "'");
    }
    return value;
}

RankingMetric metric_from(const std::string& name) {
    const auto metric = parse_ranking_metric(name);
    if (!metric) {
        throw UsageError("unknown --ranking-metric '" + name + "'; known: miou, success_auc");
    }
    return *metric;
}

std::vector<std::string> all_sequence_ids(const Corpus& corpus) {
    std::vector<std::string> ids;
    ids.reserve(corpus.size());
    for (const auto& seq : corpus.sequences()) {
        ids.push_back(seq.id);
    }
    return ids;
}

Corpus load_corpus(const std::string& manifest, const std::string& results) {
    Corpus bare = load_manifest(manifest);
    auto runs = load_results(results, bare);
    return bare.with_results(std::move(runs));
}

// Label a corpus by its manifest's directory, e.g. "runs/itb/manifest.json"
// becomes "itb".
std::string corpus_label(const std::string& manifest) {
    const fs::path parent = fs::path(manifest).parent_path();
    const std::string name = parent.filename().string();
    if (name.empty() || name == "." || name == "..") {
        return "corpus";
    }
    return name;
}

std::string safe_file_stem(const std::string& name) {
    std::string safe;
    safe.reserve(name.size());
    for (char c : name) {
        const bool keep = std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-' ||
                          c == '_' || c == '.';
        safe += keep ? c : '-';
    }
    if (safe.empty()) {
        safe = "corpus";
    }
    return safe;
}

void sort_ranked(std::vector<TrackerScore>& scores) {
    std::sort(scores.begin(), scores.end(), [](const TrackerScore& a, const TrackerScore& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        return a.tracker < b.tracker;
    });
}

nlohmann::json ranking_json(const std::vector<TrackerScore>& scores) {
    auto array = nlohmann::json::array();
    for (const auto& entry : scores) {
        array.push_back({{"tracker", entry.tracker}, {"score", entry.score}});
    }
    return array;
}

void write_json(const fs::path& file, const nlohmann::json& value) {
    write_text(file, value.dump(2) + "\n");
}

// Per-(tracker, sequence) overlap table: header "tracker,sequence,miou",
// values in [0, 1]. Every tracker must cover the same sequences. Returns
// per-tracker means in tracker-name order.
std::vector<TrackerScore> load_precomputed(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + file + "'");
    }
    std::map<std::string, std::map<std::string, double>> by_tracker;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string trimmed = trim_copy(line);
        if (trimmed.empty()) {
            continue;
        }
        auto fields = split(trimmed, ',');
        for (auto& field : fields) {
            field = trim_copy(field);
        }
        if (!saw_header) {
            if (fields != std::vector<std::string>{"tracker", "sequence", "miou"}) {
                throw ParseError("'" + file + "' line " + std::to_string(line_no) +
                                 ": header must be 'tracker,sequence,miou', got '" + trimmed +
                                 "'");
            }
            saw_header = true;
            continue;
        }
        if (fields.size() != 3) {
            throw ParseError("'" + file + "' line " + std::to_string(line_no) + ": expected " +
                             "3 fields, got " + std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty()) {
            throw ParseError("'" + file + "' line " + std::to_string(line_no) +
                             ": empty tracker or sequence name");
        }
        double value{};
        const char* begin = fields[2].data();
        const char* end = begin + fields[2].size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw ParseError("'" + file + "' line " + std::to_string(line_no) +
                             ": overlap is not a number: '" + fields[2] + "'");
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ParseError("'" + file + "' line " + std::to_string(line_no) +
                             ": overlap outside [0, 1]: " + fields[2]);
        }
        if (!by_tracker[fields[0]].emplace(fields[1], value).second) {
            throw ParseError("'" + file + "' line " + std::to_string(line_no) +
                             ": duplicate entry for tracker '" + fields[0] + "' sequence '" +
                             fields[1] + "'");
        }
    }
    if (!saw_header) {
        throw ParseError("'" + file + "' is empty");
    }
    if (by_tracker.empty()) {
        throw ParseError("'" + file + "' has no data rows");
    }
    const auto& reference = *by_tracker.begin();
    for (const auto& [tracker, sequences] : by_tracker) {
        const bool same = sequences.size() == reference.second.size() &&
                          std::equal(sequences.begin(), sequences.end(),
                                     reference.second.begin(),
                                     [](const auto& a, const auto& b) { return a.first == b.first; });
        if (!same) {
            throw ValidationError("tracker '" + tracker + "' covers different sequences than '" +
                                  reference.first + "' in '" + file + "'");
        }
    }
    std::vector<TrackerScore> scores;
    scores.reserve(by_tracker.size());
    for (const auto& [tracker, sequences] : by_tracker) {
        double sum = 0.0;
        for (const auto& [sequence, value] : sequences) {
            sum += value;
        }
        scores.push_back({tracker, sum / static_cast<double>(sequences.size())});
    }
    return scores;
}

struct SynthOptions {
    std::string out;
    SynthSpec spec;
    int passes{3};
    std::vector<double> noise;
    std::string frames;
    std::string mix;
};

int run_synth(const SynthOptions& opt) {
    SynthSpec spec = opt.spec;
    spec.n_passes = opt.passes;
    spec.tracker_noise = opt.noise;
    if (!opt.frames.empty()) {
        const auto colon = opt.frames.find(':');
        if (colon == std::string::npos) {
            throw UsageError("--frames expects MIN:MAX, got '" + opt.frames + "'");
        }
        spec.frames_range.first = flag_int(opt.frames.substr(0, colon), "--frames");
        spec.frames_range.second = flag_int(opt.frames.substr(colon + 1), "--frames");
    }
    if (!opt.mix.empty()) {
        for (const auto& part : split(opt.mix, ',')) {
            const auto eq = part.find('=');
            if (eq == std::string::npos) {
                throw UsageError("--scenario-mix expects name=weight pairs, got '" + part + "'");
            }
            const std::string name = trim_copy(part.substr(0, eq));
            const auto scenario = parse_scenario(name);
            if (!scenario) {
                throw UsageError("unknown scenario '" + name + "' in --scenario-mix; known: " +
                                 scenario_names());
            }
            spec.scenario_mix[*scenario] = flag_double(trim_copy(part.substr(eq + 1)),
                                                       "--scenario-mix");
        }
    }
    const Corpus corpus = generate_corpus(spec);
    save_corpus(corpus, opt.out);
    std::cout << "wrote " << fs::path(opt.out).generic_string() << " (" << corpus.size()
              << " sequences, " << corpus.tracker_names().size() << " trackers, "
              << corpus.pass_count() << " passes)\n";
    return 0;
}

struct ScoreOptions {
    std::string manifest;
    std::string results;
    std::string out;
    QualityParams params;
    int threads{0};
    std::string pass_policy{"first"};
};

int run_score(const ScoreOptions& opt) {
    const Corpus corpus = load_corpus(opt.manifest, opt.results);
    const PassPolicy policy =
        opt.pass_policy == "mean" ? PassPolicy::mean_over_passes : PassPolicy::first_pass;
    const auto reports = score_corpus(corpus, opt.params, policy, opt.threads);
    fs::create_directories(opt.out);
    const fs::path out_file = fs::path(opt.out) / "quality.json";
    save_quality({opt.params, reports}, out_file);
    std::cout << "wrote " << out_file.generic_string() << " (" << reports.size()
              << " sequences)\n";
    return 0;
}

struct SelectOptions {
    std::string manifest;
    std::string quality;
    std::string out;
    std::string results;
    SelectionConfig config;
    bool no_dedupe{false};
    std::string metric{"miou"};
};

int run_select(const SelectOptions& opt) {
    SelectionConfig config = opt.config;
    config.dedupe_by_sub_scenario = !opt.no_dedupe;
    config.ranking_metric = metric_from(opt.metric);

    const Corpus bare = load_manifest(opt.manifest);
    const QualityFile quality = load_quality(opt.quality);
    const SelectionOutcome outcome = select_informative(quality.reports, bare, config);
    fs::create_directories(opt.out);

    nlohmann::json summary;
    summary["config"] = {{"top_fraction", config.top_fraction},
                         {"per_scenario_quota", config.per_scenario_quota},
                         {"dedupe_by_sub_scenario", config.dedupe_by_sub_scenario},
                         {"paper_order", config.paper_order},
                         {"ranking_metric", std::string(to_string(config.ranking_metric))}};
    auto selected = nlohmann::json::array();
    for (const auto& entry : outcome.selected) {
        selected.push_back({{"id", entry.id},
                            {"scenario", std::string(to_string(entry.scenario))},
                            {"reason", std::string(to_string(entry.reason))},
                            {"quality", entry.quality}});
    }
    summary["selected"] = selected;
    auto counts = nlohmann::json::object();
    for (const auto& [scenario, count] : outcome.per_scenario_counts) {
        counts[std::string(to_string(scenario))] = count;
    }
    summary["per_scenario_counts"] = counts;
    auto unmet = nlohmann::json::array();
    for (const auto& [scenario, shortfall] : outcome.unmet_quotas) {
        unmet.push_back({{"scenario", std::string(to_string(scenario))},
                         {"shortfall", shortfall}});
    }
    summary["unmet_quotas"] = unmet;
    write_json(fs::path(opt.out) / "selection.json", summary);

    std::vector<std::vector<std::string>> csv_rows;
    csv_rows.reserve(outcome.selected.size());
    for (const auto& entry : outcome.selected) {
        csv_rows.push_back({entry.id, std::string(to_string(entry.scenario)),
                            std::string(to_string(entry.reason)), format_double(entry.quality)});
    }
    write_csv(fs::path(opt.out) / "selection.csv", {"id", "scenario", "reason", "quality"},
              csv_rows);

    std::vector<std::vector<std::string>> table_rows;
    for (const Scenario scenario : kAllScenarios) {
        const auto it = outcome.per_scenario_counts.find(scenario);
        const int count = it == outcome.per_scenario_counts.end() ? 0 : it->second;
        int shortfall = 0;
        for (const auto& [unmet_scenario, unmet_count] : outcome.unmet_quotas) {
            if (unmet_scenario == scenario) {
                shortfall = unmet_count;
            }
        }
        table_rows.push_back({std::string(to_string(scenario)), std::to_string(count),
                              std::to_string(shortfall)});
    }
    write_text(fs::path(opt.out) / "scenario_counts.txt",
               render_table({"scenario", "selected", "shortfall"}, table_rows));

    std::cout << "wrote " << (fs::path(opt.out) / "selection.json").generic_string() << " ("
              << outcome.selected.size() << " of " << bare.size() << " sequences)\n";

    if (!opt.results.empty()) {
        const Corpus corpus = bare.with_results(load_results(opt.results, bare));
        const auto subset = outcome.selected_ids();
        const RankingComparison comparison =
            ranking_preservation(corpus, subset, config.ranking_metric);
        nlohmann::json ranking;
        ranking["tau"] = comparison.tau;
        ranking["full_ranking"] = ranking_json(comparison.full_ranking);
        ranking["subset_ranking"] = ranking_json(comparison.subset_ranking);
        write_json(fs::path(opt.out) / "ranking.json", ranking);
        std::cout << "wrote " << (fs::path(opt.out) / "ranking.json").generic_string() << " (tau "
                  << format_fixed(comparison.tau, 3) << ")\n";
    }
    return 0;
}

struct EvaluateOptions {
    std::string manifest;
    std::string results;
    std::string precomputed;
    std::string out;
    std::string name;
    std::string metric{"miou"};
};

int run_evaluate(const EvaluateOptions& opt) {
    std::vector<TrackerScore> ranked;
    std::string metric_name;
    std::string label = opt.name;
    if (!opt.precomputed.empty()) {
        if (!opt.manifest.empty() || !opt.results.empty()) {
            throw UsageError("--precomputed cannot be combined with --manifest/--results");
        }
        ranked = load_precomputed(opt.precomputed);
        metric_name = "miou";
        if (label.empty()) {
            label = fs::path(opt.precomputed).stem().string();
            if (label.empty()) {
                label = "corpus";
            }
        }
    } else {
        if (opt.manifest.empty() || opt.results.empty()) {
            throw UsageError(
                "evaluate needs either --precomputed or both --manifest and --results");
        }
        const Corpus corpus = load_corpus(opt.manifest, opt.results);
        const RankingMetric metric = metric_from(opt.metric);
        ranked = rank_trackers(corpus, all_sequence_ids(corpus), metric);
        metric_name = std::string(to_string(metric));
        if (label.empty()) {
            label = corpus_label(opt.manifest);
        }
    }
    sort_ranked(ranked);

    std::vector<double> values;
    values.reserve(ranked.size());
    for (const auto& entry : ranked) {
        values.push_back(entry.score);
    }
    const double mean = mean_score(values);
    const double nstd = nstd_score(values);

    fs::create_directories(opt.out);

    std::vector<std::vector<std::string>> csv_rows;
    csv_rows.reserve(ranked.size());
    for (const auto& entry : ranked) {
        csv_rows.push_back({entry.tracker, format_double(entry.score)});
    }
    write_csv(fs::path(opt.out) / "evaluation.csv", {"tracker", "score"}, csv_rows);

    nlohmann::json summary;
    summary["name"] = label;
    summary["metric"] = metric_name;
    summary["mean"] = mean;
    summary["nstd"] = nstd;
    summary["trackers"] = ranking_json(ranked);
    write_json(fs::path(opt.out) / "evaluation.json", summary);

    std::vector<TrackerScore> by_name(ranked);
    std::sort(by_name.begin(), by_name.end(),
              [](const TrackerScore& a, const TrackerScore& b) { return a.tracker < b.tracker; });
    std::vector<std::string> header{"dataset"};
    std::vector<std::string> row{label};
    for (const auto& entry : by_name) {
        header.push_back(entry.tracker);
        row.push_back(format_fixed(entry.score * 100.0, 1));
    }
    header.push_back("mean");
    row.push_back(format_fixed(mean * 100.0, 1));
    header.push_back("nstd");
    row.push_back(format_fixed(nstd, 2));
    write_text(fs::path(opt.out) / "evaluation.txt", render_table(header, {row}));

    std::cout << "wrote " << (fs::path(opt.out) / "evaluation.csv").generic_string() << " (mean "
              << format_fixed(mean * 100.0, 1) << ", nstd " << format_fixed(nstd, 2) << ")\n";
    return 0;
}

struct ReportOptions {
    std::vector<std::string> manifests;
    std::vector<std::string> results;
    std::vector<std::string> names;
    std::string out;
    std::string metric{"miou"};
};

int run_report(const ReportOptions& opt) {
    if (opt.results.size() != opt.manifests.size()) {
        throw UsageError("report needs one --results per --manifest (got " +
                         std::to_string(opt.manifests.size()) + " manifests, " +
                         std::to_string(opt.results.size()) + " results)");
    }
    if (!opt.names.empty() && opt.names.size() != opt.manifests.size()) {
        throw UsageError("--name must be given once per --manifest or not at all");
    }
    const RankingMetric metric = metric_from(opt.metric);
    fs::create_directories(opt.out);

    std::vector<PlotSeries> series;
    std::vector<std::vector<std::string>> curve_rows;
    std::set<std::string> used_names;
    for (std::size_t i = 0; i < opt.manifests.size(); ++i) {
        const Corpus corpus = load_corpus(opt.manifests[i], opt.results[i]);
        const std::string name =
            i < opt.names.size() ? opt.names[i] : corpus_label(opt.manifests[i]);
        if (!used_names.insert(name).second) {
            throw UsageError("duplicate corpus name '" + name +
                             "'; disambiguate with --name");
        }
        const ChallengeCurve curve = challenge_curve(sequence_miou_errors(corpus));
        for (std::size_t t = 0; t < curve.thresholds.size(); ++t) {
            curve_rows.push_back(
                {name, format_double(curve.thresholds[t]), format_double(curve.fractions[t])});
        }
        series.push_back({name + " (AUC " + format_fixed(curve.auc, 3) + ")", curve.thresholds,
                          curve.fractions});

        auto ranked = rank_trackers(corpus, all_sequence_ids(corpus), metric);
        const std::string stem = safe_file_stem(name);
        std::vector<std::vector<std::string>> ranking_rows;
        std::vector<PlotBar> bars;
        for (const auto& entry : ranked) {
            ranking_rows.push_back({entry.tracker, format_double(entry.score)});
            bars.push_back({entry.tracker, entry.score});
        }
        write_csv(fs::path(opt.out) / ("ranking_" + stem + ".csv"), {"tracker", "score"},
                  ranking_rows);
        write_bar_chart_svg(fs::path(opt.out) / ("ranking_" + stem + ".svg"),
                            "Tracker ranking - " + name, "tracker",
                            metric == RankingMetric::miou ? "mIoU" : "success AUC", bars);
    }
    write_csv(fs::path(opt.out) / "challenge_curves.csv", {"corpus", "threshold", "fraction"},
              curve_rows);
    write_line_chart_svg(fs::path(opt.out) / "challenge_curves.svg", "Challenge plot",
                         "mIoU error threshold", "fraction of sequences", series);
    std::cout << "wrote " << fs::path(opt.out).generic_string() << " (challenge curves and "
              << "rankings for " << opt.manifests.size() << " corpora)\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Curation and evaluation toolkit for visual tracking benchmarks"};
    app.require_subcommand(1);

    SynthOptions synth_opt;
    CLI::App* synth = app.add_subcommand("synth",
                                         "Generate a seeded synthetic corpus with tracker runs");
    synth->add_option("--out", synth_opt.out, "Output directory")->required();
    synth->add_option("--seed", synth_opt.spec.seed, "Generator seed");
    synth->add_option("--sequences", synth_opt.spec.n_sequences, "Number of sequences");
    synth->add_option("--trackers", synth_opt.spec.n_trackers, "Number of synthetic trackers");
    synth->add_option("--passes", synth_opt.passes, "Runs per tracker")->capture_default_str();
    synth->add_option("--frames", synth_opt.frames, "Frame count range MIN:MAX");
    synth->add_option("--noise", synth_opt.noise,
                      "Per-tracker jitter magnitude in pixels (comma separated)")
        ->delimiter(',');
    synth->add_option("--absence", synth_opt.spec.absence_rate,
                      "Probability that a predicted frame is dropped");
    synth->add_option("--scenario-mix", synth_opt.mix,
                      "Weighted scenario draw, e.g. animal=2,uav=1");

    ScoreOptions score_opt;
    CLI::App* score = app.add_subcommand("score", "Score every sequence of a corpus");
    score->add_option("--manifest", score_opt.manifest, "Corpus manifest (JSON)")->required();
    score->add_option("--results", score_opt.results, "Tracker results root directory")
        ->required();
    score->add_option("--out", score_opt.out, "Output directory")->required();
    score->add_option("--eta", score_opt.params.eta, "Exponent scale of the discrimination term")->capture_default_str();
    score->add_option("--norm-min", score_opt.params.norm_min,
                      "Lower bound of the variation normalization")->capture_default_str();
    score->add_option("--norm-max", score_opt.params.norm_max,
                      "Upper bound of the variation normalization")->capture_default_str();
    score->add_option("--epsilon", score_opt.params.epsilon,
                      "Floor inside the variation logarithm")->capture_default_str();
    score->add_option("--threads", score_opt.threads, "Worker threads; 0 or less uses all cores");
    score->add_option("--pass-policy", score_opt.pass_policy,
                      "Which passes feed the score: first or mean")->capture_default_str()
        ->check(CLI::IsMember({"first", "mean"}));

    SelectOptions select_opt;
    CLI::App* select = app.add_subcommand("select", "Pick the informative subset of a corpus");
    select->add_option("--manifest", select_opt.manifest, "Corpus manifest (JSON)")->required();
    select->add_option("--quality", select_opt.quality, "Quality file written by 'score'")
        ->required();
    select->add_option("--out", select_opt.out, "Output directory")->required();
    select->add_option("--top-fraction", select_opt.config.top_fraction,
                       "Share of the corpus taken from the top")->capture_default_str();
    select->add_option("--quota", select_opt.config.per_scenario_quota,
                       "Minimum sequences per scenario, supply permitting")->capture_default_str();
    select->add_flag("--paper-order", select_opt.config.paper_order,
                     "Cut by fraction first, then de-duplicate within the cut");
    select->add_flag("--no-dedupe", select_opt.no_dedupe,
                     "Keep duplicate (scenario, sub-scenario) pairs");
    select->add_option("--ranking-metric", select_opt.metric,
                       "Metric of the ranking-preservation check")->capture_default_str()
        ->check(CLI::IsMember({"miou", "success_auc"}));
    select->add_option("--results", select_opt.results,
                       "Tracker results root; enables the ranking-preservation check");

    EvaluateOptions evaluate_opt;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Rank trackers and summarize a dataset");
    evaluate->add_option("--manifest", evaluate_opt.manifest, "Corpus manifest (JSON)");
    evaluate->add_option("--results", evaluate_opt.results, "Tracker results root directory");
    evaluate->add_option("--precomputed", evaluate_opt.precomputed,
                         "CSV of per-(tracker, sequence) overlaps: tracker,sequence,miou");
    evaluate->add_option("--out", evaluate_opt.out, "Output directory")->required();
    evaluate->add_option("--ranking-metric", evaluate_opt.metric,
                         "Tracker ranking metric: miou or success_auc")->capture_default_str()
        ->check(CLI::IsMember({"miou", "success_auc"}));
    evaluate->add_option("--name", evaluate_opt.name, "Dataset label used in the reports");

    ReportOptions report_opt;
    CLI::App* report = app.add_subcommand("report",
                                          "Emit challenge curves and ranking charts");
    report->add_option("--manifest", report_opt.manifests, "Corpus manifest (repeatable)")
        ->required();
    report->add_option("--results", report_opt.results,
                       "Results root for the matching --manifest (repeatable)")
        ->required();
    report->add_option("--name", report_opt.names, "Label for the matching --manifest");
    report->add_option("--out", report_opt.out, "Output directory")->required();
    report->add_option("--ranking-metric", report_opt.metric,
                       "Tracker ranking metric: miou or success_auc")->capture_default_str()
        ->check(CLI::IsMember({"miou", "success_auc"}));

    try {
        app.parse(argc, argv);
        if (synth->parsed()) {
            return run_synth(synth_opt);
        }
        if (score->parsed()) {
            return run_score(score_opt);
        }
        if (select->parsed()) {
            return run_select(select_opt);
        }
        if (evaluate->parsed()) {
            return run_evaluate(evaluate_opt);
        }
        if (report->parsed()) {
            return run_report(report_opt);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("trackbench");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(storage.size());
    for (const auto& arg : storage) {
        argv.push_back(arg.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace trackbench::cli
