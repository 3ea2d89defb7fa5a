#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "trackbench/cli/app.hpp"
#include "trackbench/cli/plots.hpp"
#include "trackbench/cli/tables.hpp"
#include "trackbench/error.hpp"
#include "trackbench/io.hpp"

namespace fs = std::filesystem;
using testsupport::TempDir;

namespace {

// Runs the command line with stdout/stderr captured, returning the exit
// status.
int run_cli(const std::vector<std::string>& args) {
    std::ostringstream sink;
    auto* old_out = std::cout.rdbuf(sink.rdbuf());
    auto* old_err = std::cerr.rdbuf(sink.rdbuf());
    const int code = trackbench::cli::run(args);
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return code;
}

std::string read_text(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

void make_corpus(const fs::path& dir, const std::string& seed) {
    REQUIRE(run_cli({"synth", "--out", dir.string(), "--seed", seed, "--sequences", "10",
                     "--trackers", "3", "--noise", "0,6,12", "--passes", "2", "--frames",
                     "12:24", "--absence", "0.1"}) == 0);
}

}  // namespace

TEST_CASE("synth, score, select, evaluate, and report chain into each other") {
    TempDir tmp;
    const fs::path corp = tmp.path() / "corp";
    make_corpus(corp, "11");
    REQUIRE(fs::exists(corp / "manifest.json"));
    REQUIRE(fs::exists(corp / "gt" / "seq-0000.txt"));
    REQUIRE(fs::exists(corp / "results" / "tracker-00" / "pass1" / "seq-0009.txt"));

    const fs::path scored = tmp.path() / "scored";
    REQUIRE(run_cli({"score", "--manifest", (corp / "manifest.json").string(), "--results",
                     (corp / "results").string(), "--out", scored.string()}) == 0);
    const trackbench::QualityFile quality = trackbench::load_quality(scored / "quality.json");
    CHECK(quality.reports.size() == 10);
    CHECK(quality.params.eta == 5.0);

    const fs::path sel = tmp.path() / "sel";
    REQUIRE(run_cli({"select", "--manifest", (corp / "manifest.json").string(), "--quality",
                     (scored / "quality.json").string(), "--out", sel.string(),
                     "--top-fraction", "0.5", "--quota", "1", "--results",
                     (corp / "results").string()}) == 0);
    REQUIRE(fs::exists(sel / "selection.json"));
    REQUIRE(fs::exists(sel / "selection.csv"));
    REQUIRE(fs::exists(sel / "scenario_counts.txt"));
    REQUIRE(fs::exists(sel / "ranking.json"));
    const auto selection_lines = lines_of(read_text(sel / "selection.csv"));
    REQUIRE(!selection_lines.empty());
    CHECK(selection_lines[0] == "id,scenario,reason,quality");
    CHECK(selection_lines.size() >= 2);
    CHECK(read_text(sel / "scenario_counts.txt").find("shortfall") != std::string::npos);
    CHECK(read_text(sel / "ranking.json").find("\"tau\"") != std::string::npos);

    const fs::path eval = tmp.path() / "eval";
    REQUIRE(run_cli({"evaluate", "--manifest", (corp / "manifest.json").string(), "--results",
                     (corp / "results").string(), "--out", eval.string(), "--name",
                     "pipeline"}) == 0);
    const auto eval_lines = lines_of(read_text(eval / "evaluation.csv"));
    REQUIRE(eval_lines.size() == 4);
    CHECK(eval_lines[0] == "tracker,score");
    // the zero-noise tracker must rank first
    CHECK(eval_lines[1].rfind("tracker-00,", 0) == 0);
    const std::string eval_json = read_text(eval / "evaluation.json");
    CHECK(eval_json.find("\"name\": \"pipeline\"") != std::string::npos);
    const std::string table = read_text(eval / "evaluation.txt");
    CHECK(table.find("pipeline") != std::string::npos);
    CHECK(table.find("tracker-02") != std::string::npos);

    const fs::path rep = tmp.path() / "rep";
    REQUIRE(run_cli({"report", "--manifest", (corp / "manifest.json").string(), "--results",
                     (corp / "results").string(), "--name", "pipeline", "--out",
                     rep.string()}) == 0);
    const std::string curves = read_text(rep / "challenge_curves.svg");
    CHECK(curves.find("<svg") != std::string::npos);
    CHECK(curves.find("</svg>") != std::string::npos);
    CHECK(curves.find("mIoU error threshold") != std::string::npos);
    CHECK(curves.find("fraction of sequences") != std::string::npos);
    CHECK(curves.find("pipeline (AUC 0.") != std::string::npos);
    const auto curve_lines = lines_of(read_text(rep / "challenge_curves.csv"));
    CHECK(curve_lines[0] == "corpus,threshold,fraction");
    CHECK(curve_lines.size() == 1 + 101);
    const std::string bars = read_text(rep / "ranking_pipeline.svg");
    CHECK(bars.find("tracker-00") != std::string::npos);
    CHECK(bars.find("mIoU") != std::string::npos);
    const auto bar_lines = lines_of(read_text(rep / "ranking_pipeline.csv"));
    REQUIRE(bar_lines.size() == 4);
    CHECK(bar_lines[1].rfind("tracker-00,", 0) == 0);
}

TEST_CASE("identical flags give byte-identical artifacts, whatever the thread count") {
    TempDir tmp;
    const fs::path corp_a = tmp.path() / "a";
    const fs::path corp_b = tmp.path() / "b";
    make_corpus(corp_a, "42");
    make_corpus(corp_b, "42");
    CHECK(read_text(corp_a / "manifest.json") == read_text(corp_b / "manifest.json"));
    CHECK(read_text(corp_a / "gt" / "seq-0003.txt") == read_text(corp_b / "gt" / "seq-0003.txt"));

    const fs::path scored_a = tmp.path() / "scored-a";
    const fs::path scored_b = tmp.path() / "scored-b";
    REQUIRE(run_cli({"score", "--manifest", (corp_a / "manifest.json").string(), "--results",
                     (corp_a / "results").string(), "--out", scored_a.string(), "--threads",
                     "1"}) == 0);
    REQUIRE(run_cli({"score", "--manifest", (corp_a / "manifest.json").string(), "--results",
                     (corp_a / "results").string(), "--out", scored_b.string(), "--threads",
                     "8"}) == 0);
    CHECK(read_text(scored_a / "quality.json") == read_text(scored_b / "quality.json"));
}

TEST_CASE("exit statuses separate usage errors from data errors") {
    TempDir tmp;
    CHECK(run_cli({"score", "--bogus"}) == 2);
    CHECK(run_cli({"frobnicate"}) == 2);
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"--help"}) == 0);
    CHECK(run_cli({"score", "--results", "r", "--out", "o"}) == 2);  // missing --manifest
    CHECK(run_cli({"evaluate", "--out", (tmp.path() / "e").string()}) == 2);
    CHECK(run_cli({"synth", "--out", (tmp.path() / "c").string(), "--frames", "abc"}) == 2);
    CHECK(run_cli({"score", "--manifest", (tmp.path() / "nothing.json").string(), "--results",
                   (tmp.path() / "r").string(), "--out", (tmp.path() / "o").string()}) == 1);
    CHECK(run_cli({"synth", "--out", (tmp.path() / "c2").string(), "--sequences", "0"}) == 1);
    CHECK(run_cli({"synth", "--out", (tmp.path() / "c3").string(), "--scenario-mix",
                   "dragon=1"}) == 2);
}

TEST_CASE("unconstrained selection keeps the whole corpus") {
    TempDir tmp;
    // Six sequences, all (scenario, sub-scenario) pairs distinct.
    std::vector<trackbench::SequenceRecord> sequences;
    const char* scenarios[] = {"animal", "animal", "vehicle", "uav", "cartoon", "human-body"};
    const char* subs[] = {"dog", "cat", "car", "quadcopter", "sketch", "runner"};
    std::vector<trackbench::QualityReport> reports;
    for (int i = 0; i < 6; ++i) {
        const std::string id = "seq-" + std::to_string(i);
        sequences.push_back(testsupport::make_sequence(id, *trackbench::parse_scenario(
                                                              scenarios[i]),
                                                       subs[i]));
        reports.push_back({id, 0.5, 1.2, 0.0, 0.5, 0.1 * (i + 1)});
    }
    const trackbench::Corpus corpus{std::move(sequences)};
    const fs::path dir = tmp.path() / "corpus";
    trackbench::save_corpus(corpus, dir);
    trackbench::save_quality({trackbench::QualityParams{}, reports},
                             tmp.path() / "quality.json");

    const fs::path out = tmp.path() / "sel";
    REQUIRE(run_cli({"select", "--manifest", (dir / "manifest.json").string(), "--quality",
                     (tmp.path() / "quality.json").string(), "--out", out.string(),
                     "--top-fraction", "1.0", "--quota", "999999"}) == 0);
    const auto lines = lines_of(read_text(out / "selection.csv"));
    REQUIRE(lines.size() == 7);
    for (int i = 0; i < 6; ++i) {
        const std::string id = "seq-" + std::to_string(i);
        bool found = false;
        for (const auto& line : lines) {
            if (line.rfind(id + ",", 0) == 0) {
                found = true;
            }
        }
        CHECK_MESSAGE(found, "missing ", id);
    }
}

TEST_CASE("precomputed overlap tables rank and summarize without trajectories") {
    TempDir tmp;
    const fs::path table = tmp.path() / "scores.csv";
    {
        std::ofstream out(table);
        out << "tracker,sequence,miou\n";
        out << "alpha,s1,0.5\nalpha,s2,0.7\n";
        out << "beta,s1,0.3\nbeta,s2,0.5\n";
        out << "gamma,s1,0.9\ngamma,s2,0.7\n";
    }
    const fs::path out_dir = tmp.path() / "eval";
    REQUIRE(run_cli({"evaluate", "--precomputed", table.string(), "--out",
                     out_dir.string()}) == 0);
    const auto lines = lines_of(read_text(out_dir / "evaluation.csv"));
    REQUIRE(lines.size() == 4);
    CHECK(lines[1] == "gamma,0.8");
    CHECK(lines[2] == "alpha,0.6");
    CHECK(lines[3] == "beta,0.4");
    const std::string summary = read_text(out_dir / "evaluation.json");
    CHECK(summary.find("\"name\": \"scores\"") != std::string::npos);
    CHECK(summary.find("\"mean\": 0.6") != std::string::npos);

    // mixing modes is flag misuse
    CHECK(run_cli({"evaluate", "--precomputed", table.string(), "--manifest", "m", "--out",
                   (tmp.path() / "x").string()}) == 2);

    // malformed tables are data errors
    const fs::path bad = tmp.path() / "bad.csv";
    {
        std::ofstream out(bad);
        out << "tracker,sequence,miou\nalpha,s1,1.5\n";
    }
    CHECK(run_cli({"evaluate", "--precomputed", bad.string(), "--out",
                   (tmp.path() / "y").string()}) == 1);
    {
        std::ofstream out(bad);
        out << "tracker,sequence,miou\nalpha,s1,0.5\nalpha,s1,0.6\n";
    }
    CHECK(run_cli({"evaluate", "--precomputed", bad.string(), "--out",
                   (tmp.path() / "y").string()}) == 1);
    {
        std::ofstream out(bad);
        out << "tracker,sequence,miou\nalpha,s1,0.5\nbeta,s2,0.5\n";
    }
    CHECK(run_cli({"evaluate", "--precomputed", bad.string(), "--out",
                   (tmp.path() / "y").string()}) == 1);
    {
        std::ofstream out(bad);
        out << "who,what,when\nalpha,s1,0.5\n";
    }
    CHECK(run_cli({"evaluate", "--precomputed", bad.string(), "--out",
                   (tmp.path() / "y").string()}) == 1);
}

TEST_CASE("report overlays several corpora into one challenge plot") {
    TempDir tmp;
    const fs::path corp_a = tmp.path() / "one";
    const fs::path corp_b = tmp.path() / "two";
    make_corpus(corp_a, "7");
    make_corpus(corp_b, "8");
    const fs::path out = tmp.path() / "rep";
    REQUIRE(run_cli({"report", "--manifest", (corp_a / "manifest.json").string(), "--results",
                     (corp_a / "results").string(), "--manifest",
                     (corp_b / "manifest.json").string(), "--results",
                     (corp_b / "results").string(), "--out", out.string()}) == 0);
    const std::string svg = read_text(out / "challenge_curves.svg");
    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++polylines;
    }
    CHECK(polylines == 2);
    CHECK(svg.find("one (AUC 0.") != std::string::npos);
    CHECK(svg.find("two (AUC 0.") != std::string::npos);
    CHECK(fs::exists(out / "ranking_one.csv"));
    CHECK(fs::exists(out / "ranking_two.svg"));

    // names are derived from the manifest directories, so a collision needs
    // explicit --name labels
    CHECK(run_cli({"report", "--manifest", (corp_a / "manifest.json").string(), "--results",
                   (corp_a / "results").string(), "--manifest",
                   (corp_a / "manifest.json").string(), "--results",
                   (corp_a / "results").string(), "--out", out.string()}) == 2);
    // mismatched pair counts are flag misuse
    CHECK(run_cli({"report", "--manifest", (corp_a / "manifest.json").string(), "--out",
                   out.string()}) == 2);
}

TEST_CASE("chart emitters reject unusable input") {
    TempDir tmp;
    CHECK_THROWS_AS(trackbench::cli::write_line_chart_svg(tmp.path() / "x.svg", "t", "x", "y",
                                                          {}),
                    trackbench::ValidationError);
    CHECK_THROWS_AS(trackbench::cli::write_line_chart_svg(
                        tmp.path() / "x.svg", "t", "x", "y",
                        {{"s", {0.0, 1.0}, {0.5}}}),
                    trackbench::ValidationError);
    CHECK_THROWS_AS(trackbench::cli::write_bar_chart_svg(tmp.path() / "x.svg", "t", "x", "y",
                                                         {}),
                    trackbench::ValidationError);
}

TEST_CASE("flat challenge curves render with a zero area legend") {
    TempDir tmp;
    // every error is zero, so the curve is flat at zero everywhere
    const trackbench::ChallengeCurve curve =
        trackbench::challenge_curve(std::vector<double>{0.0, 0.0, 0.0});
    trackbench::cli::PlotSeries series{
        "flat (AUC " + trackbench::cli::format_fixed(curve.auc, 3) + ")", curve.thresholds,
        curve.fractions};
    trackbench::cli::write_line_chart_svg(tmp.path() / "flat.svg", "Challenge plot",
                                          "mIoU error threshold", "fraction of sequences",
                                          {series});
    const std::string svg = read_text(tmp.path() / "flat.svg");
    CHECK(svg.find("flat (AUC 0.000)") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("table helpers keep fields aligned and escaped") {
    using trackbench::cli::csv_escape;
    using trackbench::cli::format_fixed;
    using trackbench::cli::render_table;
    CHECK(format_fixed(8.437, 2) == "8.44");
    CHECK(format_fixed(51.24, 1) == "51.2");
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    const std::string table = render_table({"name", "value"}, {{"row", "1"}});
    CHECK(table.find("name") != std::string::npos);
    CHECK(table.find("-+-") != std::string::npos);
}
