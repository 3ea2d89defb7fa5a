#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "trackbench/error.hpp"
#include "trackbench/metrics.hpp"
#include "trackbench/synth.hpp"

using trackbench::Corpus;
using trackbench::Scenario;
using trackbench::SynthSpec;
using trackbench::ValidationError;

namespace {

bool same_corpus(const Corpus& a, const Corpus& b) {
    if (a.size() != b.size() || a.results().size() != b.results().size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& sa = a.sequences()[i];
        const auto& sb = b.sequences()[i];
        if (sa.id != sb.id || sa.scenario != sb.scenario ||
            sa.sub_scenario != sb.sub_scenario || !(sa.gt == sb.gt)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.results().size(); ++i) {
        const auto& ra = a.results()[i];
        const auto& rb = b.results()[i];
        if (ra.tracker != rb.tracker || ra.pass_index != rb.pass_index ||
            !(ra.trajectories == rb.trajectories)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("the same spec always yields the same corpus") {
    SynthSpec spec;
    spec.seed = 42;
    spec.n_sequences = 8;
    spec.n_trackers = 3;
    spec.tracker_noise = {0.0, 4.0, 9.0};
    spec.absence_rate = 0.1;
    spec.n_passes = 2;
    const auto first = trackbench::generate_corpus(spec);
    const auto second = trackbench::generate_corpus(spec);
    CHECK(same_corpus(first, second));

    SynthSpec other = spec;
    other.seed = 43;
    CHECK_FALSE(same_corpus(first, trackbench::generate_corpus(other)));
}

TEST_CASE("generated shape follows the spec") {
    SynthSpec spec;
    spec.seed = 1;
    spec.n_sequences = 15;
    spec.frames_range = {12, 40};
    spec.n_trackers = 4;
    spec.n_passes = 3;
    const auto corpus = trackbench::generate_corpus(spec);
    CHECK(corpus.size() == 15);
    CHECK(corpus.tracker_names().size() == 4);
    CHECK(corpus.pass_count() == 3);
    CHECK(corpus.results().size() == 12);
    CHECK(corpus.sequences().front().id == "seq-0000");
    CHECK(corpus.sequences().back().id == "seq-0014");
    for (const auto& seq : corpus.sequences()) {
        CHECK(seq.frame_count() >= 12);
        CHECK(seq.frame_count() <= 40);
        CHECK_FALSE(seq.sub_scenario.empty());
        CHECK(seq.source_dataset == "synthetic");
    }
}

TEST_CASE("ground truth stays on the canvas") {
    SynthSpec spec;
    spec.seed = 77;
    spec.n_sequences = 20;
    spec.frames_range = {50, 80};
    const auto corpus = trackbench::generate_corpus(spec);
    for (const auto& seq : corpus.sequences()) {
        for (const auto& frame : seq.gt.frames()) {
            REQUIRE(frame.has_value());
            CHECK(frame->w >= 20.0);
            CHECK(frame->w <= 200.0);
            CHECK(frame->h >= 20.0);
            CHECK(frame->h <= 200.0);
            CHECK(frame->x >= 0.0);
            CHECK(frame->x + frame->w <= trackbench::kSynthCanvasWidth);
            CHECK(frame->y >= 0.0);
            CHECK(frame->y + frame->h <= trackbench::kSynthCanvasHeight);
        }
    }
}

TEST_CASE("a noise-free tracker repeats the ground truth exactly") {
    SynthSpec spec;
    spec.seed = 3;
    spec.n_sequences = 5;
    spec.n_trackers = 2;
    spec.tracker_noise = {0.0, 10.0};
    const auto corpus = trackbench::generate_corpus(spec);
    for (const auto& seq : corpus.sequences()) {
        const auto m = trackbench::build_iou_matrix(corpus, seq, 1);
        CHECK(trackbench::miou(m, 0) == doctest::Approx(1.0));
        CHECK(trackbench::miou(m, 1) < 1.0);
    }
}

TEST_CASE("absence rate controls dropped predictions") {
    SynthSpec spec;
    spec.seed = 9;
    spec.n_sequences = 10;
    spec.absence_rate = 0.0;
    const auto none_absent = trackbench::generate_corpus(spec);
    for (const auto& run : none_absent.results()) {
        for (const auto& [id, trajectory] : run.trajectories) {
            for (const auto& frame : trajectory.frames()) {
                CHECK(frame.has_value());
            }
        }
    }
    spec.absence_rate = 0.5;
    const auto half_absent = trackbench::generate_corpus(spec);
    std::size_t absent = 0;
    std::size_t total = 0;
    for (const auto& run : half_absent.results()) {
        for (const auto& [id, trajectory] : run.trajectories) {
            for (const auto& frame : trajectory.frames()) {
                ++total;
                if (!frame.has_value()) {
                    ++absent;
                }
            }
        }
    }
    const double rate = static_cast<double>(absent) / static_cast<double>(total);
    CHECK(rate > 0.35);
    CHECK(rate < 0.65);
}

TEST_CASE("scenario mix steers the draw") {
    SynthSpec spec;
    spec.seed = 5;
    spec.n_sequences = 30;
    spec.scenario_mix = {{Scenario::uav, 1.0}};
    const auto corpus = trackbench::generate_corpus(spec);
    for (const auto& seq : corpus.sequences()) {
        CHECK(seq.scenario == Scenario::uav);
    }

    spec.scenario_mix = {{Scenario::uav, 1.0}, {Scenario::cartoon, 1.0}};
    const auto mixed = trackbench::generate_corpus(spec);
    std::set<Scenario> seen;
    for (const auto& seq : mixed.sequences()) {
        seen.insert(seq.scenario);
    }
    CHECK(seen == std::set<Scenario>{Scenario::uav, Scenario::cartoon});

    SynthSpec uniform;
    uniform.seed = 6;
    uniform.n_sequences = 60;
    std::set<Scenario> broad;
    for (const auto& seq : trackbench::generate_corpus(uniform).sequences()) {
        broad.insert(seq.scenario);
    }
    CHECK(broad.size() >= 5);
}

TEST_CASE("spec validation") {
    SynthSpec spec;
    spec.n_sequences = 0;
    CHECK_THROWS_AS((void)trackbench::generate_corpus(spec), ValidationError);
    spec = {};
    spec.frames_range = {1, 10};
    CHECK_THROWS_AS((void)trackbench::generate_corpus(spec), ValidationError);
    spec = {};
    spec.frames_range = {30, 10};
    CHECK_THROWS_AS((void)trackbench::generate_corpus(spec), ValidationError);
    spec = {};
    spec.tracker_noise = {1.0, 2.0};  // three trackers by default
    CHECK_THROWS_AS((void)trackbench::generate_corpus(spec), ValidationError);
    spec = {};
    spec.tracker_noise = {-1.0, 0.0, 0.0};
    CHECK_THROWS_AS((void)trackbench::generate_corpus(spec), ValidationError);
    spec = {};
    spec.absence_rate = 1.5;
    CHECK_THROWS_AS((void)trackbench::generate_corpus(spec), ValidationError);
    spec = {};
    spec.scenario_mix = {{Scenario::uav, 0.0}};
    CHECK_THROWS_AS((void)trackbench::generate_corpus(spec), ValidationError);
    spec = {};
    spec.n_passes = 0;
    CHECK_THROWS_AS((void)trackbench::generate_corpus(spec), ValidationError);
}
