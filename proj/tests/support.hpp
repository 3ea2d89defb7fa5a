#pragma once

// Shared helpers for the test suites.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "trackbench/corpus.hpp"
#include "trackbench/geometry.hpp"

namespace testsupport {

// Trajectory of n unit boxes marching right one pixel per frame.
inline trackbench::Trajectory marching_boxes(std::size_t n, double step = 1.0) {
    std::vector<trackbench::BoundingBox> boxes;
    boxes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        boxes.push_back({static_cast<double>(i) * step, 0.0, 10.0, 10.0});
    }
    return trackbench::Trajectory::from_boxes(boxes);
}

inline trackbench::SequenceRecord make_sequence(std::string id,
                                                trackbench::Scenario scenario,
                                                std::string sub_scenario,
                                                std::size_t frames = 4) {
    return {std::move(id), scenario, std::move(sub_scenario), "unit-test",
            marching_boxes(frames)};
}

// Unique scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = std::filesystem::temp_directory_path() /
                ("trackbench-test-" + std::to_string(stamp) + "-" +
                 std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace testsupport
