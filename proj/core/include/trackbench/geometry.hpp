#pragma once

#include <optional>
#include <vector>

namespace trackbench {

// Axis-aligned box in pixel coordinates. Coordinates are continuous; the
// origin is the top-left corner of the frame.
struct BoundingBox {
    double x{0.0};
    double y{0.0};
    double w{0.0};
    double h{0.0};

    [[nodiscard]] double area() const { return w * h; }

    // True when all fields are finite and the extent is non-negative.
    [[nodiscard]] bool valid() const;

    bool operator==(const BoundingBox&) const = default;
};

// Intersection over union of two boxes, in [0, 1]. A degenerate pair whose
// union has zero area scores 0.
[[nodiscard]] double iou(const BoundingBox& a, const BoundingBox& b);

// State of the target on one frame; empty means the target is absent.
using FrameBox = std::optional<BoundingBox>;

// Per-frame overlap with absence handling: an unannotated frame (no ground
// truth) yields no score at all, while a missing prediction on an annotated
// frame counts as a complete miss.
[[nodiscard]] std::optional<double> frame_iou(const FrameBox& gt, const FrameBox& pred);

// Frame-ordered target states of one sequence. Always at least one frame;
// every present box has finite, non-negative extent.
class Trajectory {
public:
    explicit Trajectory(std::vector<FrameBox> frames);

    [[nodiscard]] static Trajectory from_boxes(const std::vector<BoundingBox>& boxes);

    [[nodiscard]] std::size_t length() const { return frames_.size(); }
    [[nodiscard]] const FrameBox& frame(std::size_t i) const { return frames_[i]; }
    [[nodiscard]] const std::vector<FrameBox>& frames() const { return frames_; }

    bool operator==(const Trajectory&) const = default;

private:
    std::vector<FrameBox> frames_;
};

}  // namespace trackbench
