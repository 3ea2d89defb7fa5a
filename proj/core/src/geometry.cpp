#include "trackbench/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trackbench/error.hpp"

namespace trackbench {

bool BoundingBox::valid() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(w) &&
           std::isfinite(h) && w >= 0.0 && h >= 0.0;
}

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double inter_w = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
    const double inter_h = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
    const double inter = std::max(0.0, inter_w) * std::max(0.0, inter_h);
    const double uni = a.area() + b.area() - inter;
    if (uni <= 0.0) {
        return 0.0;
    }
    return std::clamp(inter / uni, 0.0, 1.0);
}

std::optional<double> frame_iou(const FrameBox& gt, const FrameBox& pred) {
    if (!gt.has_value()) {
        return std::nullopt;
    }
    if (!pred.has_value()) {
        return 0.0;
    }
    return iou(*gt, *pred);
}

Trajectory::Trajectory(std::vector<FrameBox> frames) : frames_(std::move(frames)) {
    if (frames_.empty()) {
        throw ValidationError("trajectory must contain at least one frame");
    }
    for (std::size_t i = 0; i < frames_.size(); ++i) {
        if (frames_[i].has_value() && !frames_[i]->valid()) {
            throw ValidationError("trajectory frame " + std::to_string(i) +
                                  " has a non-finite or negative-extent box");
        }
    }
}

Trajectory Trajectory::from_boxes(const std::vector<BoundingBox>& boxes) {
    std::vector<FrameBox> frames;
    frames.reserve(boxes.size());
    for (const auto& box : boxes) {
        frames.emplace_back(box);
    }
    return Trajectory(std::move(frames));
}

}  // namespace trackbench
