#pragma once

#include "cloudcover/report.hpp"
#include "cloudcover/scene.hpp"

#include <optional>

namespace cloudcover {

struct TaskOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
};

/// Runs one scene task through the matching pipeline and collects its
/// checks. Input errors throw; check failures land in the report.
Report run_task(const SceneFile& scene, const SceneTask& task, const TaskOverrides& ov = {});

/// Exact sample points lying on the cloud body (dim 2 or 3). Spheres are
/// sampled by rational tangent-half-angle parametrization, so every emitted
/// point satisfies contains().
std::vector<Point> sample_cloud_points(const Cloud& cloud, std::size_t count);

/// CSV (exact rational coordinates) of sample points on the cloud.
std::string emit_plot_data(const Cloud& cloud, std::size_t count);

}  // namespace cloudcover
