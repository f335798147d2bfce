#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trackgen/road/geometry.hpp"
#include "trackgen/road/layout.hpp"

namespace trackgen {

// Vehicle poses along the route. `arclength` holds, per pose, the route
// centerline arclength it was generated from; maneuvers need it. Both
// vectors have the same length, or `arclength` is empty for trajectories
// read back from CSV.
struct Trajectory {
  std::vector<Pose2D> poses;
  std::vector<double> arclength;
  double spacing = 0.0;

  std::size_t size() const noexcept { return poses.size(); }
  bool empty() const noexcept { return poses.empty(); }
};

// Poses on the center of the right lane: the centerline sampled at
// `spacing`, offset lane_width / 2 along the right normal, yaw the local
// tangent.
Trajectory generate_trajectory(const RouteLayout& layout, double spacing);

// Recomputes yaw from position differences (central inside, one-sided at
// the ends) for poses [first, last].
void recompute_yaw(std::vector<Pose2D>& poses, std::size_t first,
                   std::size_t last);

// CSV with header `x_m,y_m,yaw_rad`.
std::string format_trajectory_csv(const Trajectory& t);
Trajectory parse_trajectory_csv(std::string_view text);

}  // namespace trackgen
