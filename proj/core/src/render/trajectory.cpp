#include "trackgen/render/trajectory.hpp"

#include <fmt/format.h>

#include <cmath>

#include "trackgen/error.hpp"
#include "trackgen/util/csv.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen {

Trajectory generate_trajectory(const RouteLayout& layout, double spacing) {
  const double offset = -layout.lane_width / 2;
  Trajectory t;
  t.spacing = spacing;
  for (const auto& sample : sample_centerline(layout, spacing)) {
    const Vec2 p = sample.pose.position() + offset * left_normal(sample.pose.yaw);
    t.poses.push_back({p.x, p.y, sample.pose.yaw});
    t.arclength.push_back(sample.s);
  }
  return t;
}

void recompute_yaw(std::vector<Pose2D>& poses, std::size_t first,
                   std::size_t last) {
  if (poses.size() < 2) return;
  last = std::min(last, poses.size() - 1);
  for (std::size_t i = first; i <= last; ++i) {
    const std::size_t a = i == 0 ? 0 : i - 1;
    const std::size_t b = i + 1 < poses.size() ? i + 1 : i;
    const double dx = poses[b].x - poses[a].x;
    const double dy = poses[b].y - poses[a].y;
    if (dx != 0.0 || dy != 0.0) {
      poses[i].yaw = normalize_angle(std::atan2(dy, dx));
    }
  }
}

std::string format_trajectory_csv(const Trajectory& t) {
  util::CsvTable table;
  table.header = {"x_m", "y_m", "yaw_rad"};
  for (const auto& p : t.poses) {
    table.rows.push_back({util::format_real(p.x), util::format_real(p.y),
                          util::format_real(p.yaw)});
  }
  return util::format_csv(table);
}

Trajectory parse_trajectory_csv(std::string_view text) {
  const auto table = util::parse_csv(text);
  const auto cx = table.column("x_m");
  const auto cy = table.column("y_m");
  const auto cyaw = table.column("yaw_rad");
  Trajectory t;
  int line = 1;
  for (const auto& row : table.rows) {
    ++line;
    t.poses.push_back({util::parse_real(row[cx], "x_m", line),
                       util::parse_real(row[cy], "y_m", line),
                       normalize_angle(util::parse_real(row[cyaw], "yaw_rad", line))});
  }
  return t;
}

}  // namespace trackgen
