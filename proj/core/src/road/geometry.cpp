#include "trackgen/road/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "trackgen/error.hpp"

namespace trackgen {

double norm(Vec2 v) { return std::hypot(v.x, v.y); }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

double normalize_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

RoadFrame RoadFrame::straight(Pose2D start, double length) {
  RoadFrame f;
  f.start_ = start;
  f.length_ = length;
  f.curvature_ = 0.0;
  return f;
}

RoadFrame RoadFrame::arc(Pose2D start, double radius, double angle,
                         TurnDirection direction) {
  RoadFrame f;
  f.start_ = start;
  f.length_ = radius * angle;
  f.curvature_ = (direction == TurnDirection::kLeft ? 1.0 : -1.0) / radius;
  return f;
}

Pose2D RoadFrame::pose_at(double s) const {
  s = std::clamp(s, 0.0, length_);
  const Vec2 p = point_at(s, 0.0);
  return {p.x, p.y, normalize_angle(start_.yaw + curvature_ * s)};
}

Vec2 RoadFrame::point_at(double s, double d) const {
  const Vec2 origin = start_.position();
  if (curvature_ == 0.0) {
    return origin + s * heading(start_.yaw) + d * left_normal(start_.yaw);
  }
  // The turn center lies on the left normal at signed distance 1/curvature;
  // a lateral offset d shrinks the radius for left turns.
  const double r = 1.0 / curvature_;
  const Vec2 center = origin + r * left_normal(start_.yaw);
  const double yaw = start_.yaw + curvature_ * s;
  return center - (r - d) * left_normal(yaw);
}

RouteGeometry::RouteGeometry(const RouteLayout& layout) {
  Pose2D cursor{};
  double s0 = 0.0;
  for (const auto& seg : layout.segments) {
    RoadFrame frame = [&] {
      if (const auto* a = std::get_if<Arc>(&seg.kind)) {
        return RoadFrame::arc(cursor, a->radius, a->angle, a->direction);
      }
      return RoadFrame::straight(cursor, segment_length(seg));
    }();
    segments_.push_back({frame, s0});
    s0 += frame.length();
    cursor = frame.pose_at(frame.length());
  }
  total_length_ = s0;
}

std::size_t RouteGeometry::segment_index(double s) const {
  if (segments_.empty()) return 0;
  const auto it = std::upper_bound(
      segments_.begin(), segments_.end(), s,
      [](double value, const Placed& p) { return value < p.s0; });
  if (it == segments_.begin()) return 0;
  return static_cast<std::size_t>(std::distance(segments_.begin(), it) - 1);
}

Pose2D RouteGeometry::pose_at(double s) const {
  const auto& seg = segments_.at(segment_index(s));
  return seg.frame.pose_at(s - seg.s0);
}

Vec2 RouteGeometry::point_at(double s, double d) const {
  const auto& seg = segments_.at(segment_index(s));
  return seg.frame.point_at(std::clamp(s - seg.s0, 0.0, seg.frame.length()), d);
}

std::vector<CenterlineSample> sample_centerline(const RouteLayout& layout,
                                                double spacing) {
  if (!(spacing > 0)) throw InvalidInput("spacing must be positive");
  const RouteGeometry geometry(layout);
  std::vector<CenterlineSample> out;
  const auto& segs = geometry.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& frame = segs[i].frame;
    const auto steps =
        std::max<long long>(1, static_cast<long long>(std::ceil(frame.length() / spacing - 1e-9)));
    const double step = frame.length() / static_cast<double>(steps);
    for (long long k = (i == 0 ? 0 : 1); k <= steps; ++k) {
      // Joints are emitted once, as the end of the earlier segment.
      const double s = k == steps ? frame.length() : static_cast<double>(k) * step;
      out.push_back({frame.pose_at(s), segs[i].s0 + s, i});
    }
  }
  return out;
}

std::vector<Pose2D> centerline(const RouteLayout& layout, double spacing) {
  const auto samples = sample_centerline(layout, spacing);
  std::vector<Pose2D> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.pose);
  return out;
}

}  // namespace trackgen
