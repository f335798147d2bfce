#include "trackgen/render/maneuver.hpp"

#include <fmt/format.h>

#include <cmath>

#include "trackgen/error.hpp"

namespace trackgen {

namespace {

constexpr double kEps = 1e-9;

// Raised-cosine ease from 0 to 1 over t in [0, 1].
double ease(double t) { return 0.5 * (1.0 - std::cos(kPi * t)); }

void require_arclength(const Trajectory& t) {
  if (t.arclength.size() != t.poses.size() || t.empty()) {
    throw InvalidInput(
        "maneuvers need a trajectory generated from the layout (with arclength)");
  }
}

// Index of the `ordinal`-th segment holding alternative T.
template <typename T>
std::size_t find_segment(const RouteLayout& layout, int ordinal,
                         const char* what) {
  int seen = 0;
  for (std::size_t i = 0; i < layout.segments.size(); ++i) {
    if (std::holds_alternative<T>(layout.segments[i].kind)) {
      if (seen == ordinal) return i;
      ++seen;
    }
  }
  throw InvalidInput(fmt::format("layout has no {} #{}", what, ordinal));
}

Trajectory overtake(const Trajectory& in, const Overtake& m,
                    const RouteLayout& layout, const RouteGeometry& g) {
  const double end = m.start + m.length;
  if (!(m.length > 0) || m.start < -kEps || end > g.total_length() + kEps) {
    throw InvalidInput(fmt::format(
        "overtake window [{}, {}] outside the route [0, {}]", m.start, end,
        g.total_length()));
  }
  for (std::size_t i = 0; i < layout.segments.size(); ++i) {
    if (!std::holds_alternative<Intersection>(layout.segments[i].kind)) continue;
    const auto& p = g.segments()[i];
    if (m.start < p.s0 + p.frame.length() && end > p.s0) {
      throw InvalidInput(fmt::format(
          "overtake window overlaps intersection segment {}: no opposite lane "
          "to use there",
          i));
    }
  }
  const double lw = layout.lane_width;
  Trajectory out = in;
  std::size_t first = out.size();
  std::size_t last = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double s = out.arclength[i];
    if (s < m.start || s > end) continue;
    const double bump = ease(2.0 * (s - m.start) / m.length);  // 0 -> 1 -> 0
    const Vec2 p = g.point_at(s, -lw / 2 + lw * bump);
    out.poses[i].x = p.x;
    out.poses[i].y = p.y;
    first = std::min(first, i);
    last = std::max(last, i);
  }
  if (first <= last) {
    recompute_yaw(out.poses, first == 0 ? 0 : first - 1, last + 1);
  }
  return out;
}

Trajectory park(const Trajectory& in, const Park& m, const RouteLayout& layout,
                const RouteGeometry& g) {
  const std::size_t idx = find_segment<ParkingZone>(layout, m.zone, "parking zone");
  const auto& zone = std::get<ParkingZone>(layout.segments[idx].kind);
  if (m.space < 0 || m.space >= zone.space_count) {
    throw InvalidInput(fmt::format("parking space {} out of range [0, {})",
                                   m.space, zone.space_count));
  }
  if (!zone.occupied.empty() && zone.occupied[static_cast<std::size_t>(m.space)]) {
    throw InvalidInput(fmt::format("parking space {} is occupied", m.space));
  }
  const double lw = layout.lane_width;
  const double sign = zone.side == Side::kLeft ? 1.0 : -1.0;
  const double d_from = -lw / 2;
  const double d_to = sign * (lw + zone.space_depth / 2);
  const double edge = sign * lw;
  const double s_target = g.segments()[idx].s0 + (m.space + 0.5) * zone.space_length;

  // Cross the road edge only inside the target space (clear of its
  // separator lines): the ease reaches the edge at fraction t_edge, so the
  // blend must end within half a space after that.
  const double q = (edge - d_from) / (d_to - d_from);
  const double t_edge = std::acos(1.0 - 2.0 * q) / kPi;
  const double room = zone.space_length / 2 - layout.line_width;
  const double blend = 0.9 * room / (1.0 - t_edge);
  const double s_begin = std::max(0.0, s_target - blend);

  Trajectory out;
  out.spacing = in.spacing;
  auto push = [&](double s) {
    const double t = s_target > s_begin ? (s - s_begin) / (s_target - s_begin) : 1.0;
    const Vec2 p = g.point_at(s, d_from + (d_to - d_from) * ease(std::clamp(t, 0.0, 1.0)));
    out.poses.push_back({p.x, p.y, 0.0});
    out.arclength.push_back(s);
  };
  std::size_t first_changed = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const double s = in.arclength[i];
    if (s > s_target - kEps) break;
    if (s < s_begin) {
      out.poses.push_back(in.poses[i]);
      out.arclength.push_back(s);
      first_changed = out.size();
    } else {
      push(s);
    }
  }
  push(s_target);
  recompute_yaw(out.poses, first_changed == 0 ? 0 : first_changed - 1,
                out.size() - 1);
  return out;
}

Trajectory cross(const Trajectory& in, const CrossIntersection& m,
                 const RouteLayout& layout, const RouteGeometry& g) {
  const std::size_t idx =
      find_segment<Intersection>(layout, m.intersection, "intersection");
  if (m.direction == CrossDirection::kStraight) return in;

  const auto& x = std::get<Intersection>(layout.segments[idx].kind);
  const auto& placed = g.segments()[idx];
  const RoadFrame& f = placed.frame;
  const double lw = layout.lane_width;
  const double a = x.arm_length;
  const double c = x.crossing_width;
  const double s_entry = placed.s0 + a;

  Trajectory out;
  out.spacing = in.spacing;
  for (std::size_t i = 0; i < in.size() && in.arclength[i] <= s_entry + kEps; ++i) {
    out.poses.push_back(in.poses[i]);
    out.arclength.push_back(in.arclength[i]);
  }
  if (out.empty()) throw InvalidInput("trajectory does not reach the intersection");
  if (out.arclength.back() < s_entry - kEps) {
    const Vec2 p = f.point_at(a, -lw / 2);
    out.poses.push_back({p.x, p.y, f.start().yaw});
    out.arclength.push_back(s_entry);
  }

  // Local frame of the intersection: x along the route, y to the left.
  // Quarter circle from the right lane into the arm's outbound right lane,
  // then straight to the end of the arm.
  const bool left = m.direction == CrossDirection::kLeft;
  const double sign = left ? 1.0 : -1.0;
  const double radius = left ? c / 2 + lw / 2 : c / 2 - lw / 2;
  const Vec2 center{a, -lw / 2 + sign * radius};
  const double turn_len = radius * kPi / 2;
  const double arm_start = sign * (-lw / 2 + sign * radius);  // |y| at turn end
  const double arm_len = std::max(0.0, lw + a - arm_start);
  const double spacing = in.spacing > 0 ? in.spacing : 0.01;
  const double base_s = s_entry;

  auto emit_local = [&](double lx, double ly, double local_yaw, double s) {
    const Vec2 p = f.point_at(lx, ly);
    out.poses.push_back({p.x, p.y, normalize_angle(f.start().yaw + local_yaw)});
    out.arclength.push_back(s);
  };
  const int n_turn = std::max(1, static_cast<int>(std::ceil(turn_len / spacing - kEps)));
  for (int k = 1; k <= n_turn; ++k) {
    const double phi = (kPi / 2) * k / n_turn;
    emit_local(center.x + radius * std::sin(phi),
               center.y - sign * radius * std::cos(phi), sign * phi,
               base_s + turn_len * k / n_turn);
  }
  const double end_x = a + radius;
  const int n_arm = static_cast<int>(std::ceil(arm_len / spacing - kEps));
  for (int k = 1; k <= n_arm; ++k) {
    const double t = arm_len * k / n_arm;
    emit_local(end_x, sign * (arm_start + t), sign * kPi / 2,
               base_s + turn_len + t);
  }
  return out;
}

}  // namespace

Trajectory insert_maneuver(const Trajectory& trajectory,
                           const ManeuverSpec& maneuver,
                           const RouteLayout& layout) {
  require_valid(layout);
  require_arclength(trajectory);
  const RouteGeometry g(layout);
  if (const auto* o = std::get_if<Overtake>(&maneuver)) {
    return overtake(trajectory, *o, layout, g);
  }
  if (const auto* p = std::get_if<Park>(&maneuver)) {
    return park(trajectory, *p, layout, g);
  }
  return cross(trajectory, std::get<CrossIntersection>(maneuver), layout, g);
}

}  // namespace trackgen
