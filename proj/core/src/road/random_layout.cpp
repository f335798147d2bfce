#include "trackgen/road/random_layout.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "trackgen/error.hpp"
#include "trackgen/road/geometry.hpp"
#include "trackgen/road/layout_detail.hpp"
#include "trackgen/util/rng.hpp"

namespace trackgen {

namespace {

constexpr double kSampleStep = 0.05;  // m between footprint samples
constexpr double kClearance = 0.15;  // m between unrelated road pieces

struct FootprintPoint {
  Vec2 p;
  double s = 0.0;      // route arclength the point belongs to
  double slack = 0.0;  // extra arclength reach (side arms)
};

std::vector<FootprintPoint> footprint(const RouteLayout& layout) {
  const RouteGeometry geometry(layout);
  const double lw = layout.lane_width;
  const double lateral[] = {-lw, -lw / 2, 0.0, lw / 2, lw};
  std::vector<FootprintPoint> pts;

  for (std::size_t i = 0; i < layout.segments.size(); ++i) {
    const auto& seg = layout.segments[i];
    const auto& placed = geometry.segments()[i];
    const auto& frame = placed.frame;
    const int n = std::max(1, static_cast<int>(std::ceil(frame.length() / kSampleStep)));
    for (int k = 0; k <= n; ++k) {
      const double s = frame.length() * k / n;
      for (const double d : lateral) {
        pts.push_back({frame.point_at(s, d), placed.s0 + s, 0.0});
      }
      if (const auto* p = std::get_if<ParkingZone>(&seg.kind)) {
        const double sign = p->side == Side::kLeft ? 1.0 : -1.0;
        for (const double f : {0.5, 1.0}) {
          pts.push_back({frame.point_at(s, sign * (lw + f * p->space_depth)),
                         placed.s0 + s, p->space_depth});
        }
      }
    }
    if (const auto* x = std::get_if<Intersection>(&seg.kind)) {
      const double sc = x->arm_length + x->crossing_width / 2;
      const int m = std::max(1, static_cast<int>(std::ceil((x->arm_length + lw) / kSampleStep)));
      for (const double side : {1.0, -1.0}) {
        for (int k = 0; k <= m; ++k) {
          const double t = (x->arm_length + lw) * k / m;
          for (const double d : lateral) {
            // Arm axis runs along the crossing center line, away from the route.
            pts.push_back({frame.point_at(sc + d, side * t), placed.s0 + sc,
                           x->arm_length + x->crossing_width});
          }
        }
      }
    }
  }
  return pts;
}

bool overlaps(const RouteLayout& layout, double close_exempt) {
  const auto pts = footprint(layout);
  if (pts.empty()) return false;
  double max_depth = 0.0;
  for (const auto& seg : layout.segments) {
    if (const auto* p = std::get_if<ParkingZone>(&seg.kind)) {
      max_depth = std::max(max_depth, p->space_depth);
    }
  }
  const double reach = kPi * (layout.lane_width + max_depth + kClearance);
  const double total = RouteGeometry(layout).total_length();

  const double cell = kClearance;
  auto key = [&](Vec2 p) {
    const auto cx = static_cast<long long>(std::floor(p.x / cell));
    const auto cy = static_cast<long long>(std::floor(p.y / cell));
    return std::pair{cx, cy};
  };
  auto pack = [](long long cx, long long cy) {
    return (cx << 32) ^ (cy & 0xffffffffLL);
  };
  std::unordered_map<long long, std::vector<std::size_t>> grid;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [cx, cy] = key(pts[i].p);
    grid[pack(cx, cy)].push_back(i);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [cx, cy] = key(pts[i].p);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        const auto it = grid.find(pack(cx + dx, cy + dy));
        if (it == grid.end()) continue;
        for (const std::size_t j : it->second) {
          if (j <= i) continue;
          const auto& a = pts[i];
          const auto& b = pts[j];
          if (std::abs(a.s - b.s) <= reach + a.slack + b.slack) continue;
          if (close_exempt > 0 && std::min(a.s, b.s) < close_exempt &&
              std::max(a.s, b.s) > total - close_exempt) {
            continue;
          }
          if (norm(a.p - b.p) < kClearance) return true;
        }
      }
    }
  }
  return false;
}

SegmentSpec draw_segment(util::Rng& rng, const LayoutConstraints& c,
                         const RouteLayout& layout, bool first) {
  SegmentSpec seg;
  const auto tag = c.kinds[rng.below(c.kinds.size())];
  switch (tag) {
    case SegmentKindTag::kStraight:
      seg.kind = Straight{rng.uniform(c.min_length, c.max_length)};
      break;
    case SegmentKindTag::kArc:
      seg.kind = Arc{rng.uniform(c.min_radius, c.max_radius),
                     rng.uniform(c.min_angle, c.max_angle),
                     rng.coin() ? TurnDirection::kLeft : TurnDirection::kRight};
      break;
    case SegmentKindTag::kIntersection:
      seg.kind = Intersection{rng.uniform(0.6, 1.0), 2 * layout.lane_width};
      break;
    case SegmentKindTag::kParkingZone: {
      ParkingZone p;
      p.side = rng.coin() ? Side::kLeft : Side::kRight;
      p.space_count = 2 + static_cast<int>(rng.below(3));
      p.space_length = rng.uniform(0.3, 0.4);
      p.space_depth = rng.uniform(0.4, 0.6);
      for (int i = 0; i < p.space_count; ++i) p.occupied.push_back(rng.coin(0.4));
      p.style = rng.coin(0.75) ? ParkingStyle::kSpaces : ParkingStyle::kArea;
      seg.kind = p;
      break;
    }
  }
  const auto style = rng.below(3);
  seg.center_line = style == 0   ? CenterLineStyle::kDashed
                    : style == 1 ? CenterLineStyle::kDoubleSolid
                                 : CenterLineStyle::kMissing;
  const bool straight = tag == SegmentKindTag::kStraight;
  seg.start_line = first && rng.coin();
  seg.stop_line = (straight || tag == SegmentKindTag::kIntersection) && rng.coin(0.3);
  seg.crosswalk = straight && rng.coin(0.25);
  if (!detail::segment_violations(seg, layout).empty()) {
    // Markings that do not fit are dropped rather than redrawn.
    seg.start_line = seg.stop_line = seg.crosswalk = false;
  }
  return seg;
}

}  // namespace

void check_constraints(const LayoutConstraints& c, const RouteLayout& base) {
  auto fail = [](const std::string& why) {
    throw InvalidInput("unsatisfiable constraints: " + why);
  };
  if (c.min_segments < 1) fail("min_segments must be at least 1");
  if (c.max_segments < c.min_segments) fail("max_segments < min_segments");
  if (c.kinds.empty()) fail("no segment kinds allowed");
  if (!(c.min_length > 0) || c.max_length < c.min_length) {
    fail("straight length range is empty");
  }
  if (!(c.min_radius > base.lane_width)) {
    fail(fmt::format("min radius {} must exceed lane_width {}", c.min_radius,
                     base.lane_width));
  }
  if (c.max_radius < c.min_radius) fail("radius range is empty");
  if (!(c.min_angle > 0) || c.max_angle < c.min_angle || c.max_angle > 2 * kPi) {
    fail("angle range must lie in (0, 2*pi]");
  }
  if (c.max_attempts < 1) fail("max_attempts must be positive");
  if (const auto v = detail::global_violations([&] {
        RouteLayout probe = base;
        probe.segments = {SegmentSpec{}};
        return probe;
      }());
      !v.empty()) {
    fail(v.front());
  }
}

bool route_overlaps_itself(const RouteLayout& layout) {
  return overlaps(layout, 0.0);
}

RouteLayout random_layout(std::uint64_t seed, const LayoutConstraints& c,
                          const RouteLayout& base) {
  check_constraints(c, base);
  const double close_exempt = c.closed ? 3 * base.lane_width : 0.0;
  for (int attempt = 0; attempt < c.max_attempts; ++attempt) {
    const std::uint64_t attempt_seed = seed + static_cast<std::uint64_t>(attempt);
    util::Rng rng(attempt_seed);
    RouteLayout layout = base;
    layout.segments.clear();
    layout.seed = attempt_seed;
    const auto count = c.min_segments +
                       static_cast<int>(rng.below(static_cast<std::uint64_t>(
                           c.max_segments - c.min_segments + 1)));
    for (int k = 0; k < count; ++k) {
      bool placed = false;
      for (int tries = 0; tries < 20 && !placed; ++tries) {
        layout.segments.push_back(draw_segment(rng, c, layout, k == 0));
        if (overlaps(layout, close_exempt)) {
          layout.segments.pop_back();
        } else {
          placed = true;
        }
      }
      if (!placed) break;
    }
    if (static_cast<int>(layout.segments.size()) < c.min_segments) continue;
    if (c.closed) {
      const RouteGeometry g(layout);
      const Pose2D end = g.pose_at(g.total_length());
      if (!(norm(end.position()) < layout.lane_width)) continue;
    }
    return layout;
  }
  throw InvalidInput(fmt::format(
      "unsatisfiable constraints: no layout found in {} attempts from seed {}",
      c.max_attempts, seed));
}

}  // namespace trackgen
