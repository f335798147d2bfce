#include "trackgen/road/layout.hpp"

#include <fmt/format.h>

#include "trackgen/error.hpp"
#include "trackgen/road/layout_detail.hpp"

namespace trackgen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double segment_length(const SegmentSpec& segment) {
  return std::visit(
      Overloaded{
          [](const Straight& s) { return s.length; },
          [](const Arc& a) { return a.radius * a.angle; },
          [](const Intersection& i) {
            return 2.0 * i.arm_length + i.crossing_width;
          },
          [](const ParkingZone& p) { return p.space_count * p.space_length; },
      },
      segment.kind);
}

const char* kind_name(const SegmentKind& kind) {
  return std::visit(
      Overloaded{
          [](const Straight&) { return "straight"; },
          [](const Arc&) { return "arc"; },
          [](const Intersection&) { return "intersection"; },
          [](const ParkingZone&) { return "parking_zone"; },
      },
      kind);
}

namespace detail {

std::vector<std::string> global_violations(const RouteLayout& layout) {
  std::vector<std::string> out;
  if (!(layout.lane_width > 0)) out.emplace_back("lane_width must be positive");
  if (!(layout.line_width > 0)) out.emplace_back("line_width must be positive");
  if (layout.lane_width > 0 && layout.line_width > 0 &&
      !(layout.lane_width > 2 * layout.line_width)) {
    out.emplace_back("lane_width must exceed 2 * line_width");
  }
  if (!(layout.meters_per_pixel > 0)) {
    out.emplace_back("meters_per_pixel must be positive");
  }
  const auto& m = layout.markings;
  if (!(m.dash_length > 0)) out.emplace_back("dash_length must be positive");
  if (!(m.dash_gap >= 0)) out.emplace_back("dash_gap must be non-negative");
  if (!(m.double_line_gap >= 0)) {
    out.emplace_back("double_line_gap must be non-negative");
  }
  if (!(m.start_line_width > 0)) {
    out.emplace_back("start_line_width must be positive");
  }
  if (!(m.stop_line_width > 0)) {
    out.emplace_back("stop_line_width must be positive");
  }
  if (!(m.crosswalk_length > 0)) {
    out.emplace_back("crosswalk_length must be positive");
  }
  if (!(m.crosswalk_stripe > 0)) {
    out.emplace_back("crosswalk_stripe must be positive");
  }
  if (layout.segments.empty()) {
    out.emplace_back("layout needs at least one segment");
  }
  for (auto& v : layout.class_map.violations()) out.push_back(std::move(v));
  for (const auto role : kAllRoles) {
    if (layout.class_map.find_name(class_name(role)) == nullptr) {
      out.push_back(
          fmt::format("class map has no entry named '{}'", class_name(role)));
    }
  }
  return out;
}

std::vector<std::string> segment_violations(const SegmentSpec& segment,
                                            const RouteLayout& layout) {
  std::vector<std::string> out;
  const double lw = layout.lane_width;
  std::visit(
      Overloaded{
          [&](const Straight& s) {
            if (!(s.length > 0)) out.emplace_back("length must be positive");
          },
          [&](const Arc& a) {
            if (!(a.radius > lw)) out.emplace_back("radius ≤ lane_width");
            if (!(a.angle > 0 && a.angle <= 2 * kPi)) {
              out.emplace_back("arc angle must be in (0, 2*pi]");
            }
          },
          [&](const Intersection& i) {
            if (!(i.arm_length > 0)) {
              out.emplace_back("arm length must be positive");
            }
            if (lw > 0 && !(i.crossing_width >= 2 * lw - 1e-12 &&
                  i.crossing_width <= 4 * lw + 1e-12)) {
              out.emplace_back(
                  "crossing width must be between 2 and 4 lane widths");
            }
            if (i.arm_length < i.crossing_width / 2 - lw) {
              out.emplace_back(
                  "arm length must be at least crossing_width/2 - lane_width");
            }
          },
          [&](const ParkingZone& p) {
            if (p.space_count < 1) {
              out.emplace_back("parking zone needs at least one space");
            }
            if (!(p.space_length > 2 * layout.line_width)) {
              out.emplace_back("space length must exceed 2 * line_width");
            }
            if (!(p.space_depth > 2 * layout.line_width)) {
              out.emplace_back("space depth must exceed 2 * line_width");
            }
            if (!p.occupied.empty() &&
                p.occupied.size() != static_cast<std::size_t>(p.space_count)) {
              out.push_back(fmt::format(
                  "occupancy lists {} flags for {} spaces", p.occupied.size(),
                  p.space_count));
            }
          },
      },
      segment.kind);

  const double len = segment_length(segment);
  const auto& m = layout.markings;
  double used = 0.0;
  if (segment.start_line) used += m.start_line_width;
  if (segment.stop_line && !std::holds_alternative<Intersection>(segment.kind)) {
    used += m.stop_line_width;
  }
  if (segment.crosswalk) used += m.crosswalk_length;
  if (len > 0 && used > len) {
    out.emplace_back("markings do not fit into the segment length");
  }
  return out;
}

}  // namespace detail

std::vector<std::string> validate_layout(const RouteLayout& layout) {
  auto out = detail::global_violations(layout);
  for (std::size_t i = 0; i < layout.segments.size(); ++i) {
    for (auto& v : detail::segment_violations(layout.segments[i], layout)) {
      out.push_back(fmt::format("segment {}: {}", i, v));
    }
  }
  return out;
}

void require_valid(const RouteLayout& layout) {
  const auto v = validate_layout(layout);
  if (v.empty()) return;
  std::string msg = "invalid layout:";
  for (const auto& line : v) msg += "\n  " + line;
  throw InvalidInput(msg);
}

}  // namespace trackgen
