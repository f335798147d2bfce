#include "trackgen/render/topdown.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "polygon_fill.hpp"
#include "trackgen/error.hpp"

namespace trackgen {

namespace {

// One filled polygon of the paint list. Either layer may be left untouched.
struct Shape {
  std::vector<Vec2> polygon;  // world coordinates
  std::optional<std::uint8_t> class_id;
  std::optional<Rgb> raw;
};

class ShapeList {
 public:
  ShapeList(const RouteLayout& layout) : mpp_(layout.meters_per_pixel) {}

  // Adds the band s in [s0, s1], d in [d0, d1] of `frame`, tessellated
  // finely enough that arc chords deviate less than 0.1 px.
  void ribbon(const RoadFrame& frame, double s0, double s1, double d0,
              double d1, std::optional<std::uint8_t> cls,
              std::optional<Rgb> raw) {
    s0 = std::max(s0, 0.0);
    s1 = std::min(s1, frame.length());
    if (!(s1 > s0) || !(d1 > d0)) return;
    int pieces = 1;
    if (frame.is_arc()) {
      const double r = 1.0 / std::abs(frame.curvature()) +
                       std::max(std::abs(d0), std::abs(d1));
      const double step = 2.0 * std::acos(1.0 - std::min(1.0, 0.1 * mpp_ / r));
      const double sweep = (s1 - s0) * std::abs(frame.curvature());
      pieces = std::max(1, static_cast<int>(std::ceil(sweep / step)));
    }
    for (int k = 0; k < pieces; ++k) {
      const double a = s0 + (s1 - s0) * k / pieces;
      const double b = k + 1 == pieces ? s1 : s0 + (s1 - s0) * (k + 1) / pieces;
      shapes_.push_back({{frame.point_at(a, d0), frame.point_at(b, d0),
                          frame.point_at(b, d1), frame.point_at(a, d1)},
                         cls,
                         raw});
    }
  }

  const std::vector<Shape>& shapes() const { return shapes_; }

 private:
  double mpp_;
  std::vector<Shape> shapes_;
};

struct Ids {
  std::uint8_t unlabeled, left, right, dashed, double_solid, start, stop,
      crosswalk, space, area;
  explicit Ids(const ClassMap& m)
      : unlabeled(m.id_for(ClassRole::kUnlabeled)),
        left(m.id_for(ClassRole::kLeftLane)),
        right(m.id_for(ClassRole::kRightLane)),
        dashed(m.id_for(ClassRole::kDashedCenterLine)),
        double_solid(m.id_for(ClassRole::kDoubleSolidCenterLine)),
        start(m.id_for(ClassRole::kStartingLine)),
        stop(m.id_for(ClassRole::kStopLine)),
        crosswalk(m.id_for(ClassRole::kCrosswalk)),
        space(m.id_for(ClassRole::kFreeParkingSpace)),
        area(m.id_for(ClassRole::kFreeParkingArea)) {}
};

// Paints one road piece (lanes, edge lines, center line) over [s0, s1] of
// `frame`, leaving out the lane-edge lines inside `edge_gap` when given.
class RoadPainter {
 public:
  RoadPainter(const RouteLayout& layout, const Ids& ids, const Palette& pal,
              ShapeList& out)
      : layout_(layout), ids_(ids), pal_(pal), out_(out) {}

  void lanes(const RoadFrame& f, double s0, double s1) {
    const double lw = layout_.lane_width;
    out_.ribbon(f, s0, s1, 0.0, lw, ids_.left, pal_.surface);
    out_.ribbon(f, s0, s1, -lw, 0.0, ids_.right, pal_.surface);
  }

  void edge_lines(const RoadFrame& f, double s0, double s1) {
    const double lw = layout_.lane_width;
    const double w = layout_.line_width;
    out_.ribbon(f, s0, s1, lw - w, lw, std::nullopt, pal_.marking);
    out_.ribbon(f, s0, s1, -lw, -lw + w, std::nullopt, pal_.marking);
  }

  // `phase` is the route arclength at s = 0 so dashes run continuously
  // across segment joints.
  void center_line(const RoadFrame& f, double s0, double s1,
                   CenterLineStyle style, double phase) {
    const double w = layout_.line_width;
    const auto& m = layout_.markings;
    switch (style) {
      case CenterLineStyle::kMissing:
        return;
      case CenterLineStyle::kDashed: {
        const double period = m.dash_length + m.dash_gap;
        const double first = std::floor((phase + s0) / period) * period - phase;
        for (double a = first; a < s1; a += period) {
          const double lo = std::max(a, s0);
          const double hi = std::min(a + m.dash_length, s1);
          out_.ribbon(f, lo, hi, -w / 2, w / 2, ids_.dashed, pal_.marking);
        }
        return;
      }
      case CenterLineStyle::kDoubleSolid: {
        const double g = m.double_line_gap / 2;
        out_.ribbon(f, s0, s1, -g - w, g + w, ids_.double_solid, pal_.surface);
        out_.ribbon(f, s0, s1, g, g + w, std::nullopt, pal_.marking);
        out_.ribbon(f, s0, s1, -g - w, -g, std::nullopt, pal_.marking);
        return;
      }
    }
  }

 private:
  const RouteLayout& layout_;
  const Ids& ids_;
  const Palette& pal_;
  ShapeList& out_;
};

RoadFrame arm_frame(const RoadFrame& main, const Intersection& x, double lw,
                    double side) {
  const double sc = x.arm_length + x.crossing_width / 2;
  const Vec2 start = main.point_at(sc, side * lw);
  const double yaw = main.start().yaw + side * kPi / 2;
  return RoadFrame::straight({start.x, start.y, normalize_angle(yaw)},
                             x.arm_length);
}

void paint_parking(const RoadFrame& f, const ParkingZone& p,
                   const RouteLayout& layout, const Ids& ids,
                   const Palette& pal, ShapeList& out) {
  const double lw = layout.lane_width;
  const double w = layout.line_width;
  const double sign = p.side == Side::kLeft ? 1.0 : -1.0;
  auto band = [&](double s0, double s1, double e0, double e1,
                  std::optional<std::uint8_t> cls, std::optional<Rgb> raw) {
    // e is the distance from the road edge into the strip.
    const double d0 = sign * (lw + e0);
    const double d1 = sign * (lw + e1);
    out.ribbon(f, s0, s1, std::min(d0, d1), std::max(d0, d1), cls, raw);
  };
  const double depth = p.space_depth;
  const double len = p.space_length;
  const std::uint8_t free_id =
      p.style == ParkingStyle::kSpaces ? ids.space : ids.area;
  for (int j = 0; j < p.space_count; ++j) {
    const bool occupied =
        !p.occupied.empty() && p.occupied[static_cast<std::size_t>(j)];
    band(j * len, (j + 1) * len, 0.0, depth, occupied ? ids.unlabeled : free_id,
         occupied ? pal.obstacle : pal.surface);
  }
  band(0.0, p.space_count * len, depth - w, depth, ids.unlabeled, pal.marking);
  for (int j = 0; j <= p.space_count; ++j) {
    if (p.style == ParkingStyle::kArea && j != 0 && j != p.space_count) continue;
    band(j * len - w / 2, j * len + w / 2, 0.0, depth, ids.unlabeled,
         pal.marking);
  }
}

}  // namespace

TopDownPair render_topdown(const RouteLayout& layout,
                           const RenderOptions& options) {
  require_valid(layout);
  const Ids ids(layout.class_map);
  const Palette& pal = options.palette;
  const RouteGeometry geometry(layout);
  const double lw = layout.lane_width;
  const auto& m = layout.markings;

  ShapeList shapes(layout);
  RoadPainter road(layout, ids, pal, shapes);

  // Surfaces first, then markings, so later shapes overwrite earlier ones.
  for (std::size_t i = 0; i < layout.segments.size(); ++i) {
    const auto& seg = layout.segments[i];
    const auto& f = geometry.segments()[i].frame;
    road.lanes(f, 0.0, f.length());
    if (const auto* x = std::get_if<Intersection>(&seg.kind)) {
      for (const double side : {1.0, -1.0}) {
        road.lanes(arm_frame(f, *x, lw, side), 0.0, x->arm_length);
      }
    }
    if (const auto* p = std::get_if<ParkingZone>(&seg.kind)) {
      paint_parking(f, *p, layout, ids, pal, shapes);
    }
  }

  for (std::size_t i = 0; i < layout.segments.size(); ++i) {
    const auto& seg = layout.segments[i];
    const auto& placed = geometry.segments()[i];
    const auto& f = placed.frame;
    const double len = f.length();

    if (const auto* x = std::get_if<Intersection>(&seg.kind)) {
      const double a = x->arm_length;
      const double c = x->crossing_width;
      road.edge_lines(f, 0.0, a);
      road.edge_lines(f, a + c, len);
      road.center_line(f, 0.0, a, seg.center_line, placed.s0);
      road.center_line(f, a + c, len, seg.center_line, placed.s0);
      for (const double side : {1.0, -1.0}) {
        const RoadFrame arm = arm_frame(f, *x, lw, side);
        road.edge_lines(arm, 0.0, a);
        road.center_line(arm, 0.0, a, seg.center_line, 0.0);
        if (seg.stop_line) {
          // Traffic heading into the crossing drives on the arm's left lane.
          shapes.ribbon(arm, 0.0, m.stop_line_width, 0.0, lw, ids.stop,
                        pal.marking);
        }
      }
      if (seg.stop_line) {
        shapes.ribbon(f, a - m.stop_line_width, a, -lw, 0.0, ids.stop,
                      pal.marking);
        shapes.ribbon(f, a + c, a + c + m.stop_line_width, 0.0, lw, ids.stop,
                      pal.marking);
      }
    } else {
      road.edge_lines(f, 0.0, len);
      road.center_line(f, 0.0, len, seg.center_line, placed.s0);
      if (seg.stop_line) {
        shapes.ribbon(f, len - m.stop_line_width, len, -lw, 0.0, ids.stop,
                      pal.marking);
      }
    }

    if (seg.start_line) {
      shapes.ribbon(f, 0.0, m.start_line_width, -lw, lw, ids.start, pal.marking);
    }
    if (seg.crosswalk) {
      const double c0 = len / 2 - m.crosswalk_length / 2;
      const double c1 = len / 2 + m.crosswalk_length / 2;
      shapes.ribbon(f, c0, c1, -lw, lw, ids.crosswalk, pal.surface);
      for (double d = -lw; d < lw; d += 2 * m.crosswalk_stripe) {
        shapes.ribbon(f, c0, c1, d, std::min(d + m.crosswalk_stripe, lw),
                      std::nullopt, pal.marking);
      }
    }
  }

  double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;
  for (const auto& s : shapes.shapes()) {
    for (const auto& v : s.polygon) {
      min_x = std::min(min_x, v.x);
      min_y = std::min(min_y, v.y);
      max_x = std::max(max_x, v.x);
      max_y = std::max(max_y, v.y);
    }
  }
  const double mpp = layout.meters_per_pixel;
  const Vec2 origin{min_x - options.margin, max_y + options.margin};
  const double w_px = std::ceil((max_x - min_x + 2 * options.margin) / mpp) + 1;
  const double h_px = std::ceil((max_y - min_y + 2 * options.margin) / mpp) + 1;
  if (w_px > options.max_width || h_px > options.max_height) {
    throw InvalidInput(fmt::format(
        "track needs a {}x{} raster, larger than the {}x{} limit", w_px, h_px,
        options.max_width, options.max_height));
  }
  const int width = static_cast<int>(w_px);
  const int height = static_cast<int>(h_px);

  TopDownPair pair;
  pair.meters_per_pixel = mpp;
  pair.world_origin = origin;
  pair.palette = pal;
  pair.raw = Raster(width, height, 3);
  pair.raw.fill(to_pixel(pal.background));
  pair.annotation_id = Raster(width, height, 1);
  pair.annotation_id.fill({ids.unlabeled, 0, 0});

  std::vector<Vec2> px;
  for (const auto& s : shapes.shapes()) {
    px.clear();
    for (const auto& v : s.polygon) px.push_back(pair.world_to_pixel(v));
    const Pixel raw = s.raw ? to_pixel(*s.raw) : Pixel{};
    const std::uint8_t cls = s.class_id.value_or(0);
    const bool paint_raw = s.raw.has_value();
    const bool paint_cls = s.class_id.has_value();
    detail::fill_polygon(px, width, height, [&](int x, int y) {
      if (paint_raw) pair.raw.set_pixel(x, y, raw);
      if (paint_cls) pair.annotation_id.at(x, y) = cls;
    });
  }
  pair.annotation_color = colorize(pair.annotation_id, layout.class_map);
  pair.unlabeled_color = to_pixel(layout.class_map.find_id(ids.unlabeled)->color);
  return pair;
}

}  // namespace trackgen
