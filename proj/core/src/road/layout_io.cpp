#include "trackgen/road/layout_io.hpp"

#include <fmt/format.h>

#include <map>
#include <optional>

#include "trackgen/error.hpp"
#include "trackgen/road/layout_detail.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen {

namespace {

using util::format_real;

struct Fields {
  int line = 0;
  std::map<std::string, std::string, std::less<>> values;
  std::map<std::string, bool, std::less<>> used;

  std::optional<std::string_view> take(std::string_view key) {
    const auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    used[it->first] = true;
    return it->second;
  }

  std::optional<double> real(std::string_view key) {
    if (auto v = take(key)) return util::parse_real(*v, key, line);
    return std::nullopt;
  }

  double required_real(std::string_view key, std::string_view kind) {
    if (auto v = real(key)) return *v;
    throw ParseError(fmt::format("{} segment requires {}", kind, key), line);
  }

  std::optional<bool> flag(std::string_view key) {
    if (auto v = take(key)) return util::parse_bool(*v, key, line);
    return std::nullopt;
  }

  void reject_unused() const {
    for (const auto& [key, value] : values) {
      if (!used.contains(key)) {
        throw ParseError(fmt::format("unknown segment field '{}'", key), line);
      }
    }
  }
};

CenterLineStyle parse_center(std::string_view v, int line) {
  if (v == "dashed") return CenterLineStyle::kDashed;
  if (v == "double_solid") return CenterLineStyle::kDoubleSolid;
  if (v == "missing") return CenterLineStyle::kMissing;
  throw ParseError(fmt::format("unknown center line style '{}'", v), line);
}

std::string_view center_token(CenterLineStyle s) {
  switch (s) {
    case CenterLineStyle::kDashed: return "dashed";
    case CenterLineStyle::kDoubleSolid: return "double_solid";
    case CenterLineStyle::kMissing: return "missing";
  }
  return "dashed";
}

Side parse_side(std::string_view v, int line) {
  if (v == "left") return Side::kLeft;
  if (v == "right") return Side::kRight;
  throw ParseError(fmt::format("side must be left or right, got '{}'", v), line);
}

// Parsed segment plus the intersection crossing width when it was left to
// default (it depends on lane_width, which may be set later in the file).
struct ParsedSegment {
  SegmentSpec spec;
  int line = 0;
  bool default_crossing = false;
};

ParsedSegment parse_segment(std::string_view kind,
                            std::span<const std::string_view> tokens,
                            int line) {
  Fields f;
  f.line = line;
  for (const auto tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(fmt::format("expected key=value, got '{}'", tok), line);
    }
    const std::string key(tok.substr(0, eq));
    if (f.values.contains(key)) {
      throw ParseError(fmt::format("duplicate field '{}'", key), line);
    }
    f.values.emplace(key, std::string(tok.substr(eq + 1)));
  }

  ParsedSegment out;
  out.line = line;
  SegmentSpec& seg = out.spec;
  if (kind == "straight") {
    seg.kind = Straight{f.required_real("length_m", kind)};
  } else if (kind == "arc") {
    Arc a;
    a.radius = f.required_real("radius_m", kind);
    const auto deg = f.real("angle_deg");
    const auto rad = f.real("angle_rad");
    if (deg && rad) {
      throw ParseError("give either angle_deg or angle_rad, not both", line);
    }
    if (!deg && !rad) throw ParseError("arc segment requires angle_deg", line);
    a.angle = rad ? *rad : *deg * kPi / 180.0;
    if (auto dir = f.take("dir")) {
      if (*dir == "left") {
        a.direction = TurnDirection::kLeft;
      } else if (*dir == "right") {
        a.direction = TurnDirection::kRight;
      } else {
        throw ParseError(fmt::format("dir must be left or right, got '{}'", *dir),
                         line);
      }
    }
    seg.kind = a;
  } else if (kind == "intersection") {
    Intersection i;
    if (auto v = f.real("arm_m")) i.arm_length = *v;
    if (auto v = f.real("crossing_m")) {
      i.crossing_width = *v;
    } else {
      out.default_crossing = true;
    }
    seg.kind = i;
  } else if (kind == "parking_zone") {
    ParkingZone p;
    if (auto v = f.take("side")) p.side = parse_side(*v, line);
    if (auto v = f.take("spaces")) {
      p.space_count = static_cast<int>(util::parse_int(*v, "spaces", line));
    }
    if (auto v = f.real("space_length_m")) p.space_length = *v;
    if (auto v = f.real("space_depth_m")) p.space_depth = *v;
    if (auto v = f.take("occupancy")) {
      for (const char c : *v) {
        if (c != '0' && c != '1') {
          throw ParseError("occupancy must be a string of 0 and 1", line);
        }
        p.occupied.push_back(c == '1');
      }
    }
    if (auto v = f.take("style")) {
      if (*v == "spaces") {
        p.style = ParkingStyle::kSpaces;
      } else if (*v == "area") {
        p.style = ParkingStyle::kArea;
      } else {
        throw ParseError(fmt::format("style must be spaces or area, got '{}'", *v),
                         line);
      }
    }
    seg.kind = p;
  } else {
    throw ParseError(fmt::format("unknown segment kind '{}'", kind), line);
  }

  if (auto v = f.take("center")) seg.center_line = parse_center(*v, line);
  if (auto v = f.flag("start_line")) seg.start_line = *v;
  if (auto v = f.flag("stop_line")) seg.stop_line = *v;
  if (auto v = f.flag("crosswalk")) seg.crosswalk = *v;
  f.reject_unused();
  return out;
}

void set_global(RouteLayout& layout, std::string_view key,
                std::string_view value, int line) {
  auto real = [&] { return util::parse_real(value, key, line); };
  auto& m = layout.markings;
  if (key == "lane_width") {
    layout.lane_width = real();
  } else if (key == "line_width") {
    layout.line_width = real();
  } else if (key == "meters_per_pixel") {
    layout.meters_per_pixel = real();
  } else if (key == "seed") {
    const auto v = util::parse_int(value, key, line);
    if (v < 0) throw ParseError("seed must be non-negative", line);
    layout.seed = static_cast<std::uint64_t>(v);
  } else if (key == "dash_length") {
    m.dash_length = real();
  } else if (key == "dash_gap") {
    m.dash_gap = real();
  } else if (key == "double_line_gap") {
    m.double_line_gap = real();
  } else if (key == "start_line_width") {
    m.start_line_width = real();
  } else if (key == "stop_line_width") {
    m.stop_line_width = real();
  } else if (key == "crosswalk_length") {
    m.crosswalk_length = real();
  } else if (key == "crosswalk_stripe") {
    m.crosswalk_stripe = real();
  } else {
    throw ParseError(fmt::format("unknown setting '{}'", key), line);
  }
}

}  // namespace

RouteLayout parse_layout(std::string_view text) {
  RouteLayout layout;
  std::vector<ParsedSegment> segments;
  int last_global_line = 1;
  for (const auto& line : util::significant_lines(text)) {
    const auto tokens = util::split_whitespace(line.text);
    if (tokens.front() == "segment") {
      if (tokens.size() < 2) throw ParseError("segment kind missing", line.number);
      segments.push_back(parse_segment(
          tokens[1], std::span(tokens).subspan(2), line.number));
      continue;
    }
    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(fmt::format("expected 'key = value' or 'segment ...', got '{}'",
                                   line.text),
                       line.number);
    }
    const auto key = util::trim(line.text.substr(0, eq));
    const auto value = util::trim(line.text.substr(eq + 1));
    set_global(layout, key, value, line.number);
    last_global_line = line.number;
  }

  for (auto& s : segments) {
    if (s.default_crossing) {
      std::get<Intersection>(s.spec.kind).crossing_width = 2 * layout.lane_width;
    }
    layout.segments.push_back(s.spec);
  }

  if (const auto v = detail::global_violations(layout); !v.empty()) {
    throw ParseError(v.front(), last_global_line);
  }
  for (const auto& s : segments) {
    if (const auto v = detail::segment_violations(s.spec, layout); !v.empty()) {
      throw ParseError(v.front(), s.line);
    }
  }
  return layout;
}

std::string format_layout(const RouteLayout& layout) {
  std::string out;
  auto global = [&](std::string_view key, double v) {
    out += fmt::format("{} = {}\n", key, format_real(v));
  };
  global("lane_width", layout.lane_width);
  global("line_width", layout.line_width);
  global("meters_per_pixel", layout.meters_per_pixel);
  if (layout.seed) out += fmt::format("seed = {}\n", *layout.seed);
  const auto& m = layout.markings;
  global("dash_length", m.dash_length);
  global("dash_gap", m.dash_gap);
  global("double_line_gap", m.double_line_gap);
  global("start_line_width", m.start_line_width);
  global("stop_line_width", m.stop_line_width);
  global("crosswalk_length", m.crosswalk_length);
  global("crosswalk_stripe", m.crosswalk_stripe);

  for (const auto& seg : layout.segments) {
    out += "segment ";
    out += kind_name(seg.kind);
    if (const auto* s = std::get_if<Straight>(&seg.kind)) {
      out += fmt::format(" length_m={}", format_real(s->length));
    } else if (const auto* a = std::get_if<Arc>(&seg.kind)) {
      out += fmt::format(" radius_m={} angle_rad={} dir={}",
                         format_real(a->radius), format_real(a->angle),
                         a->direction == TurnDirection::kLeft ? "left" : "right");
    } else if (const auto* i = std::get_if<Intersection>(&seg.kind)) {
      out += fmt::format(" arm_m={} crossing_m={}", format_real(i->arm_length),
                         format_real(i->crossing_width));
    } else if (const auto* p = std::get_if<ParkingZone>(&seg.kind)) {
      out += fmt::format(" side={} spaces={} space_length_m={} space_depth_m={}",
                         p->side == Side::kLeft ? "left" : "right",
                         p->space_count, format_real(p->space_length),
                         format_real(p->space_depth));
      if (!p->occupied.empty()) {
        out += " occupancy=";
        for (const bool b : p->occupied) out += b ? '1' : '0';
      }
      out += p->style == ParkingStyle::kArea ? " style=area" : " style=spaces";
    }
    out += fmt::format(" center={} start_line={} stop_line={} crosswalk={}\n",
                       center_token(seg.center_line), seg.start_line ? 1 : 0,
                       seg.stop_line ? 1 : 0, seg.crosswalk ? 1 : 0);
  }
  return out;
}

RouteLayout sample_layout() {
  return parse_layout(R"(# sample track
segment straight length_m=2.0 center=dashed start_line=1
segment arc radius_m=1.5 angle_deg=90 dir=left center=double_solid
segment intersection arm_m=1.0 crossing_m=0.8 center=dashed stop_line=1
segment arc radius_m=1.2 angle_deg=60 dir=right center=dashed
segment parking_zone side=right spaces=4 space_length_m=0.35 space_depth_m=0.5 occupancy=0110
segment parking_zone side=left spaces=3 space_length_m=0.4 space_depth_m=0.45 style=area
segment straight length_m=1.5 center=missing crosswalk=1 stop_line=1
)");
}

}  // namespace trackgen
