#pragma once

#include <string>
#include <string_view>

#include "trackgen/road/layout.hpp"

namespace trackgen {

// Layout file: `key = value` globals and
// `segment <kind> key=value ...` lines, `#` comments.
//
//   lane_width = 0.4
//   segment straight length_m=2.0 center=dashed start_line=1
//   segment arc radius_m=1.5 angle_deg=90 dir=left center=double_solid
//   segment intersection arm_m=1.0 crossing_m=0.8 stop_line=1
//   segment parking_zone side=right spaces=3 space_length_m=0.35
//           space_depth_m=0.5 occupancy=101 style=spaces
//
// The result is validated; violations raise ParseError naming the line of
// the offending segment (or of the last global for layout-wide problems).
RouteLayout parse_layout(std::string_view text);

// Canonical text form; parse_layout(format_layout(l)) == l up to the class
// map, which is not part of the layout file.
std::string format_layout(const RouteLayout& layout);

}  // namespace trackgen
