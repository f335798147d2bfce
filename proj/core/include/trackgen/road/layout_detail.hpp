#pragma once

#include <string>
#include <vector>

#include "trackgen/road/layout.hpp"

namespace trackgen::detail {

// Violations of layout-wide invariants only (no per-segment checks).
std::vector<std::string> global_violations(const RouteLayout& layout);

// Violations of a single segment in the context of `layout`'s globals.
std::vector<std::string> segment_violations(const SegmentSpec& segment,
                                            const RouteLayout& layout);

}  // namespace trackgen::detail
