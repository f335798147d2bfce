#include <fmt/format.h>

#include "trackgen/bev/homography.hpp"
#include "trackgen/error.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen {

Correspondences4 parse_correspondences(std::string_view text) {
  const auto lines = util::significant_lines(text);
  if (lines.size() != 4) {
    throw InvalidInput(fmt::format(
        "correspondence file needs 4 point pairs, found {}", lines.size()));
  }
  Correspondences4 c;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto tokens = util::split_whitespace(lines[i].text);
    const int n = lines[i].number;
    if (tokens.size() != 4) {
      throw ParseError("expected `src_u src_v dst_u dst_v`", n);
    }
    c.src[i] = {util::parse_real(tokens[0], "src_u", n),
                util::parse_real(tokens[1], "src_v", n)};
    c.dst[i] = {util::parse_real(tokens[2], "dst_u", n),
                util::parse_real(tokens[3], "dst_v", n)};
  }
  return c;
}

Homography parse_homography(std::string_view text) {
  Homography::Matrix m{};
  std::size_t count = 0;
  int last_line = 1;
  for (const auto& line : util::significant_lines(text)) {
    last_line = line.number;
    for (const auto token : util::split_whitespace(line.text)) {
      if (count == 9) throw ParseError("more than 9 homography entries", line.number);
      m[count++] = util::parse_real(token, "homography entry", line.number);
    }
  }
  if (count != 9) {
    throw ParseError(fmt::format("expected 9 homography entries, found {}", count),
                     last_line);
  }
  return Homography(m);
}

std::string format_homography(const Homography& h) {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    // + 0.0 turns -0 into 0.
    out += fmt::format("{} {} {}\n", util::format_real(h(r, 0) + 0.0),
                       util::format_real(h(r, 1) + 0.0),
                       util::format_real(h(r, 2) + 0.0));
  }
  return out;
}

}  // namespace trackgen
