#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trackgen::util {

struct SourceLine {
  int number = 0;        // 1-based
  std::string_view text; // comment stripped and trimmed, never empty
};

// Splits text into lines, drops `#` comments and blank lines.
std::vector<SourceLine> significant_lines(std::string_view text);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_whitespace(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

// Strict numeric parsing: the whole token must be consumed. `what` names the
// field in the error message; errors are ParseError at `line`.
double parse_real(std::string_view token, std::string_view what, int line);
long long parse_int(std::string_view token, std::string_view what, int line);
bool parse_bool(std::string_view token, std::string_view what, int line);

// Shortest representation that parses back to the identical double.
std::string format_real(double value);

}  // namespace trackgen::util
