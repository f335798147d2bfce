#include "config.hpp"

#include <fmt/format.h>

#include <set>

#include "trackgen/error.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen::cli {

std::vector<ConfigEntry> parse_config(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::set<std::string, std::less<>> seen;
  for (const auto& line : util::significant_lines(text)) {
    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected `key = value`", line.number);
    const std::string key(util::trim(line.text.substr(0, eq)));
    const std::string value(util::trim(line.text.substr(eq + 1)));
    if (key.empty()) throw ParseError("empty key", line.number);
    if (!seen.insert(key).second) {
      throw ParseError(fmt::format("duplicate key '{}'", key), line.number);
    }
    entries.push_back({key, value, line.number});
  }
  return entries;
}

std::string option_name(std::string_view key) {
  std::string name(key);
  for (char& c : name) {
    if (c == '_') c = '-';
  }
  return name;
}

}  // namespace trackgen::cli
