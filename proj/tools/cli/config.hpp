#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace trackgen::cli {

struct ConfigEntry {
  std::string key;  // as written, e.g. mount_height
  std::string value;
  int line = 0;
};

// `key = value` lines with `#` comments, the layout-file syntax. Duplicate
// keys are rejected.
std::vector<ConfigEntry> parse_config(std::string_view text);

// Long option name for a config key: underscores become dashes.
std::string option_name(std::string_view key);

}  // namespace trackgen::cli
