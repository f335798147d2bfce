#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace trackgen::util {

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path);
void write_binary_file(const std::filesystem::path& path,
                       const std::vector<std::uint8_t>& bytes);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Resolves `p` against `base` unless it is already absolute.
std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::filesystem::path& p);

}  // namespace trackgen::util
