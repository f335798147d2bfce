#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trackgen::util {

// Minimal CSV table: a header row and string cells. Cells never contain
// commas, quotes or newlines; writers reject such values.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; throws InvalidInput when missing.
  std::size_t column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);
std::string format_csv(const CsvTable& table);

}  // namespace trackgen::util
