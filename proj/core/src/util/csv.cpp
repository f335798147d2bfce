#include "trackgen/util/csv.hpp"

#include <fmt/format.h>

#include "trackgen/error.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen::util {

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw InvalidInput(fmt::format("csv: missing column '{}'", name));
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  int line_no = 0;
  bool have_header = false;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    std::vector<std::string> cells;
    for (auto cell : split(line, ',')) cells.emplace_back(trim(cell));
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw ParseError(fmt::format("csv: expected {} fields, got {}",
                                   table.header.size(), cells.size()),
                       line_no);
    }
    table.rows.push_back(std::move(cells));
  }
  if (!have_header) throw InvalidInput("csv: missing header row");
  return table;
}

std::string format_csv(const CsvTable& table) {
  auto check = [](const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") != std::string::npos) {
      throw InvalidInput(fmt::format("csv: cannot encode cell '{}'", cell));
    }
  };
  std::string out;
  auto append_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      check(cells[i]);
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_row(table.header);
  for (const auto& row : table.rows) append_row(row);
  return out;
}

}  // namespace trackgen::util
