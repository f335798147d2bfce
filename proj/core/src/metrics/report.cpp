#include "trackgen/metrics/report.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>

#include "trackgen/error.hpp"
#include "trackgen/util/csv.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen {

namespace {

std::string name_of(const ClassMap& map, int id) {
  const ClassEntry* e = map.find_id(id);
  return e ? e->name : fmt::format("class {}", id);
}

std::string row(std::string_view name, std::string_view value) {
  return fmt::format("{:<{}}  {:>7}\n", name, kReportNameWidth, value);
}

}  // namespace

std::string evaluation_report(const ConfusionMatrix& cm, const ClassMap& map,
                              std::span<const int> excluded) {
  const auto iou = iou_per_class(cm);
  std::string out = row("Class", "IoU [%]");
  out += row(std::string(kReportNameWidth, '-'), "-------");
  std::vector<std::string> undefined, skipped;
  for (int c = 0; c < cm.size(); ++c) {
    const auto& v = iou[static_cast<std::size_t>(c)];
    const std::string name = name_of(map, c);
    out += row(name, v ? fmt::format("{:.2f}", *v * 100.0) : "n/a");
    if (!v) {
      undefined.push_back(name);
    } else if (std::find(excluded.begin(), excluded.end(), c) != excluded.end()) {
      skipped.push_back(name);
    }
  }
  out += row(std::string(kReportNameWidth, '-'), "-------");
  out += row("mIoU", fmt::format("{:.2f}", miou(cm, excluded) * 100.0));
  if (!undefined.empty()) {
    out += fmt::format("\nn/a: absent from prediction and ground truth, not "
                       "counted in mIoU ({})\n", fmt::join(undefined, ", "));
  }
  if (!skipped.empty()) {
    out += fmt::format("excluded from mIoU: {}\n", fmt::join(skipped, ", "));
  }
  return out;
}

ParsedReport parse_report(std::string_view text) {
  ParsedReport report;
  bool have_miou = false;
  bool in_table = false;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = util::trim(text.substr(start, end - start));
    start = end + 1;
    ++number;
    if (line.empty()) {
      if (have_miou) break;
      continue;
    }
    if (line.front() == '-') {
      in_table = true;
      continue;
    }
    if (!in_table) continue;
    const std::size_t split = line.find_last_of(" \t");
    if (split == std::string_view::npos) throw ParseError("malformed report row", number);
    const std::string name(util::trim(line.substr(0, split)));
    const std::string_view value = line.substr(split + 1);
    if (name == "mIoU") {
      report.miou_percent = util::parse_real(value, "mIoU", number);
      have_miou = true;
      break;
    }
    ReportRow r{name, std::nullopt};
    if (value != "n/a") r.iou_percent = util::parse_real(value, "IoU", number);
    report.rows.push_back(std::move(r));
  }
  if (!have_miou) throw InvalidInput("report has no mIoU row");
  return report;
}

std::string format_iou_csv(const ConfusionMatrix& cm, const ClassMap& map) {
  const auto iou = iou_per_class(cm);
  util::CsvTable t;
  t.header = {"class_id", "name", "iou"};
  for (int c = 0; c < cm.size(); ++c) {
    const auto& v = iou[static_cast<std::size_t>(c)];
    t.rows.push_back({std::to_string(c), name_of(map, c),
                      v ? util::format_real(*v) : std::string()});
  }
  return util::format_csv(t);
}

}  // namespace trackgen
