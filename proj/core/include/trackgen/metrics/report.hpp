#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trackgen/metrics/confusion_matrix.hpp"
#include "trackgen/road/class_map.hpp"

namespace trackgen {

inline constexpr int kReportNameWidth = 32;

// Per-class IoU table in percent with two decimals, followed by an mIoU
// row. Undefined classes print as "n/a"; both they and `excluded` ids are
// left out of the mean and listed in footnotes.
std::string evaluation_report(const ConfusionMatrix& cm, const ClassMap& map,
                              std::span<const int> excluded = {});

struct ReportRow {
  std::string name;
  std::optional<double> iou_percent;
};

struct ParsedReport {
  std::vector<ReportRow> rows;
  double miou_percent = 0.0;
};

ParsedReport parse_report(std::string_view text);

// CSV `class_id,name,iou` with IoU as a fraction, empty when undefined.
std::string format_iou_csv(const ConfusionMatrix& cm, const ClassMap& map);

}  // namespace trackgen
