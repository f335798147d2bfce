#include "trackgen/metrics/confusion_matrix.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "trackgen/error.hpp"

namespace trackgen {

ConfusionMatrix::ConfusionMatrix(int n_classes) : n_(n_classes) {
  if (n_classes < 1 || n_classes > 256) {
    throw InvalidInput(fmt::format("class count {} outside [1, 256]", n_classes));
  }
  counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
}

void ConfusionMatrix::accumulate(const Raster& prediction, const Raster& ground_truth) {
  if (prediction.channels() != 1 || ground_truth.channels() != 1) {
    throw InvalidInput("confusion matrix needs 1-channel class-id images");
  }
  if (prediction.width() != ground_truth.width() ||
      prediction.height() != ground_truth.height()) {
    throw InvalidInput(fmt::format("prediction {}x{} and ground truth {}x{} differ",
                                   prediction.width(), prediction.height(),
                                   ground_truth.width(), ground_truth.height()));
  }
  const auto p = prediction.data();
  const auto g = ground_truth.data();
  const auto too_large = [this](std::uint8_t v) { return v >= n_; };
  if (std::any_of(p.begin(), p.end(), too_large) ||
      std::any_of(g.begin(), g.end(), too_large)) {
    throw InvalidInput(fmt::format("class id outside [0, {})", n_));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    ++counts_[std::size_t{g[i]} * static_cast<std::size_t>(n_) + p[i]];
  }
  total_ += p.size();
}

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
  if (other.n_ != n_) {
    throw InvalidInput(fmt::format("cannot merge {}-class and {}-class matrices",
                                   other.n_, n_));
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

std::vector<std::optional<double>> iou_per_class(const ConfusionMatrix& cm) {
  const int n = cm.size();
  std::vector<std::optional<double>> out(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    std::uint64_t row = 0, col = 0;
    for (int k = 0; k < n; ++k) {
      row += cm(c, k);
      col += cm(k, c);
    }
    const std::uint64_t tp = cm(c, c);
    const std::uint64_t denom = row + col - tp;  // TP + FN + FP
    if (denom > 0) {
      out[static_cast<std::size_t>(c)] =
          static_cast<double>(tp) / static_cast<double>(denom);
    }
  }
  return out;
}

double miou(const ConfusionMatrix& cm, std::span<const int> excluded) {
  const auto iou = iou_per_class(cm);
  double sum = 0.0;
  int count = 0;
  for (int c = 0; c < cm.size(); ++c) {
    const auto& v = iou[static_cast<std::size_t>(c)];
    if (!v || std::find(excluded.begin(), excluded.end(), c) != excluded.end()) continue;
    sum += *v;
    ++count;
  }
  if (count == 0) throw InvalidInput("no class has a defined IoU");
  return sum / count;
}

}  // namespace trackgen
