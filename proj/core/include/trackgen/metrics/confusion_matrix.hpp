#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trackgen/imaging/raster.hpp"

namespace trackgen {

// counts(g, p): pixels of ground-truth class g predicted as p.
class ConfusionMatrix {
 public:
  // n_classes in [1, 256].
  explicit ConfusionMatrix(int n_classes);

  int size() const noexcept { return n_; }
  std::uint64_t operator()(int gt, int pred) const noexcept {
    return counts_[static_cast<std::size_t>(gt) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(pred)];
  }
  std::uint64_t total() const noexcept { return total_; }

  // Adds one prediction / ground-truth pair of 1-channel id rasters. Throws
  // InvalidInput on a size mismatch or an id >= size(); the matrix is left
  // unchanged then.
  void accumulate(const Raster& prediction, const Raster& ground_truth);
  // Element-wise sum; sizes must match.
  void merge(const ConfusionMatrix& other);

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// TP / (TP + FP + FN) per class id, nullopt when the class occurs in
// neither prediction nor ground truth.
std::vector<std::optional<double>> iou_per_class(const ConfusionMatrix& cm);

// Mean of the defined IoUs, skipping ids in `excluded`. Throws InvalidInput
// when nothing remains.
double miou(const ConfusionMatrix& cm, std::span<const int> excluded = {});

}  // namespace trackgen
