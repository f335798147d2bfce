#include "trackgen/dataset/split.hpp"

#include <cmath>
#include <map>

#include "trackgen/error.hpp"
#include "trackgen/util/rng.hpp"

namespace trackgen {

DatasetManifest split_dataset(const DatasetManifest& manifest,
                              double train_fraction, std::uint64_t seed) {
  if (manifest.records.empty()) throw InvalidInput("manifest is empty");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InvalidInput("train fraction must lie in (0, 1)");
  }
  std::map<std::string, std::vector<std::size_t>> by_source;
  for (std::size_t i = 0; i < manifest.records.size(); ++i) {
    if (manifest.records[i].split == SplitTag::kUnassigned) {
      by_source[manifest.records[i].source].push_back(i);
    }
  }
  DatasetManifest out = manifest;
  util::Rng rng(seed);
  for (auto& [source, indices] : by_source) {
    rng.shuffle(indices);
    const auto train = static_cast<std::size_t>(
        std::round(train_fraction * static_cast<double>(indices.size())));
    for (std::size_t k = 0; k < indices.size(); ++k) {
      out.records[indices[k]].split = k < train ? SplitTag::kTrain : SplitTag::kVal;
    }
  }
  return out;
}

}  // namespace trackgen
