#pragma once

#include <cstdint>

#include "trackgen/dataset/manifest.hpp"

namespace trackgen {

// Reassigns `unassigned` records to train or val, separately per source
// tag: a seeded shuffle, then the first round(train_fraction * n) become
// train. Other records keep their tags. Throws InvalidInput for an empty
// manifest or a fraction outside (0, 1).
DatasetManifest split_dataset(const DatasetManifest& manifest,
                              double train_fraction, std::uint64_t seed);

}  // namespace trackgen
