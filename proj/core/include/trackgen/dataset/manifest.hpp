#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace trackgen {

enum class Perspective { kFirstPerson, kBird };
enum class SplitTag { kTrain, kVal, kTest, kUnassigned };

std::string_view to_string(Perspective p);
std::string_view to_string(SplitTag s);

struct DatasetRecord {
  std::string raw_path;  // relative to the manifest directory
  std::string ann_path;  // 1-channel class-id image
  Perspective perspective = Perspective::kFirstPerson;
  SplitTag split = SplitTag::kUnassigned;
  std::string source;
  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

struct DatasetManifest {
  std::vector<DatasetRecord> records;
  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

// CSV `raw_path,ann_path,perspective,split,source`. Parsing checks that
// paths are unique.
DatasetManifest parse_manifest(std::string_view text);
std::string format_manifest(const DatasetManifest& m);

DatasetManifest read_manifest_file(const std::filesystem::path& path);
void write_manifest_file(const std::filesystem::path& path, const DatasetManifest& m);

// Checks that every referenced file exists, decodes, and that each record's
// raw and annotation images share dimensions. Throws InvalidInput naming the
// first offending record.
void verify_manifest_files(const DatasetManifest& m,
                           const std::filesystem::path& base_dir);

}  // namespace trackgen
