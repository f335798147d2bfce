#include "trackgen/dataset/manifest.hpp"

#include <fmt/format.h>

#include <set>

#include "trackgen/error.hpp"
#include "trackgen/imaging/netpbm.hpp"
#include "trackgen/util/csv.hpp"
#include "trackgen/util/files.hpp"

namespace trackgen {

namespace {

Perspective parse_perspective(std::string_view s, int line) {
  if (s == "first_person") return Perspective::kFirstPerson;
  if (s == "bird") return Perspective::kBird;
  throw ParseError(fmt::format("unknown perspective '{}'", s), line);
}

SplitTag parse_split(std::string_view s, int line) {
  if (s == "train") return SplitTag::kTrain;
  if (s == "val") return SplitTag::kVal;
  if (s == "test") return SplitTag::kTest;
  if (s == "unassigned") return SplitTag::kUnassigned;
  throw ParseError(fmt::format("unknown split '{}'", s), line);
}

}  // namespace

std::string_view to_string(Perspective p) {
  return p == Perspective::kBird ? "bird" : "first_person";
}

std::string_view to_string(SplitTag s) {
  switch (s) {
    case SplitTag::kTrain: return "train";
    case SplitTag::kVal: return "val";
    case SplitTag::kTest: return "test";
    case SplitTag::kUnassigned: break;
  }
  return "unassigned";
}

DatasetManifest parse_manifest(std::string_view text) {
  const util::CsvTable t = util::parse_csv(text);
  const std::size_t craw = t.column("raw_path"), cann = t.column("ann_path"),
                    cp = t.column("perspective"), cs = t.column("split"),
                    csrc = t.column("source");
  DatasetManifest m;
  std::set<std::string> seen;
  int line = 1;
  for (const auto& row : t.rows) {
    ++line;
    DatasetRecord rec{row[craw], row[cann], parse_perspective(row[cp], line),
                      parse_split(row[cs], line), row[csrc]};
    if (rec.raw_path.empty() || rec.ann_path.empty()) {
      throw ParseError("empty image path", line);
    }
    for (const auto* p : {&rec.raw_path, &rec.ann_path}) {
      if (!seen.insert(*p).second) {
        throw ParseError(fmt::format("duplicate path '{}'", *p), line);
      }
    }
    m.records.push_back(std::move(rec));
  }
  return m;
}

std::string format_manifest(const DatasetManifest& m) {
  util::CsvTable t;
  t.header = {"raw_path", "ann_path", "perspective", "split", "source"};
  for (const auto& r : m.records) {
    t.rows.push_back({r.raw_path, r.ann_path, std::string(to_string(r.perspective)),
                      std::string(to_string(r.split)), r.source});
  }
  return util::format_csv(t);
}

DatasetManifest read_manifest_file(const std::filesystem::path& path) {
  return parse_manifest(util::read_text_file(path));
}

void write_manifest_file(const std::filesystem::path& path, const DatasetManifest& m) {
  util::write_text_file(path, format_manifest(m));
}

void verify_manifest_files(const DatasetManifest& m,
                           const std::filesystem::path& base_dir) {
  for (std::size_t i = 0; i < m.records.size(); ++i) {
    const auto& r = m.records[i];
    try {
      const Raster raw = read_raster_file(util::resolve(base_dir, r.raw_path));
      const Raster ann = read_raster_file(util::resolve(base_dir, r.ann_path));
      if (ann.channels() != 1) throw InvalidInput("annotation is not a class-id image");
      if (raw.width() != ann.width() || raw.height() != ann.height()) {
        throw InvalidInput(fmt::format("raw {}x{} and annotation {}x{} differ",
                                       raw.width(), raw.height(), ann.width(),
                                       ann.height()));
      }
    } catch (const Error& e) {
      throw InvalidInput(fmt::format("record {} ({}): {}", i, r.raw_path, e.what()));
    }
  }
}

}  // namespace trackgen
