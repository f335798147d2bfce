#include <fmt/format.h>

#include "trackgen/camera/first_person.hpp"
#include "trackgen/error.hpp"
#include "trackgen/imaging/netpbm.hpp"
#include "trackgen/util/csv.hpp"
#include "trackgen/util/files.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen {

FrameManifest record_sequence(const TopDownPair& pair, const CameraModel& cam,
                              const Trajectory& trajectory, int stride,
                              const FrameSink& sink) {
  if (trajectory.empty()) throw InvalidInput("trajectory is empty");
  if (stride < 1) throw InvalidInput(fmt::format("stride must be >= 1, got {}", stride));
  require_valid(cam);

  FrameManifest manifest;
  for (std::size_t i = 0; i < trajectory.size(); i += static_cast<std::size_t>(stride)) {
    const std::size_t k = manifest.frames.size();
    FrameRecord rec{i, trajectory.poses[i], fmt::format("raw/frame_{:06d}.ppm", k),
                    fmt::format("ann/frame_{:06d}.ppm", k)};
    const FirstPersonFrame frame = render_first_person(pair, cam, rec.pose);
    if (sink) sink(rec, frame);
    manifest.frames.push_back(std::move(rec));
  }
  return manifest;
}

FrameManifest write_sequence(const TopDownPair& pair, const CameraModel& cam,
                             const Trajectory& trajectory, int stride,
                             const std::filesystem::path& dir) {
  auto manifest = record_sequence(
      pair, cam, trajectory, stride,
      [&](const FrameRecord& rec, const FirstPersonFrame& frame) {
        write_raster_file(dir / rec.raw_path, frame.raw);
        write_raster_file(dir / rec.ann_path, frame.annotation_color);
      });
  util::write_text_file(dir / "frames.csv", format_frame_manifest(manifest));
  return manifest;
}

std::string format_frame_manifest(const FrameManifest& m) {
  util::CsvTable t;
  t.header = {"index", "x_m", "y_m", "yaw_rad", "raw_path", "ann_path"};
  for (const auto& f : m.frames) {
    t.rows.push_back({std::to_string(f.index), util::format_real(f.pose.x),
                      util::format_real(f.pose.y), util::format_real(f.pose.yaw),
                      f.raw_path, f.ann_path});
  }
  return util::format_csv(t);
}

FrameManifest parse_frame_manifest(std::string_view text) {
  const util::CsvTable t = util::parse_csv(text);
  const std::size_t ci = t.column("index"), cx = t.column("x_m"),
                    cy = t.column("y_m"), cyaw = t.column("yaw_rad"),
                    craw = t.column("raw_path"), cann = t.column("ann_path");
  FrameManifest m;
  int line = 1;
  for (const auto& row : t.rows) {
    ++line;
    const long long index = util::parse_int(row[ci], "index", line);
    if (index < 0) throw ParseError("index must be non-negative", line);
    m.frames.push_back({static_cast<std::size_t>(index),
                        {util::parse_real(row[cx], "x_m", line),
                         util::parse_real(row[cy], "y_m", line),
                         util::parse_real(row[cyaw], "yaw_rad", line)},
                        row[craw], row[cann]});
  }
  return m;
}

}  // namespace trackgen
