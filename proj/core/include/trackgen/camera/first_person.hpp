#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "trackgen/camera/camera.hpp"
#include "trackgen/imaging/raster.hpp"
#include "trackgen/render/topdown.hpp"
#include "trackgen/render/trajectory.hpp"

namespace trackgen {

struct FirstPersonFrame {
  Raster raw;               // RGB
  Raster annotation_color;  // RGB class colors
};

// Inverse mapping per output pixel: back-project onto the ground, then
// sample the top-down pair (raw bilinear, annotation nearest). Pixels at or
// above the horizon and ground outside the top-down extent get the
// background color and class 0.
FirstPersonFrame render_first_person(const TopDownPair& pair,
                                     const CameraModel& cam, const Pose2D& pose);

struct FrameRecord {
  std::size_t index = 0;  // trajectory pose index
  Pose2D pose;
  std::string raw_path;   // relative to the manifest directory
  std::string ann_path;
};

struct FrameManifest {
  std::vector<FrameRecord> frames;
};

using FrameSink =
    std::function<void(const FrameRecord&, const FirstPersonFrame&)>;

// Renders every `stride`-th trajectory pose in order and hands each frame to
// `sink`. Frame k is named frame_%06d after k, under raw/ and ann/.
// Throws InvalidInput for an empty trajectory or stride < 1.
FrameManifest record_sequence(const TopDownPair& pair, const CameraModel& cam,
                              const Trajectory& trajectory, int stride,
                              const FrameSink& sink);

// record_sequence writing PPM files and frames.csv below `dir`.
FrameManifest write_sequence(const TopDownPair& pair, const CameraModel& cam,
                             const Trajectory& trajectory, int stride,
                             const std::filesystem::path& dir);

// CSV `index,x_m,y_m,yaw_rad,raw_path,ann_path`.
std::string format_frame_manifest(const FrameManifest& m);
FrameManifest parse_frame_manifest(std::string_view text);

}  // namespace trackgen
