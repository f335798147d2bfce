#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trackgen/bev/homography.hpp"
#include "trackgen/road/geometry.hpp"

namespace trackgen {

// Pinhole camera rigidly mounted above the vehicle reference point, looking
// along the vehicle yaw and tilted down by `pitch`. No roll, no distortion.
struct CameraModel {
  double fx = 160.0;
  double fy = 160.0;
  double cx = 160.0;
  double cy = 128.0;
  int width = 320;
  int height = 256;
  double mount_height = 0.25;   // m above ground
  double pitch = kPi / 12.0;    // rad below horizontal, pi/2 is nadir

  std::vector<std::string> violations() const;
};

void require_valid(const CameraModel& cam);

// Camera frame axes in world coordinates: x right, y down, z optical axis.
struct CameraAxes {
  std::array<double, 3> center;
  std::array<double, 3> x;
  std::array<double, 3> y;
  std::array<double, 3> z;
};

CameraAxes camera_axes(const CameraModel& cam, const Pose2D& pose);

// Pixel of a ground point, or nullopt when it is not in front of the image
// plane (camera depth <= 1e-9). The pixel may lie outside the image.
std::optional<Vec2> ground_to_image(const CameraModel& cam, const Pose2D& pose,
                                    Vec2 ground);

// Ground point seen through a pixel, or nullopt when the ray does not
// descend (world z component >= -1e-9).
std::optional<Vec2> backproject(const CameraModel& cam, const Pose2D& pose,
                                Vec2 pixel);

// Ground plane (world meters) to image pixels: K [r1 r2 t].
Homography induced_ground_homography(const CameraModel& cam, const Pose2D& pose);

}  // namespace trackgen
