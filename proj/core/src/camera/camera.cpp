#include "trackgen/camera/camera.hpp"

#include <fmt/format.h>

#include <cmath>

#include "trackgen/error.hpp"

namespace trackgen {

namespace {

using V3 = std::array<double, 3>;

double dot3(const V3& a, const V3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

V3 cross3(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::vector<std::string> CameraModel::violations() const {
  std::vector<std::string> out;
  if (!(fx > 0) || !(fy > 0)) out.emplace_back("focal lengths must be positive");
  if (!std::isfinite(cx) || !std::isfinite(cy)) {
    out.emplace_back("principal point must be finite");
  }
  if (width <= 0 || height <= 0) out.emplace_back("output size must be positive");
  if (!(mount_height > 0)) out.emplace_back("mount height must be positive");
  if (!(pitch >= 0 && pitch <= kPi / 2)) {
    out.emplace_back(fmt::format("pitch {} outside [0, pi/2]", pitch));
  }
  return out;
}

void require_valid(const CameraModel& cam) {
  const auto v = cam.violations();
  if (!v.empty()) throw InvalidInput("invalid camera: " + v.front());
}

CameraAxes camera_axes(const CameraModel& cam, const Pose2D& pose) {
  const double cp = std::cos(cam.pitch);
  const double sp = std::sin(cam.pitch);
  const double cy = std::cos(pose.yaw);
  const double sy = std::sin(pose.yaw);
  CameraAxes a;
  a.center = {pose.x, pose.y, cam.mount_height};
  a.z = {cp * cy, cp * sy, -sp};
  a.x = {sy, -cy, 0.0};  // right of the direction of travel
  a.y = cross3(a.z, a.x);
  return a;
}

std::optional<Vec2> ground_to_image(const CameraModel& cam, const Pose2D& pose,
                                    Vec2 ground) {
  const CameraAxes a = camera_axes(cam, pose);
  const V3 d{ground.x - a.center[0], ground.y - a.center[1], -a.center[2]};
  const double zc = dot3(d, a.z);
  if (!(zc > 1e-9)) return std::nullopt;
  return Vec2{cam.cx + cam.fx * dot3(d, a.x) / zc,
              cam.cy + cam.fy * dot3(d, a.y) / zc};
}

std::optional<Vec2> backproject(const CameraModel& cam, const Pose2D& pose,
                                Vec2 pixel) {
  const CameraAxes a = camera_axes(cam, pose);
  const double rx = (pixel.x - cam.cx) / cam.fx;
  const double ry = (pixel.y - cam.cy) / cam.fy;
  V3 dir{};
  for (int i = 0; i < 3; ++i) dir[i] = rx * a.x[i] + ry * a.y[i] + a.z[i];
  if (!(dir[2] < -1e-9)) return std::nullopt;
  const double t = -a.center[2] / dir[2];
  return Vec2{a.center[0] + t * dir[0], a.center[1] + t * dir[1]};
}

Homography induced_ground_homography(const CameraModel& cam, const Pose2D& pose) {
  const CameraAxes a = camera_axes(cam, pose);
  // Rows of R are the camera axes; columns r1, r2 are R's first two columns.
  const V3 r1{a.x[0], a.y[0], a.z[0]};
  const V3 r2{a.x[1], a.y[1], a.z[1]};
  const V3 t{-dot3(a.x, a.center), -dot3(a.y, a.center), -dot3(a.z, a.center)};
  Homography::Matrix m{};
  const V3 cols[3] = {r1, r2, t};
  for (int c = 0; c < 3; ++c) {
    m[0 * 3 + c] = cam.fx * cols[c][0] + cam.cx * cols[c][2];
    m[1 * 3 + c] = cam.fy * cols[c][1] + cam.cy * cols[c][2];
    m[2 * 3 + c] = cols[c][2];
  }
  return Homography(m);
}

}  // namespace trackgen
