#include "trackgen/camera/first_person.hpp"

#include "trackgen/imaging/sampling.hpp"

namespace trackgen {

FirstPersonFrame render_first_person(const TopDownPair& pair,
                                     const CameraModel& cam, const Pose2D& pose) {
  require_valid(cam);
  const CameraAxes a = camera_axes(cam, pose);
  const Pixel background = to_pixel(pair.palette.background);

  FirstPersonFrame frame{Raster(cam.width, cam.height, 3),
                         Raster(cam.width, cam.height, 3)};
  frame.raw.fill(background);
  frame.annotation_color.fill(pair.unlabeled_color);

  for (int v = 0; v < cam.height; ++v) {
    const double ry = (v - cam.cy) / cam.fy;
    for (int u = 0; u < cam.width; ++u) {
      const double rx = (u - cam.cx) / cam.fx;
      const double dz = rx * a.x[2] + ry * a.y[2] + a.z[2];
      if (!(dz < -1e-9)) continue;
      const double t = -a.center[2] / dz;
      const Vec2 ground{
          a.center[0] + t * (rx * a.x[0] + ry * a.y[0] + a.z[0]),
          a.center[1] + t * (rx * a.x[1] + ry * a.y[1] + a.z[1])};
      const Vec2 p = pair.world_to_pixel(ground);
      frame.raw.set_pixel(u, v, sample_bilinear(pair.raw, p.x, p.y, background));
      frame.annotation_color.set_pixel(
          u, v, sample_nearest(pair.annotation_color, p.x, p.y, pair.unlabeled_color));
    }
  }
  return frame;
}

}  // namespace trackgen
