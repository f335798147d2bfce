#pragma once

// Shared helpers and independent oracles for the test suites. Nothing here
// calls into the library's geometry, metrics or camera code.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "trackgen/imaging/raster.hpp"
#include "trackgen/road/layout.hpp"

namespace trackgen::testing {

constexpr double kPiOracle = 3.14159265358979323846;

// Self-deleting directory under the system temp dir.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("trackgen_" + tag + "_" + std::to_string(rd()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Every regular file below `dir`, relative path -> contents.
inline std::vector<std::pair<std::string, std::string>> tree_contents(
    const std::filesystem::path& dir) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    out.emplace_back(std::filesystem::relative(e.path(), dir).generic_string(),
                     slurp(e.path()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Raster random_raster(std::mt19937_64& rng, int w, int h, int channels,
                            int max_value = 255) {
  Raster r(w, h, channels);
  std::uniform_int_distribution<int> d(0, max_value);
  for (auto& b : r.data()) b = static_cast<std::uint8_t>(d(rng));
  return r;
}

// Per-class IoU by explicit set arithmetic over pixel indices.
inline std::vector<std::optional<double>> oracle_iou(
    const std::vector<std::pair<Raster, Raster>>& pred_gt, int n_classes) {
  std::vector<std::optional<double>> out(static_cast<std::size_t>(n_classes));
  for (int c = 0; c < n_classes; ++c) {
    std::set<std::pair<std::size_t, std::size_t>> pred_set, gt_set;
    for (std::size_t img = 0; img < pred_gt.size(); ++img) {
      const auto p = pred_gt[img].first.data();
      const auto g = pred_gt[img].second.data();
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == c) pred_set.insert({img, i});
        if (g[i] == c) gt_set.insert({img, i});
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> inter, uni;
    std::set_intersection(pred_set.begin(), pred_set.end(), gt_set.begin(),
                          gt_set.end(), std::back_inserter(inter));
    std::set_union(pred_set.begin(), pred_set.end(), gt_set.begin(), gt_set.end(),
                   std::back_inserter(uni));
    if (!uni.empty()) {
      out[static_cast<std::size_t>(c)] =
          static_cast<double>(inter.size()) / static_cast<double>(uni.size());
    }
  }
  return out;
}

inline double oracle_mean(const std::vector<std::optional<double>>& iou) {
  double sum = 0;
  int n = 0;
  for (const auto& v : iou) {
    if (v) {
      sum += *v;
      ++n;
    }
  }
  return sum / n;
}

// Pinhole projection written out with explicit trigonometry: rotate the
// ground point into the vehicle frame, then into a camera tilted down by
// `pitch` at height h.
struct OracleCamera {
  double fx, fy, cx, cy, h, pitch;
};

inline std::optional<std::array<double, 2>> oracle_project(const OracleCamera& c,
                                                           double px, double py,
                                                           double yaw, double gx,
                                                           double gy) {
  const double dx = gx - px, dy = gy - py;
  const double forward = dx * std::cos(yaw) + dy * std::sin(yaw);
  const double left = -dx * std::sin(yaw) + dy * std::cos(yaw);
  const double depth = forward * std::cos(c.pitch) + c.h * std::sin(c.pitch);
  const double down = c.h * std::cos(c.pitch) - forward * std::sin(c.pitch);
  if (depth <= 1e-9) return std::nullopt;
  return std::array<double, 2>{c.cx - c.fx * left / depth, c.cy + c.fy * down / depth};
}

// Analytic road centerline rebuilt from the layout: a chain of straight
// lines and circular arcs starting at the origin heading +x.
struct OraclePiece {
  double x0, y0, yaw0;
  double length;
  double curvature;  // signed, 0 for straights
};

inline double oracle_piece_length(const SegmentSpec& s) {
  if (const auto* st = std::get_if<Straight>(&s.kind)) return st->length;
  if (const auto* a = std::get_if<Arc>(&s.kind)) return a->radius * a->angle;
  if (const auto* i = std::get_if<Intersection>(&s.kind)) {
    return 2 * i->arm_length + i->crossing_width;
  }
  const auto& p = std::get<ParkingZone>(s.kind);
  return p.space_count * p.space_length;
}

inline std::vector<OraclePiece> oracle_chain(const RouteLayout& layout) {
  std::vector<OraclePiece> out;
  double x = 0, y = 0, yaw = 0;
  for (const auto& s : layout.segments) {
    OraclePiece p{x, y, yaw, oracle_piece_length(s), 0.0};
    if (const auto* a = std::get_if<Arc>(&s.kind)) {
      p.curvature = (a->direction == TurnDirection::kLeft ? 1.0 : -1.0) / a->radius;
    }
    out.push_back(p);
    if (p.curvature == 0.0) {
      x += p.length * std::cos(yaw);
      y += p.length * std::sin(yaw);
    } else {
      const double r = 1.0 / p.curvature;
      const double cxc = x - r * std::sin(yaw), cyc = y + r * std::cos(yaw);
      yaw += p.length * p.curvature;
      x = cxc + r * std::sin(yaw);
      y = cyc - r * std::cos(yaw);
    }
  }
  return out;
}

struct Nearest {
  double distance;
  double tangent;  // heading of the centerline at the nearest point
  double signed_offset;  // positive to the left of the centerline
};

inline Nearest oracle_nearest(const std::vector<OraclePiece>& chain, double px,
                              double py) {
  Nearest best{INFINITY, 0, 0};
  for (const auto& p : chain) {
    Nearest n{};
    if (p.curvature == 0.0) {
      const double ux = std::cos(p.yaw0), uy = std::sin(p.yaw0);
      const double t = std::clamp((px - p.x0) * ux + (py - p.y0) * uy, 0.0, p.length);
      const double qx = p.x0 + t * ux, qy = p.y0 + t * uy;
      n.distance = std::hypot(px - qx, py - qy);
      n.tangent = p.yaw0;
      n.signed_offset = -(px - qx) * uy + (py - qy) * ux;
    } else {
      const double r = 1.0 / p.curvature;
      const double cxc = p.x0 - r * std::sin(p.yaw0), cyc = p.y0 + r * std::cos(p.yaw0);
      // Angle travelled along the arc to the projection of the point.
      const double a0 = std::atan2(p.y0 - cyc, p.x0 - cxc);
      const double ap = std::atan2(py - cyc, px - cxc);
      double sweep = (ap - a0) * (p.curvature > 0 ? 1.0 : -1.0);
      sweep = std::remainder(sweep, 2 * kPiOracle);
      const double total = p.length * std::abs(p.curvature);
      if (sweep < 0 && sweep + 2 * kPiOracle <= total) sweep += 2 * kPiOracle;
      const double s = std::clamp(sweep, 0.0, total) / std::abs(p.curvature);
      const double yaw = p.yaw0 + s * p.curvature;
      const double qx = cxc + r * std::sin(yaw), qy = cyc - r * std::cos(yaw);
      n.distance = std::hypot(px - qx, py - qy);
      n.tangent = yaw;
      n.signed_offset = -(px - qx) * std::sin(yaw) + (py - qy) * std::cos(yaw);
    }
    if (n.distance < best.distance) best = n;
  }
  return best;
}

inline double angle_diff(double a, double b) {
  return std::abs(std::remainder(a - b, 2 * kPiOracle));
}

}  // namespace trackgen::testing
