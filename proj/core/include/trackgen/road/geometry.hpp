#pragma once

#include <cmath>
#include <vector>

#include "trackgen/road/layout.hpp"

namespace trackgen {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

double norm(Vec2 v);
double dot(Vec2 a, Vec2 b);

struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;  // rad, normalized into (-pi, pi]
  Vec2 position() const { return {x, y}; }
  friend bool operator==(const Pose2D&, const Pose2D&) = default;
};

// Maps an angle into (-pi, pi].
double normalize_angle(double a);

// A straight or circular piece of road with a local (s, d) parametrization:
// s is arclength from the start, d the signed lateral offset (positive to
// the left of the direction of travel).
class RoadFrame {
 public:
  static RoadFrame straight(Pose2D start, double length);
  static RoadFrame arc(Pose2D start, double radius, double angle,
                       TurnDirection direction);

  double length() const noexcept { return length_; }
  bool is_arc() const noexcept { return curvature_ != 0.0; }
  // Signed curvature, positive for left turns.
  double curvature() const noexcept { return curvature_; }
  Pose2D start() const noexcept { return start_; }

  // Centerline pose at arclength s (clamped to [0, length]).
  Pose2D pose_at(double s) const;
  // Point at arclength s, lateral offset d.
  Vec2 point_at(double s, double d) const;

 private:
  Pose2D start_;
  double length_ = 0.0;
  double curvature_ = 0.0;
};

// The chained route: segment frames placed end to end from the origin with
// yaw 0.
class RouteGeometry {
 public:
  explicit RouteGeometry(const RouteLayout& layout);

  struct Placed {
    RoadFrame frame;
    double s0 = 0.0;  // route arclength at segment start
  };

  const std::vector<Placed>& segments() const noexcept { return segments_; }
  double total_length() const noexcept { return total_length_; }

  // Segment containing route arclength s (the later one at a joint).
  std::size_t segment_index(double s) const;
  Pose2D pose_at(double s) const;
  Vec2 point_at(double s, double d) const;

 private:
  std::vector<Placed> segments_;
  double total_length_ = 0.0;
};

struct CenterlineSample {
  Pose2D pose;
  double s = 0.0;  // route arclength
  std::size_t segment = 0;
};

// Samples every segment with ceil(len / spacing) equal steps; joints appear
// once. Throws InvalidInput when spacing <= 0.
std::vector<CenterlineSample> sample_centerline(const RouteLayout& layout,
                                                double spacing);

std::vector<Pose2D> centerline(const RouteLayout& layout, double spacing);

inline Vec2 heading(double yaw) { return {std::cos(yaw), std::sin(yaw)}; }
inline Vec2 left_normal(double yaw) { return {-std::sin(yaw), std::cos(yaw)}; }

}  // namespace trackgen
