#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "trackgen/road/geometry.hpp"

namespace trackgen {

// Invertible 3x3 projective transform of the plane acting on homogeneous
// column vectors (x, y, 1). Stored row-major and normalized so that the
// bottom-right entry is 1 whenever it is not negligible.
class Homography {
 public:
  using Matrix = std::array<double, 9>;

  Homography() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}
  // Throws InvalidInput when |det| <= 1e-12 times the product of the row
  // norms or an entry is not finite.
  explicit Homography(const Matrix& m);

  static Homography identity() { return {}; }

  const Matrix& matrix() const noexcept { return m_; }
  double operator()(int row, int col) const noexcept { return m_[row * 3 + col]; }
  double determinant() const noexcept;

  // Composition: (a * b) applies b first.
  friend Homography operator*(const Homography& a, const Homography& b);

 private:
  Matrix m_;
};

struct Correspondences4 {
  std::array<Vec2, 4> src;  // first-person pixel coordinates
  std::array<Vec2, 4> dst;  // bird's-eye pixel coordinates
};

// Smallest triangle area below which a point triple counts as collinear.
inline constexpr double kDegenerateArea = 1e-9;

// Solves the 8-equation system (h33 = 1) with partial pivoting, on
// centroid-centered, scale-normalized points. Throws InvalidInput
// ("degenerate correspondences") when any three source or destination
// points are collinear, including duplicates.
Homography estimate_homography(const Correspondences4& c);

// Perspective division of H * (p, 1). Throws InvalidInput ("point at
// infinity") when |w| <= 1e-12.
Vec2 apply_homography(const Homography& h, Vec2 p);

// Throws InvalidInput for singular matrices (cannot happen for a
// constructed Homography, kept for raw matrices).
Homography invert(const Homography& h);

// Correspondence file: 4 lines `src_u src_v dst_u dst_v`.
Correspondences4 parse_correspondences(std::string_view text);
// Homography file: 9 whitespace-separated reals, row-major.
Homography parse_homography(std::string_view text);
std::string format_homography(const Homography& h);

}  // namespace trackgen
