#pragma once

// Homography from four point pairs by a direct Eigen solve of the 8x8
// system (h33 = 1), with no coordinate normalization.

#include <Eigen/Dense>
#include <array>

namespace trackgen::testing {

struct Pt {
  double x, y;
};

inline Eigen::Matrix3d eigen_homography(const std::array<Pt, 4>& src,
                                        const std::array<Pt, 4>& dst) {
  Eigen::Matrix<double, 8, 8> a;
  Eigen::Matrix<double, 8, 1> b;
  for (int i = 0; i < 4; ++i) {
    const auto [x, y] = src[static_cast<std::size_t>(i)];
    const auto [u, v] = dst[static_cast<std::size_t>(i)];
    a.row(2 * i) << x, y, 1, 0, 0, 0, -x * u, -y * u;
    a.row(2 * i + 1) << 0, 0, 0, x, y, 1, -x * v, -y * v;
    b(2 * i) = u;
    b(2 * i + 1) = v;
  }
  const Eigen::Matrix<double, 8, 1> h = a.fullPivLu().solve(b);
  Eigen::Matrix3d m;
  m << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), 1.0;
  return m;
}

inline Pt eigen_apply(const Eigen::Matrix3d& m, Pt p) {
  const Eigen::Vector3d q = m * Eigen::Vector3d(p.x, p.y, 1.0);
  return {q(0) / q(2), q(1) / q(2)};
}

}  // namespace trackgen::testing
