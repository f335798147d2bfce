#include "trackgen/bev/homography.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "trackgen/error.hpp"

namespace trackgen {

namespace {

using Matrix = Homography::Matrix;

double det3(const Matrix& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double max_abs(const Matrix& m) {
  double s = 0.0;
  for (const double v : m) s = std::max(s, std::abs(v));
  return s;
}

// Product of the row norms, the Hadamard bound on |det|.
double row_norm_product(const Matrix& m) {
  double p = 1.0;
  for (int r = 0; r < 3; ++r) p *= std::hypot(m[r * 3], m[r * 3 + 1], m[r * 3 + 2]);
  return p;
}

// Products and 2x2 minors are accumulated in extended precision; pixel
// homographies are often conditioned around 1e8.
Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      long double sum = 0.0L;
      for (int k = 0; k < 3; ++k) {
        sum += static_cast<long double>(a[i * 3 + k]) * b[k * 3 + j];
      }
      c[i * 3 + j] = static_cast<double>(sum);
    }
  }
  return c;
}

double minor2(double a, double b, double c, double d) {
  return static_cast<double>(static_cast<long double>(a) * d -
                             static_cast<long double>(b) * c);
}

Matrix adjugate(const Matrix& m) {
  return {minor2(m[4], m[5], m[7], m[8]), minor2(m[2], m[1], m[8], m[7]),
          minor2(m[1], m[2], m[4], m[5]), minor2(m[5], m[3], m[8], m[6]),
          minor2(m[0], m[2], m[6], m[8]), minor2(m[2], m[0], m[5], m[3]),
          minor2(m[3], m[4], m[6], m[7]), minor2(m[1], m[0], m[7], m[6]),
          minor2(m[0], m[1], m[3], m[4])};
}

double triangle_area(Vec2 a, Vec2 b, Vec2 c) {
  return 0.5 * std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

bool has_collinear_triple(const std::array<Vec2, 4>& p) {
  static constexpr int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& t : kTriples) {
    if (!(triangle_area(p[t[0]], p[t[1]], p[t[2]]) >= kDegenerateArea)) {
      return true;
    }
  }
  return false;
}

// Similarity moving the centroid to the origin with mean distance sqrt(2).
Matrix normalizing_transform(const std::array<Vec2, 4>& p) {
  Vec2 c{};
  for (const auto& v : p) c = c + 0.25 * v;
  double mean = 0.0;
  for (const auto& v : p) mean += 0.25 * norm(v - c);
  const double s = std::sqrt(2.0) / mean;
  return {s, 0, -s * c.x, 0, s, -s * c.y, 0, 0, 1};
}

Vec2 transform(const Matrix& m, Vec2 p) {
  const double w = m[6] * p.x + m[7] * p.y + m[8];
  return {(m[0] * p.x + m[1] * p.y + m[2]) / w,
          (m[3] * p.x + m[4] * p.y + m[5]) / w};
}

using System = std::array<std::array<double, 9>, 8>;  // 8 rows, augmented

// Gaussian elimination with partial pivoting. Returns false when a pivot
// vanishes.
bool solve8(System a, std::array<double, 8>& x) {
  for (int col = 0; col < 8; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 8; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (!(std::abs(a[pivot][col]) > 1e-12)) return false;
    std::swap(a[col], a[pivot]);
    for (int r = col + 1; r < 8; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int k = col; k < 9; ++k) a[r][k] -= f * a[col][k];
    }
  }
  for (int r = 7; r >= 0; --r) {
    double sum = a[r][8];
    for (int k = r + 1; k < 8; ++k) sum -= a[r][k] * x[k];
    x[r] = sum / a[r][r];
  }
  return true;
}

}  // namespace

Homography::Homography(const Matrix& m) : m_(m) {
  for (const double v : m_) {
    if (!std::isfinite(v)) throw InvalidInput("homography has non-finite entries");
  }
  const double scale = max_abs(m_);
  const double det = det3(m_);
  if (!(scale > 0) || !(std::abs(det) > 1e-12 * row_norm_product(m_))) {
    throw InvalidInput("singular homography");
  }
  const double divisor = std::abs(m_[8]) > 1e-12 * scale ? m_[8] : scale;
  for (double& v : m_) v /= divisor;
}

double Homography::determinant() const noexcept { return det3(m_); }

Homography operator*(const Homography& a, const Homography& b) {
  return Homography(multiply(a.m_, b.m_));
}

Homography estimate_homography(const Correspondences4& c) {
  if (has_collinear_triple(c.src) || has_collinear_triple(c.dst)) {
    throw InvalidInput("degenerate correspondences: three points are collinear");
  }
  const Matrix ts = normalizing_transform(c.src);
  const Matrix td = normalizing_transform(c.dst);

  // Rows for x' = (h0 x + h1 y + h2) / (h6 x + h7 y + 1), likewise y'.
  System a{};
  for (int i = 0; i < 4; ++i) {
    const Vec2 p = transform(ts, c.src[static_cast<std::size_t>(i)]);
    const Vec2 q = transform(td, c.dst[static_cast<std::size_t>(i)]);
    a[2 * i] = {p.x, p.y, 1, 0, 0, 0, -p.x * q.x, -p.y * q.x, q.x};
    a[2 * i + 1] = {0, 0, 0, p.x, p.y, 1, -p.x * q.y, -p.y * q.y, q.y};
  }
  std::array<double, 8> h{};
  if (!solve8(a, h)) {
    throw InvalidInput("degenerate correspondences: singular linear system");
  }
  // One step of iterative refinement against the same system.
  std::array<double, 8> residual_solution{};
  System r = a;
  for (int row = 0; row < 8; ++row) {
    double ax = 0.0;
    for (int k = 0; k < 8; ++k) ax += a[row][k] * h[k];
    r[row][8] = a[row][8] - ax;
  }
  if (solve8(r, residual_solution)) {
    for (int k = 0; k < 8; ++k) h[k] += residual_solution[k];
  }

  const Matrix normalized{h[0], h[1], h[2], h[3], h[4], h[5], h[6], h[7], 1.0};
  const Matrix td_inv = adjugate(td);  // similarity: adjugate is a scaled inverse
  return Homography(multiply(multiply(td_inv, normalized), ts));
}

Vec2 apply_homography(const Homography& h, Vec2 p) {
  const auto& m = h.matrix();
  const double w = m[6] * p.x + m[7] * p.y + m[8];
  if (!(std::abs(w) > 1e-12)) {
    throw InvalidInput(fmt::format("point at infinity: ({}, {}) maps to w = {}",
                                   p.x, p.y, w));
  }
  return {(m[0] * p.x + m[1] * p.y + m[2]) / w,
          (m[3] * p.x + m[4] * p.y + m[5]) / w};
}

Homography invert(const Homography& h) {
  const auto& m = h.matrix();
  const double det = det3(m);
  if (!(std::abs(det) > 0)) throw InvalidInput("singular homography");
  Matrix inv = adjugate(m);
  for (double& v : inv) v /= det;
  return Homography(inv);
}

}  // namespace trackgen
