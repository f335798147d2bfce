#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "homography_oracle.hpp"
#include "test_support.hpp"
#include "trackgen/bev/homography.hpp"
#include "trackgen/bev/warp.hpp"
#include "trackgen/error.hpp"

namespace trackgen {
namespace {

Correspondences4 quads(std::array<Vec2, 4> src, std::array<Vec2, 4> dst) {
  return {src, dst};
}

const std::array<Vec2, 4> kUnit{Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}};

void expect_matrix(const Homography& h, const std::array<double, 9>& want, double tol) {
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(h.matrix()[i], want[i], tol) << "entry " << i;
}

TEST(Homography, IdentityAndScale) {
  expect_matrix(estimate_homography(quads(kUnit, kUnit)), {1, 0, 0, 0, 1, 0, 0, 0, 1}, 1e-12);
  std::array<Vec2, 4> twice;
  for (int i = 0; i < 4; ++i) twice[i] = 2.0 * kUnit[i];
  expect_matrix(estimate_homography(quads(kUnit, twice)), {2, 0, 0, 0, 2, 0, 0, 0, 1}, 1e-12);
}

TEST(Homography, TrapezoidMatchesEigenSolve) {
  const std::array<Vec2, 4> trap{Vec2{0, 0}, Vec2{1, 0}, Vec2{0.8, 1}, Vec2{0.2, 1}};
  const Homography h = estimate_homography(quads(kUnit, trap));
  const auto want = testing::eigen_homography({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}},
                                              {{{0, 0}, {1, 0}, {0.8, 1}, {0.2, 1}}});
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(h(r, c), want(r, c), 1e-12);
  const Vec2 p = apply_homography(h, {0.5, 0.5});
  const auto q = testing::eigen_apply(want, {0.5, 0.5});
  EXPECT_NEAR(p.x, q.x, 1e-12);
  EXPECT_NEAR(p.y, q.y, 1e-12);
}

TEST(Homography, DegenerateInputs) {
  auto collinear = kUnit;
  collinear[2] = {2, 0};
  EXPECT_THROW(estimate_homography(quads(collinear, kUnit)), InvalidInput);
  EXPECT_THROW(estimate_homography(quads(kUnit, collinear)), InvalidInput);
  auto dup = kUnit;
  dup[3] = dup[0];
  try {
    estimate_homography(quads(kUnit, dup));
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate correspondences"), std::string::npos);
  }
}

TEST(Homography, ApplyAndInfinity) {
  const Homography h({2, 0, 0, 0, 2, 0, 0, 0, 1});
  EXPECT_EQ(apply_homography(h, {3, 4}), (Vec2{6, 8}));
  EXPECT_EQ(apply_homography(Homography{}, {3, 4}), (Vec2{3, 4}));
  const Homography p({1, 0, 0, 0, 1, 0, 1, 0, 1});
  EXPECT_THROW(apply_homography(p, {-1, 5}), InvalidInput);
}

TEST(Homography, ScaleInvariance) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int i = 0; i < 100; ++i) {
    Homography::Matrix m{1 + d(rng), d(rng), d(rng), d(rng), 1 + d(rng), d(rng),
                         0.1 * d(rng), 0.1 * d(rng), 1};
    const double s = std::pow(10.0, 3 * d(rng)) * (i % 2 ? -1 : 1);
    Homography::Matrix scaled = m;
    for (double& v : scaled) v *= s;
    const Vec2 p{d(rng), d(rng)};
    const Vec2 a = apply_homography(Homography(m), p);
    const Vec2 b = apply_homography(Homography(scaled), p);
    EXPECT_NEAR(a.x, b.x, 1e-12);
    EXPECT_NEAR(a.y, b.y, 1e-12);
  }
}

TEST(Homography, InvertCases) {
  expect_matrix(invert(Homography{}), {1, 0, 0, 0, 1, 0, 0, 0, 1}, 0);
  expect_matrix(invert(Homography({2, 0, 0, 0, 2, 0, 0, 0, 1})), {0.5, 0, 0, 0, 0.5, 0, 0, 0, 1},
                1e-15);
  EXPECT_THROW(Homography({1, 2, 3, 2, 4, 6, 0, 0, 1}), InvalidInput);
}

TEST(Homography, InverseProductOverSeeds) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-1, 1);
    const Homography h({1 + 0.5 * d(rng), 0.5 * d(rng), 100 * d(rng), 0.5 * d(rng),
                        1 + 0.5 * d(rng), 100 * d(rng), 0.001 * d(rng), 0.001 * d(rng), 1});
    const Homography prod = h * invert(h);
    const auto& m = prod.matrix();
    for (int i = 0; i < 9; ++i) {
      ASSERT_NEAR(m[i], i % 4 == 0 ? 1.0 : 0.0, 1e-9) << "seed " << seed;
    }
  }
}

TEST(Homography, FileFormats) {
  const Correspondences4 c = parse_correspondences(
      "# comment\n0 0 0 0\n1 0 2 0\n1 1 2 2\n0 1 0 2\n");
  expect_matrix(estimate_homography(c), {2, 0, 0, 0, 2, 0, 0, 0, 1}, 1e-12);
  EXPECT_THROW(parse_correspondences("0 0 0 0\n"), InvalidInput);
  const Homography h({1.5, 0.25, -3, 0, 2, 7, 0.001, 0, 1});
  EXPECT_EQ(parse_homography(format_homography(h)).matrix(), h.matrix());
  EXPECT_THROW(parse_homography("1 2 3"), ParseError);
}

TEST(Warp, IdentityAndTranslation) {
  std::mt19937_64 rng(6);
  const Raster r = testing::random_raster(rng, 20, 15, 3);
  EXPECT_EQ(warp_image(r, Homography{}, 20, 15, Interpolation::kBilinear), r);
  const Raster shifted = warp_image(r, Homography({1, 0, 3, 0, 1, -2, 0, 0, 1}), 20, 15,
                                    Interpolation::kNearest);
  for (int y = 0; y < 15; ++y) {
    for (int x = 0; x < 20; ++x) {
      const int sx = x - 3, sy = y + 2;
      const Pixel want = r.contains(sx, sy) ? r.pixel(sx, sy) : Pixel{};
      ASSERT_EQ(shifted.pixel(x, y), want);
    }
  }
}

TEST(Warp, RoundTripOnSmoothImage) {
  Raster r(160, 120, 1);
  for (int y = 0; y < 120; ++y)
    for (int x = 0; x < 160; ++x)
      r.at(x, y) = static_cast<std::uint8_t>(
          std::lround(127.5 + 100 * std::sin(x / 17.0) * std::cos(y / 23.0)));
  const Homography h = estimate_homography(quads(
      {Vec2{0, 0}, Vec2{159, 0}, Vec2{159, 119}, Vec2{0, 119}},
      {Vec2{10, 5}, Vec2{150, 12}, Vec2{140, 110}, Vec2{20, 100}}));
  const Raster there = warp_image(r, h, 160, 120, Interpolation::kBilinear);
  const Raster back = warp_image(there, invert(h), 160, 120, Interpolation::kBilinear);
  for (int y = 20; y < 100; ++y)
    for (int x = 30; x < 130; ++x)
      ASSERT_LE(std::abs(back.at(x, y) - r.at(x, y)), 2) << x << "," << y;
}

TEST(Warp, NearestKeepsClassIds) {
  std::mt19937_64 rng(7);
  const Raster ids = testing::random_raster(rng, 64, 48, 1, 4);
  std::set<int> src(ids.data().begin(), ids.data().end());
  const Homography h({0.9, 0.2, 3, -0.1, 1.1, 2, 0.002, 0.001, 1});
  const Raster out = warp_image(ids, h, 64, 48, Interpolation::kNearest, {0, 0, 0});
  for (auto v : out.data()) ASSERT_TRUE(v == 0 || src.contains(v));
}

}  // namespace
}  // namespace trackgen
