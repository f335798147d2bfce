#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "test_support.hpp"
#include "trackgen/bev/homography.hpp"
#include "trackgen/camera/camera.hpp"
#include "trackgen/camera/first_person.hpp"
#include "trackgen/dataset/annotation.hpp"
#include "trackgen/error.hpp"
#include "trackgen/render/topdown.hpp"
#include "trackgen/util/files.hpp"

namespace trackgen {
namespace {

testing::OracleCamera oracle(const CameraModel& c) {
  return {c.fx, c.fy, c.cx, c.cy, c.mount_height, c.pitch};
}

TEST(Camera, NadirPointBelowIsPrincipalPoint) {
  CameraModel cam;
  cam.pitch = kPi / 2;
  const auto p = ground_to_image(cam, {1.0, 2.0, 0.7}, {1.0, 2.0});
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->x, cam.cx, 1e-9);
  EXPECT_NEAR(p->y, cam.cy, 1e-9);
}

TEST(Camera, LevelCameraSeesGroundBelowCenterRow) {
  CameraModel cam;
  cam.pitch = 0;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const auto p = ground_to_image(cam, {}, {d(rng) + 3.1, d(rng)});
    ASSERT_TRUE(p);
    EXPECT_GT(p->y, cam.cy);
  }
  EXPECT_FALSE(ground_to_image(cam, {}, {-1.0, 0.0}));
}

TEST(Camera, MatchesClosedForm) {
  const CameraModel cam;  // fx=fy=160, (160,128), 0.25 m, 15 deg
  const auto p = ground_to_image(cam, {}, {1.0, 0.0});
  ASSERT_TRUE(p);
  // Depth 1*cos15 + 0.25*sin15, down 0.25*cos15 - 1*sin15.
  const double c = std::cos(kPi / 12), s = std::sin(kPi / 12);
  EXPECT_NEAR(p->x, 160.0, 1e-9);
  EXPECT_NEAR(p->y, 128.0 + 160.0 * (0.25 * c - s) / (c + 0.25 * s), 1e-9);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int i = 0; i < 500; ++i) {
    const Pose2D pose{d(rng), d(rng), d(rng)};
    const Vec2 g{d(rng), d(rng)};
    const auto got = ground_to_image(cam, pose, g);
    const auto want = testing::oracle_project(oracle(cam), pose.x, pose.y, pose.yaw, g.x, g.y);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) {
      EXPECT_NEAR(got->x, (*want)[0], 1e-9 * std::max(1.0, std::abs((*want)[0])));
      EXPECT_NEAR(got->y, (*want)[1], 1e-9 * std::max(1.0, std::abs((*want)[1])));
    }
  }
}

TEST(Camera, InducedHomographyAgrees) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2, 2), pitch(0.05, kPi / 2);
  for (int trial = 0; trial < 50; ++trial) {
    CameraModel cam;
    cam.pitch = pitch(rng);
    const Pose2D pose{d(rng), d(rng), d(rng)};
    const Homography h = induced_ground_homography(cam, pose);
    int checked = 0;
    while (checked < 8) {
      const Vec2 g{pose.x + d(rng), pose.y + d(rng)};
      const auto want = ground_to_image(cam, pose, g);
      if (!want) continue;
      const Vec2 got = apply_homography(h, g);
      ASSERT_NEAR(got.x, want->x, 1e-6);
      ASSERT_NEAR(got.y, want->y, 1e-6);
      ++checked;
    }
  }
}

TEST(Camera, NadirHomographyIsSimilarity) {
  CameraModel cam;
  cam.pitch = kPi / 2;
  const Homography h = induced_ground_homography(cam, {});
  const double k = cam.fx / cam.mount_height;
  const double want[9] = {0, -k, cam.cx, -k, 0, cam.cy, 0, 0, 1};
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(h.matrix()[i], want[i], 1e-9) << i;
}

TEST(Camera, BackprojectRoundTrip) {
  const CameraModel cam;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-2, 2), ahead(0.2, 4);
  for (int i = 0; i < 500; ++i) {
    const Pose2D pose{d(rng), d(rng), d(rng)};
    const Vec2 g = pose.position() + ahead(rng) * heading(pose.yaw) + d(rng) * left_normal(pose.yaw);
    const auto px = ground_to_image(cam, pose, g);
    ASSERT_TRUE(px);
    const auto back = backproject(cam, pose, *px);
    ASSERT_TRUE(back);
    EXPECT_NEAR(back->x, g.x, 1e-6);
    EXPECT_NEAR(back->y, g.y, 1e-6);
  }
  EXPECT_FALSE(backproject(cam, {}, {160.0, 0.0}));  // above the horizon
}

TEST(Camera, RejectsBadParameters) {
  CameraModel cam;
  cam.fx = 0;
  EXPECT_THROW(require_valid(cam), InvalidInput);
  cam = {};
  cam.pitch = 2.0;
  EXPECT_FALSE(cam.violations().empty());
}

TEST(FirstPerson, HorizonAndClassClosure) {
  const TopDownPair pair = render_topdown(sample_layout());
  const CameraModel cam;
  const Pose2D pose{0.3, -0.2, 0.0};
  const FirstPersonFrame f = render_first_person(pair, cam, pose);
  EXPECT_EQ(f.raw.width(), cam.width);
  EXPECT_EQ(f.annotation_color.height(), cam.height);
  const Raster ids = color_to_id(f.annotation_color, ClassMap::defaults(), ColorPolicy::kStrict);
  const double horizon = cam.cy - cam.fy * std::tan(cam.pitch);
  std::set<int> present(pair.annotation_id.data().begin(), pair.annotation_id.data().end());
  for (int y = 0; y < cam.height; ++y) {
    for (int x = 0; x < cam.width; ++x) {
      if (y < horizon) ASSERT_EQ(ids.at(x, y), 0) << x << "," << y;
      ASSERT_TRUE(present.contains(ids.at(x, y)));
    }
  }
}

TEST(FirstPerson, StopLineBandRow) {
  // Stop line across the right lane at the end of a 1 m straight; camera
  // 0.5 m before the band.
  RouteLayout l;
  SegmentSpec s{Straight{1.0}};
  s.stop_line = true;
  l.segments.push_back(s);
  l.segments.push_back({Straight{1.0}});
  const TopDownPair pair = render_topdown(l);
  const CameraModel cam;
  const Pose2D pose{1.0 - l.markings.stop_line_width - 0.5, -0.2, 0.0};
  const Raster ids = color_to_id(render_first_person(pair, cam, pose).annotation_color,
                                 l.class_map, ColorPolicy::kStrict);
  const int stop = l.class_map.id_for(ClassRole::kStopLine);
  const auto near_edge = testing::oracle_project(testing::OracleCamera{160, 160, 160, 128, 0.25, kPi / 12},
                                                 pose.x, pose.y, 0, 1.0 - l.markings.stop_line_width, -0.2);
  const auto far_edge = testing::oracle_project(testing::OracleCamera{160, 160, 160, 128, 0.25, kPi / 12},
                                                pose.x, pose.y, 0, 1.0, -0.2);
  ASSERT_TRUE(near_edge && far_edge);
  // Rows of the band along the image column through the lane center.
  const int col = static_cast<int>(std::lround((*near_edge)[0]));
  int first = -1, last = -1;
  for (int y = 0; y < cam.height; ++y) {
    if (ids.at(col, y) != stop) continue;
    if (first < 0) first = y;
    ASSERT_TRUE(last < 0 || last == y - 1) << "band not contiguous";
    last = y;
  }
  ASSERT_GE(first, 0);
  // One image row spans about 6 mm of ground here, close to the 5 mm
  // top-down pixel, so each edge may land up to two rows off.
  EXPECT_NEAR(first, (*far_edge)[1], 2.0);
  EXPECT_NEAR(last, (*near_edge)[1], 2.0);
}

TEST(Sequence, StrideAndManifest) {
  const TopDownPair pair = render_topdown(sample_layout());
  Trajectory t;
  for (int i = 0; i < 10; ++i) t.poses.push_back({0.1 * i, -0.2, 0.0});
  std::vector<std::size_t> seen;
  const FrameManifest m = record_sequence(
      pair, CameraModel{}, t, 2,
      [&](const FrameRecord& r, const FirstPersonFrame&) { seen.push_back(r.index); });
  ASSERT_EQ(m.frames.size(), 5u);
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 2, 4, 6, 8}));
  for (const auto& f : m.frames) EXPECT_EQ(f.pose, t.poses[f.index]);
  EXPECT_EQ(m.frames[1].raw_path, "raw/frame_000001.ppm");
  const FrameManifest back = parse_frame_manifest(format_frame_manifest(m));
  ASSERT_EQ(back.frames.size(), 5u);
  EXPECT_EQ(back.frames[3].pose, m.frames[3].pose);
  EXPECT_THROW(record_sequence(pair, CameraModel{}, Trajectory{}, 1, nullptr), InvalidInput);
  EXPECT_THROW(record_sequence(pair, CameraModel{}, t, 0, nullptr), InvalidInput);
}

TEST(Sequence, WrittenTwiceIdentical) {
  const TopDownPair pair = render_topdown(sample_layout());
  Trajectory t;
  for (int i = 0; i < 4; ++i) t.poses.push_back({0.2 * i, -0.2, 0.0});
  testing::TempDir a("seq_a"), b("seq_b");
  write_sequence(pair, CameraModel{}, t, 1, a.path());
  write_sequence(pair, CameraModel{}, t, 1, b.path());
  EXPECT_EQ(testing::tree_contents(a.path()), testing::tree_contents(b.path()));
  EXPECT_EQ(testing::tree_contents(a.path()).size(), 9u);
}

}  // namespace
}  // namespace trackgen
