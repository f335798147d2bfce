#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "trackgen/error.hpp"
#include "trackgen/road/class_map.hpp"
#include "trackgen/road/geometry.hpp"
#include "trackgen/road/layout.hpp"
#include "trackgen/road/layout_io.hpp"
#include "trackgen/road/random_layout.hpp"

namespace trackgen {
namespace {

bool contains(const std::vector<std::string>& v, std::string_view needle) {
  for (const auto& s : v)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

TEST(ClassMap, DefaultsAreValid) {
  const ClassMap m = ClassMap::defaults();
  EXPECT_EQ(m.size(), 10u);
  EXPECT_TRUE(m.violations().empty());
  EXPECT_EQ(m.find_id(0)->name, "unlabeled");
  EXPECT_EQ(m.id_for(ClassRole::kCrosswalk), 7);
}

TEST(ClassMap, DuplicateColorNamesBothIds) {
  auto entries = ClassMap::defaults().entries();
  entries[4].color = entries[2].color;
  const auto v = ClassMap(entries).violations();
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("class ids 2 and 4"), std::string::npos) << v[0];
}

TEST(ClassMap, FileRoundTrip) {
  const ClassMap m = ClassMap::defaults();
  EXPECT_EQ(parse_class_map(format_class_map(m)), m);
  EXPECT_THROW(parse_class_map("0 unlabeled 0 0\n"), ParseError);
}

TEST(Layout, ParsesSingleStraight) {
  const RouteLayout l = parse_layout("segment straight length_m=2.0 center=dashed\n");
  ASSERT_EQ(l.segments.size(), 1u);
  EXPECT_DOUBLE_EQ(std::get<Straight>(l.segments[0].kind).length, 2.0);
}

TEST(Layout, TightArcIsRejected) {
  try {
    parse_layout("lane_width = 0.4\nsegment arc radius_m=0.1 angle_deg=90 dir=left\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("radius"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("lane_width"), std::string::npos);
  }
}

TEST(Layout, UnknownFieldsAndKinds) {
  EXPECT_THROW(parse_layout("segment straight length_m=1 colour=red\n"), ParseError);
  EXPECT_THROW(parse_layout("segment bridge length_m=1\n"), ParseError);
  EXPECT_THROW(parse_layout("lane_width = abc\nsegment straight length_m=1\n"), ParseError);
}

TEST(Layout, SampleFileMatchesBuiltIn) {
  const RouteLayout l =
      parse_layout(testing::slurp(std::string(TRACKGEN_DOCS_DIR) + "/sample.layout"));
  EXPECT_EQ(l.segments.size(), 7u);
  int intersections = 0, parking = 0;
  for (const auto& s : l.segments) {
    intersections += std::holds_alternative<Intersection>(s.kind);
    parking += std::holds_alternative<ParkingZone>(s.kind);
  }
  EXPECT_EQ(intersections, 1);
  EXPECT_EQ(parking, 2);
  EXPECT_TRUE(validate_layout(l).empty());
  EXPECT_EQ(format_layout(l), format_layout(sample_layout()));
}

TEST(Layout, FormatRoundTrip) {
  const RouteLayout l = sample_layout();
  EXPECT_EQ(format_layout(parse_layout(format_layout(l))), format_layout(l));
}

TEST(Validate, Cases) {
  EXPECT_TRUE(validate_layout(sample_layout()).empty());
  RouteLayout l = sample_layout();
  l.lane_width = 0;
  const auto v = validate_layout(l);
  EXPECT_TRUE(contains(v, "lane_width must be positive"));
  RouteLayout empty;
  EXPECT_TRUE(contains(validate_layout(empty), "at least one segment"));
  RouteLayout thin = sample_layout();
  thin.line_width = 0.3;
  EXPECT_FALSE(validate_layout(thin).empty());
}

TEST(Centerline, StraightSpacing) {
  RouteLayout l;
  l.segments.push_back({Straight{2.0}});
  const auto poses = centerline(l, 0.5);
  ASSERT_EQ(poses.size(), 5u);
  for (std::size_t i = 0; i < poses.size(); ++i) {
    EXPECT_NEAR(poses[i].x, 0.5 * static_cast<double>(i), 1e-12);
    EXPECT_EQ(poses[i].y, 0.0);
    EXPECT_EQ(poses[i].yaw, 0.0);
  }
}

TEST(Centerline, LeftQuarterArc) {
  RouteLayout l;
  l.segments.push_back({Arc{1.5, kPi / 2, TurnDirection::kLeft}});
  const auto poses = centerline(l, 0.01);
  EXPECT_NEAR(poses.back().x, 1.5, 1e-12);
  EXPECT_NEAR(poses.back().y, 1.5, 1e-12);
  EXPECT_NEAR(poses.back().yaw, kPi / 2, 1e-12);
}

TEST(Centerline, ArclengthAndContinuity) {
  RouteLayout l;
  l.segments.push_back({Straight{1.3}});
  l.segments.push_back({Arc{1.1, 1.2, TurnDirection::kRight}});
  l.segments.push_back({Intersection{0.9, 0.8}});
  const auto samples = sample_centerline(l, 0.01);
  const double expected = 1.3 + 1.1 * 1.2 + 2 * 0.9 + 0.8;
  EXPECT_NEAR(samples.back().s, expected, 1e-9);
  const auto chain = testing::oracle_chain(l);
  double polyline = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const auto& a = samples[i - 1].pose;
    const auto& b = samples[i].pose;
    polyline += std::hypot(b.x - a.x, b.y - a.y);
    ASSERT_LT(testing::oracle_nearest(chain, b.x, b.y).distance, 1e-9);
    const double fd = std::atan2(b.y - a.y, b.x - a.x);
    ASSERT_LT(testing::angle_diff(fd, b.yaw), 0.02);
  }
  EXPECT_NEAR(polyline, expected, 1e-3);  // chords under-estimate arcs slightly
  const RouteGeometry g(l);
  for (std::size_t k = 1; k < g.segments().size(); ++k) {
    const auto& prev = g.segments()[k - 1];
    const Pose2D end = prev.frame.pose_at(prev.frame.length());
    const Pose2D start = g.segments()[k].frame.start();
    EXPECT_NEAR(end.x, start.x, 1e-9);
    EXPECT_NEAR(end.y, start.y, 1e-9);
  }
}

TEST(RandomLayout, Deterministic) {
  EXPECT_EQ(format_layout(random_layout(42, {})), format_layout(random_layout(42, {})));
  EXPECT_NE(format_layout(random_layout(42, {})), format_layout(random_layout(43, {})));
}

TEST(RandomLayout, KindFilter) {
  LayoutConstraints c;
  c.kinds = {SegmentKindTag::kStraight};
  const RouteLayout l = random_layout(7, c);
  for (const auto& s : l.segments) EXPECT_TRUE(std::holds_alternative<Straight>(s.kind));
}

TEST(RandomLayout, ThousandSeedsValidate) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const RouteLayout l = random_layout(seed, {});
    ASSERT_TRUE(validate_layout(l).empty()) << "seed " << seed;
    ASSERT_FALSE(route_overlaps_itself(l)) << "seed " << seed;
    ASSERT_GE(l.segments.size(), 4u);
    ASSERT_LE(l.segments.size(), 8u);
  }
}

TEST(RandomLayout, UnsatisfiableConstraints) {
  LayoutConstraints c;
  c.min_segments = 5;
  c.max_segments = 3;
  EXPECT_THROW(check_constraints(c, {}), InvalidInput);
  c = {};
  c.min_radius = 0.2;  // not above lane width
  c.max_radius = 0.3;
  EXPECT_THROW(random_layout(1, c), InvalidInput);
}

TEST(RandomLayout, ClosedRouteEndsNearStart) {
  LayoutConstraints c;
  c.closed = true;
  c.kinds = {SegmentKindTag::kStraight, SegmentKindTag::kArc};
  c.min_segments = 4;
  c.max_segments = 8;
  const RouteLayout l = random_layout(3, c);
  const auto poses = centerline(l, 0.05);
  EXPECT_LT(std::hypot(poses.back().x, poses.back().y), l.lane_width);
  EXPECT_EQ(format_layout(random_layout(3, c)), format_layout(l));
}

}  // namespace
}  // namespace trackgen
