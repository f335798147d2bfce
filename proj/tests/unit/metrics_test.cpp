#include <fmt/format.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "test_support.hpp"
#include "trackgen/error.hpp"
#include "trackgen/metrics/confusion_matrix.hpp"
#include "trackgen/metrics/report.hpp"

namespace trackgen {
namespace {

TEST(Confusion, HandCountedTwoByTwo) {
  ConfusionMatrix cm(2);
  cm.accumulate(Raster(2, 2, 1, {0, 1, 1, 1}), Raster(2, 2, 1, {0, 0, 1, 1}));
  EXPECT_EQ(cm(0, 0), 1u);
  EXPECT_EQ(cm(0, 1), 1u);
  EXPECT_EQ(cm(1, 1), 2u);
  EXPECT_EQ(cm(1, 0), 0u);
  EXPECT_EQ(cm.total(), 4u);
}

TEST(Confusion, PerfectPredictionIsDiagonal) {
  std::mt19937_64 rng(1);
  const Raster ids = testing::random_raster(rng, 32, 32, 1, 9);
  ConfusionMatrix cm(10);
  cm.accumulate(ids, ids);
  for (int g = 0; g < 10; ++g)
    for (int p = 0; p < 10; ++p)
      if (g != p) EXPECT_EQ(cm(g, p), 0u);
  for (const auto& v : iou_per_class(cm))
    if (v) EXPECT_EQ(*v, 1.0);
}

TEST(Confusion, MatchesTally) {
  std::mt19937_64 rng(2);
  ConfusionMatrix cm(10);
  std::vector<std::uint64_t> tally(100, 0);
  for (int i = 0; i < 10; ++i) {
    const Raster p = testing::random_raster(rng, 64, 64, 1, 9);
    const Raster g = testing::random_raster(rng, 64, 64, 1, 9);
    cm.accumulate(p, g);
    for (std::size_t k = 0; k < p.pixel_count(); ++k) ++tally[g.data()[k] * 10u + p.data()[k]];
  }
  for (int g = 0; g < 10; ++g)
    for (int p = 0; p < 10; ++p) EXPECT_EQ(cm(g, p), tally[g * 10u + p]);
}

TEST(Confusion, Errors) {
  ConfusionMatrix cm(3);
  EXPECT_THROW(cm.accumulate(Raster(2, 2, 1), Raster(2, 3, 1)), InvalidInput);
  EXPECT_THROW(cm.accumulate(Raster(1, 1, 1, {3}), Raster(1, 1, 1, {0})), InvalidInput);
  EXPECT_EQ(cm.total(), 0u);
  EXPECT_THROW(cm.merge(ConfusionMatrix(4)), InvalidInput);
}

TEST(Confusion, OrderIndependentAndMergeable) {
  std::mt19937_64 rng(3);
  std::vector<std::pair<Raster, Raster>> pairs;
  for (int i = 0; i < 8; ++i) {
    pairs.emplace_back(testing::random_raster(rng, 16, 16, 1, 4),
                       testing::random_raster(rng, 16, 16, 1, 4));
  }
  ConfusionMatrix all(5), a(5), b(5), shuffled(5);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    all.accumulate(pairs[i].first, pairs[i].second);
    (i < 3 ? a : b).accumulate(pairs[i].first, pairs[i].second);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto& [p, g] : pairs) shuffled.accumulate(p, g);
  a.merge(b);
  EXPECT_EQ(a, all);
  EXPECT_EQ(shuffled, all);
}

// Builds a 2-class matrix with the given TP/FP/FN counts for class 1.
ConfusionMatrix counts(int tp, int fp, int fn) {
  std::vector<std::uint8_t> pred, gt;
  auto add = [&](int n, std::uint8_t g, std::uint8_t p) {
    for (int i = 0; i < n; ++i) {
      gt.push_back(g);
      pred.push_back(p);
    }
  };
  add(tp, 1, 1);
  add(fp, 0, 1);
  add(fn, 1, 0);
  const int n = static_cast<int>(gt.size());
  ConfusionMatrix cm(2);
  cm.accumulate(Raster(n, 1, 1, pred), Raster(n, 1, 1, gt));
  return cm;
}

TEST(Iou, EquationSpotValue) {
  EXPECT_EQ(*iou_per_class(counts(50, 25, 25))[1], 0.5);
}

TEST(Iou, MeanRules) {
  // Class 0: TP 1 FP 0 FN 0 -> 1.0; class 1: TP 1 FP 1 FN 0 -> 0.5.
  ConfusionMatrix cm(3);
  cm.accumulate(Raster(3, 1, 1, {0, 1, 1}), Raster(3, 1, 1, {0, 1, 0}));
  const auto iou = iou_per_class(cm);
  EXPECT_FALSE(iou[2].has_value());
  EXPECT_DOUBLE_EQ(*iou[0], 0.5);
  EXPECT_DOUBLE_EQ(*iou[1], 0.5);
  ConfusionMatrix two(2);
  two.accumulate(Raster(3, 1, 1, {0, 1, 1}), Raster(3, 1, 1, {0, 1, 1}));
  two.accumulate(Raster(2, 1, 1, {1, 1}), Raster(2, 1, 1, {1, 0}));
  // class 0: TP1 FN1 -> 0.5; class 1: TP3 FP1 -> 0.75
  EXPECT_DOUBLE_EQ(miou(two), (0.5 + 0.75) / 2);
  ConfusionMatrix one(2);
  one.accumulate(Raster(10, 1, 1, {1, 1, 1, 0, 0, 0, 0, 0, 0, 0}),
                 Raster(10, 1, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  const int skip0[] = {0};
  EXPECT_DOUBLE_EQ(miou(one, skip0), 0.3);
  EXPECT_THROW(miou(ConfusionMatrix(4)), InvalidInput);
}

TEST(Iou, MatchesSetOracle) {
  std::mt19937_64 rng(4);
  std::vector<std::pair<Raster, Raster>> pairs;
  ConfusionMatrix cm(10);
  for (int i = 0; i < 10; ++i) {
    pairs.emplace_back(testing::random_raster(rng, 64, 64, 1, 9),
                       testing::random_raster(rng, 64, 64, 1, 9));
    cm.accumulate(pairs.back().first, pairs.back().second);
  }
  const auto want = testing::oracle_iou(pairs, 10);
  const auto got = iou_per_class(cm);
  for (int c = 0; c < 10; ++c) EXPECT_NEAR(*got[c], *want[c], 1e-12);
  EXPECT_NEAR(miou(cm), testing::oracle_mean(want), 1e-12);
  double lo = 1, hi = 0;
  for (const auto& v : got) {
    lo = std::min(lo, *v);
    hi = std::max(hi, *v);
  }
  EXPECT_GE(miou(cm), lo);
  EXPECT_LE(miou(cm), hi);
}

TEST(Iou, PermutationInvariance) {
  std::mt19937_64 rng(5);
  const Raster p = testing::random_raster(rng, 64, 64, 1, 5);
  const Raster g = testing::random_raster(rng, 64, 64, 1, 5);
  std::vector<std::uint8_t> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto relabel = [&](const Raster& r) {
    Raster out = r;
    for (auto& v : out.data()) v = perm[v];
    return out;
  };
  ConfusionMatrix a(6), b(6);
  a.accumulate(p, g);
  b.accumulate(relabel(p), relabel(g));
  const auto ia = iou_per_class(a), ib = iou_per_class(b);
  for (int c = 0; c < 6; ++c) EXPECT_EQ(ia[c], ib[perm[c]]);
  EXPECT_NEAR(miou(a), miou(b), 1e-15);
}

TEST(Report, PerfectPredictionRows) {
  std::mt19937_64 rng(6);
  const Raster ids = testing::random_raster(rng, 32, 32, 1, 9);
  ConfusionMatrix cm(10);
  cm.accumulate(ids, ids);
  const std::string text = evaluation_report(cm, ClassMap::defaults());
  const ParsedReport r = parse_report(text);
  ASSERT_EQ(r.rows.size(), 10u);
  for (const auto& row : r.rows) EXPECT_EQ(row.iou_percent, 100.0);
  EXPECT_EQ(r.miou_percent, 100.0);
  EXPECT_NE(text.find(fmt::format("{:<32}   100.00\n", "double solid center line")), std::string::npos)
      << text;
}

TEST(Report, RoundTripAndAlignment) {
  std::vector<ClassEntry> entries = {{0, "unlabeled", {0, 0, 0}},
                                     {1, std::string(32, 'x'), {1, 1, 1}},
                                     {2, "absent class", {2, 2, 2}}};
  const ClassMap map(entries);
  ConfusionMatrix cm(3);
  cm.accumulate(Raster(4, 1, 1, {0, 1, 1, 0}), Raster(4, 1, 1, {0, 1, 0, 1}));
  const std::string text = evaluation_report(cm, map);
  const ParsedReport r = parse_report(text);
  const auto iou = iou_per_class(cm);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_NEAR(*r.rows[0].iou_percent, *iou[0] * 100, 0.005);
  EXPECT_EQ(r.rows[1].name, std::string(32, 'x'));
  EXPECT_FALSE(r.rows[2].iou_percent.has_value());
  EXPECT_NEAR(r.miou_percent, miou(cm) * 100, 0.005);
  // Every table row has the value column at the same offset.
  std::size_t pos = 0, width = 0;
  for (int i = 0; i < 7; ++i) {
    const std::size_t end = text.find('\n', pos);
    if (width == 0) width = end - pos;
    EXPECT_EQ(end - pos, width) << i;
    pos = end + 1;
  }
  EXPECT_NE(text.find("n/a:"), std::string::npos);
}

TEST(Report, CsvOutput) {
  ConfusionMatrix cm(2);
  cm.accumulate(Raster(1, 1, 1, {0}), Raster(1, 1, 1, {0}));
  EXPECT_EQ(format_iou_csv(cm, ClassMap::defaults()),
            "class_id,name,iou\n0,unlabeled,1\n1,left lane,\n");
}

}  // namespace
}  // namespace trackgen
