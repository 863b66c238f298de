#include <gtest/gtest.h>

#include "ipstab/baselines.hpp"
#include "ipstab/datagen.hpp"
#include "ipstab/error.hpp"
#include "ipstab/stability.hpp"
#include "support.hpp"

using namespace ipstab;
using ipstab::testing::Groups;
using ipstab::testing::groups;

TEST(KMeansPP, KEqualsNIsZeroCost) {
  const PointSet points = gen_random_euclidean(12, 3, 4);
  const auto r = kmeans_pp(points, 12, 1);
  EXPECT_EQ(r.clustering.k(), 12u);
  EXPECT_DOUBLE_EQ(r.objective_trace.front(), 0.0);
  EXPECT_TRUE(r.converged);
}

TEST(KMeansPP, SeparatedBlobsAreRecoveredForEverySeed) {
  const PointSet points = gen_separated_blobs(25, 2, 1000.0, 3);
  const auto space = MetricSpace::from_points(points);
  Groups expected(2);
  for (std::size_t i = 0; i < 50; ++i) expected[i / 25].push_back(i);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = kmeans_pp(points, 2, seed);
    EXPECT_EQ(groups(r.clustering), expected) << "seed " << seed;
    EXPECT_LE(stability_report(space, r.clustering, Objective::Average).max_vi, 1.0);
  }
}

TEST(KMeansPP, FixedSeedIsBitwiseReproducible) {
  const PointSet points = gen_random_euclidean(200, 4, 9);
  const auto a = kmeans_pp(points, 7, 42);
  const auto b = kmeans_pp(points, 7, 42);
  EXPECT_EQ(a.clustering.assignment(), b.clustering.assignment());
  EXPECT_EQ(a.seeds, b.seeds);
  EXPECT_EQ(a.centers, b.centers);
  EXPECT_EQ(a.objective_trace, b.objective_trace);
}

TEST(KMeansPP, LloydObjectiveNeverIncreases) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = kmeans_pp(gen_random_euclidean(300, 2, seed), 9, seed);
    for (std::size_t i = 1; i < r.objective_trace.size(); ++i) {
      EXPECT_LE(r.objective_trace[i], r.objective_trace[i - 1] * (1 + 1e-12));
    }
  }
}

TEST(KMeansPP, SeedsAreDistinctPoints) {
  const auto r = kmeans_pp(gen_random_euclidean(50, 2, 2), 10, 5);
  std::vector<std::size_t> s = r.seeds;
  std::sort(s.begin(), s.end());
  EXPECT_EQ(std::unique(s.begin(), s.end()), s.end());
  EXPECT_EQ(r.clustering.k(), 10u);
}

TEST(KMeansPP, DuplicatePointsStillFillEveryCluster) {
  const PointSet points{{0}, {0}, {0}, {5}};
  const auto r = kmeans_pp(points, 3, 0);
  EXPECT_EQ(r.clustering.k(), 3u);
}

TEST(KMeansPP, RequiresCoordinates) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const auto space = MetricSpace::from_graph(3, edges);
  try {
    kmeans_pp(space, 2, 0);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "k-means++ requires coordinates");
  }
}

TEST(KMeansPP, RejectsBadK) {
  EXPECT_THROW(kmeans_pp(PointSet{{0}, {1}}, 3, 0), InputError);
  EXPECT_THROW(kmeans_pp(PointSet{{0}, {1}}, 0, 0), InputError);
}

TEST(RandomColoring, SingleColor) {
  const auto edges = gen_random_tree(30, 1);
  const auto space = MetricSpace::from_graph(30, edges);
  EXPECT_EQ(random_coloring(space, 1, 7).k(), 1u);
}

TEST(RandomColoring, Deterministic) {
  EXPECT_EQ(random_colors(500, 6, 3), random_colors(500, 6, 3));
  EXPECT_NE(random_colors(500, 6, 3), random_colors(500, 6, 4));
  for (auto c : random_colors(500, 6, 3)) EXPECT_LT(c, 6u);
}

TEST(RandomColoring, RequiresGraph) {
  const auto space = MetricSpace::from_points(gen_random_euclidean(10, 2, 0));
  EXPECT_THROW(random_coloring(space, 2, 0), InputError);
}

TEST(ColorBalance, PathRootedAtEnd) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const auto space = MetricSpace::from_graph(3, edges);
  const auto s = color_balance(space, 0, Clustering({0, 0, 1}, 2));
  EXPECT_DOUBLE_EQ(s.total_x, 3.0);
  EXPECT_DOUBLE_EQ(s.per_color_x[0], 1.0);
  EXPECT_DOUBLE_EQ(s.per_color_x[1], 2.0);
  EXPECT_TRUE(s.balanced());
}

TEST(ColorBalance, OneColorCarriesEverything) {
  const auto edges = gen_random_tree(40, 2);
  const auto space = MetricSpace::from_graph(40, edges);
  const auto s = color_balance(space, 5, Clustering(std::vector<std::size_t>(40, 0), 1));
  EXPECT_DOUBLE_EQ(s.per_color_x[0], s.total_x);
}

TEST(ColorBalance, StarLeavesCountOne) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < 9; ++v) edges.push_back({0, v});
  const auto space = MetricSpace::from_graph(9, edges);
  const std::vector<std::size_t> colors{0, 1, 0, 2, 2, 1, 0, 0, 2};
  const auto s = color_balance(space.row(0), 0, colors, 3);
  EXPECT_DOUBLE_EQ(s.per_color_x[0], 3.0);
  EXPECT_DOUBLE_EQ(s.per_color_x[1], 2.0);
  EXPECT_DOUBLE_EQ(s.per_color_x[2], 3.0);
}

TEST(ColorBalance, MissingColorIsUnbalanced) {
  const std::vector<double> dist{0, 1, 2};
  const std::vector<std::size_t> colors{0, 0, 0};
  EXPECT_FALSE(color_balance(dist, 0, colors, 2).balanced());
}
