// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "ipstab/ipstab.h"

namespace {

struct SpaceDeleter {
  void operator()(ipstab_space* s) const { ipstab_space_free(s); }
};
using Space = std::unique_ptr<ipstab_space, SpaceDeleter>;

Space line(std::vector<double> xs) {
  ipstab_space* raw = nullptr;
  EXPECT_EQ(ipstab_space_from_points(xs.data(), xs.size(), 1, &raw), IPSTAB_OK);
  return Space(raw);
}

std::string take(char* text) {
  std::string out = text ? text : "";
  ipstab_string_free(text);
  return out;
}

}  // namespace

TEST(CApi, Version) { EXPECT_STREQ(ipstab_version(), "0.1.0"); }

TEST(CApi, PointsDistanceAndBall) {
  const auto space = line({0, 1, 2, 20});
  EXPECT_EQ(ipstab_space_size(space.get()), 4u);
  double d = 0;
  ASSERT_EQ(ipstab_space_distance(space.get(), 0, 3, &d), IPSTAB_OK);
  EXPECT_DOUBLE_EQ(d, 20.0);
  std::size_t count = 0;
  ASSERT_EQ(ipstab_space_ball_size(space.get(), 1, 1.0, &count), IPSTAB_OK);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(ipstab_space_distance(space.get(), 0, 4, &d), IPSTAB_E_CONTRACT);
}

TEST(CApi, MatrixRejectsTriangleViolation) {
  const double m[9] = {0, 1, 5, 1, 0, 1, 5, 1, 0};
  ipstab_space* raw = reinterpret_cast<ipstab_space*>(0x1);
  EXPECT_EQ(ipstab_space_from_matrix(m, 3, &raw), IPSTAB_E_INPUT);
  EXPECT_EQ(raw, nullptr);
  EXPECT_NE(std::string(ipstab_last_error()).find("triangle"), std::string::npos);
}

TEST(CApi, GraphDistances) {
  const std::size_t edges[] = {0, 1, 1, 2};
  ipstab_space* raw = nullptr;
  ASSERT_EQ(ipstab_space_from_graph(3, edges, 2, &raw), IPSTAB_OK);
  Space space(raw);
  double d = 0;
  ipstab_space_distance(space.get(), 0, 2, &d);
  EXPECT_EQ(d, 2.0);
  const std::size_t broken[] = {0, 1};
  EXPECT_EQ(ipstab_space_from_graph(3, broken, 1, &raw), IPSTAB_E_INPUT);
}

TEST(CApi, Algorithms) {
  const auto space = line({0, 1, 3, 7});
  std::size_t labels[4];
  ASSERT_EQ(ipstab_min_ip_clustering(space.get(), 2, labels), IPSTAB_OK);
  EXPECT_EQ(std::vector<std::size_t>(labels, labels + 4), (std::vector<std::size_t>{0, 0, 0, 1}));
  ASSERT_EQ(ipstab_ip_clustering(space.get(), 2, labels), IPSTAB_OK);
  ASSERT_EQ(ipstab_max_ip_clustering(space.get(), 2, labels), IPSTAB_OK);
  EXPECT_EQ(labels[0], 0u);
  EXPECT_EQ(labels[3], 1u);
  ASSERT_EQ(ipstab_kmeans_pp(space.get(), 2, 3, 100, labels), IPSTAB_OK);
  std::size_t clusters = 0;
  ASSERT_EQ(ipstab_ball_carving(space.get(), 1.0, labels, &clusters), IPSTAB_OK);
  EXPECT_GE(clusters, 1u);
  EXPECT_EQ(ipstab_random_coloring(space.get(), 2, 0, labels), IPSTAB_E_INPUT);
  EXPECT_EQ(ipstab_ip_clustering(space.get(), 5, labels), IPSTAB_E_DEGENERATE);
  EXPECT_EQ(ipstab_ball_carving(space.get(), -1.0, labels, nullptr), IPSTAB_E_INPUT);
}

TEST(CApi, StabilityAndCosts) {
  const auto space = line({0, 1, 3, 7});
  const std::size_t labels[] = {0, 0, 1, 1};
  ipstab_stability_summary s{};
  double vi[4];
  ASSERT_EQ(ipstab_stability(space.get(), labels, 2, IPSTAB_AVERAGE, &s, vi), IPSTAB_OK);
  EXPECT_DOUBLE_EQ(s.max_violation, 1.6);
  EXPECT_EQ(s.num_unstable, 1u);
  EXPECT_DOUBLE_EQ(vi[0], 0.2);
  ipstab_cost_summary c{};
  ASSERT_EQ(ipstab_costs(space.get(), labels, 2, &c), IPSTAB_OK);
  EXPECT_DOUBLE_EQ(c.avg_within_cost, 5.0);
  const std::size_t bad[] = {0, 0, 2, 2};
  EXPECT_EQ(ipstab_stability(space.get(), bad, 2, IPSTAB_AVERAGE, &s, nullptr), IPSTAB_E_CONTRACT);
  EXPECT_EQ(ipstab_stability(space.get(), labels, 2, static_cast<ipstab_objective>(9), &s, nullptr),
            IPSTAB_E_ARGUMENT);
}

TEST(CApi, OptimalAlpha) {
  const auto space = line({0, 1, 100, 101});
  double alpha = -1;
  std::size_t best[4];
  ASSERT_EQ(ipstab_optimal_alpha(space.get(), 2, IPSTAB_AVERAGE, 14, &alpha, best), IPSTAB_OK);
  EXPECT_LT(alpha, 1.0);
  EXPECT_EQ(std::vector<std::size_t>(best, best + 4), (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_EQ(ipstab_optimal_alpha(space.get(), 2, IPSTAB_AVERAGE, 3, &alpha, nullptr), IPSTAB_E_RESOURCE);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(ipstab_space_from_points(nullptr, 2, 1, nullptr), IPSTAB_E_ARGUMENT);
  EXPECT_EQ(ipstab_min_ip_clustering(nullptr, 2, nullptr), IPSTAB_E_ARGUMENT);
  EXPECT_EQ(ipstab_run_json(nullptr, nullptr), IPSTAB_E_ARGUMENT);
  EXPECT_EQ(ipstab_space_size(nullptr), 0u);
  ipstab_space_free(nullptr);
}

TEST(CApi, JsonEntryPoints) {
  char* out = nullptr;
  ASSERT_EQ(ipstab_run_json(R"({"instance": {"kind": "random-euclidean", "params": {"n": 20}}, "k": 3})", &out),
            IPSTAB_OK);
  EXPECT_NE(take(out).find("\"max_violation\""), std::string::npos);

  ASSERT_EQ(ipstab_sweep_csv(R"({"instance": {"kind": "random-euclidean", "params": {"n": 20}}, "k_min": 2,
                                "k_max": 3})",
                             &out),
            IPSTAB_OK);
  EXPECT_NE(take(out).find("\n2,carve,avg,"), std::string::npos);

  ASSERT_EQ(ipstab_oracle_json(R"({"instance": {"kind": "random-euclidean", "params": {"n": 6}}, "k": 2})", &out),
            IPSTAB_OK);
  EXPECT_NE(take(out).find("\"alpha_star\""), std::string::npos);
}

TEST(CApi, JsonErrorsMapToStatus) {
  char* out = nullptr;
  EXPECT_EQ(ipstab_run_json("{not json", &out), IPSTAB_E_CONFIG);
  EXPECT_EQ(out, nullptr);
  EXPECT_EQ(ipstab_run_json(R"({"instance": {"kind": "random-tree", "params": {"n": 9}}, "k": 2,
                               "algorithms": ["kmeanspp"]})",
                            &out),
            IPSTAB_E_CONFIG);
  EXPECT_EQ(ipstab_run_json(R"({"instance": {"kind": "csv-points", "path": "/no/such.csv"}, "k": 2})", &out),
            IPSTAB_E_INPUT);
  EXPECT_NE(std::string(ipstab_last_error()).find("/no/such.csv"), std::string::npos);
  EXPECT_EQ(ipstab_oracle_json(R"({"instance": {"kind": "random-euclidean", "params": {"n": 15}}, "k": 2})", &out),
            IPSTAB_E_RESOURCE);
  EXPECT_STREQ(ipstab_status_name(IPSTAB_E_RESOURCE), "resource limit");
}
