#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ipstab/carve.hpp"
#include "ipstab/datagen.hpp"
#include "ipstab/error.hpp"
#include "ipstab/oracle.hpp"
#include "ipstab/stability.hpp"

using namespace ipstab;

namespace {

CsvData csv(const std::string& text, CsvOptions options = {}) {
  std::istringstream in(text);
  return parse_csv(in, options, "test.csv");
}

std::string error_of(const std::string& text, CsvOptions options = {}) {
  try {
    csv(text, options);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("ipstab_datagen_" + name);
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Csv, PlainRows) {
  const auto d = csv("1,2\n3,4\n");
  EXPECT_FALSE(d.header_present);
  EXPECT_EQ(d.points, (PointSet{{1, 2}, {3, 4}}));
}

TEST(Csv, AutoDetectedHeader) {
  const auto d = csv("a,b\n1,2\n");
  EXPECT_TRUE(d.header_present);
  EXPECT_EQ(d.header, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.points, (PointSet{{1, 2}}));
}

TEST(Csv, ForcedHeaderModes) {
  CsvOptions yes;
  yes.header = HeaderMode::Yes;
  EXPECT_EQ(csv("1,2\n3,4\n", yes).points, (PointSet{{3, 4}}));
  CsvOptions no;
  no.header = HeaderMode::No;
  EXPECT_NE(error_of("a,b\n1,2\n", no).find("test.csv:1:"), std::string::npos);
}

TEST(Csv, BlankLinesWhitespaceAndSigns) {
  const auto d = csv("\n 1 , -2.5\n\n+3,4e1\r\n");
  EXPECT_EQ(d.points, (PointSet{{1, -2.5}, {3, 40}}));
}

TEST(Csv, ErrorsCarryLineNumbers) {
  EXPECT_NE(error_of("1,2\n3,4\n5\n").find("test.csv:3:"), std::string::npos);
  EXPECT_NE(error_of("1,2\n3,x\n").find("test.csv:2:"), std::string::npos);
  EXPECT_NE(error_of("1,2\nnan,4\n").find("test.csv:2:"), std::string::npos);
  EXPECT_FALSE(error_of("").empty());
  EXPECT_FALSE(error_of("a,b\n").empty());
}

TEST(Csv, DropNonNumericColumns) {
  CsvOptions o;
  o.drop_non_numeric = true;
  const auto d = csv("age,job,hours\n30,clerk,40\n50,chef,20\n", o);
  EXPECT_EQ(d.kept_columns, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(d.raw_columns, 3u);
  EXPECT_EQ(d.points, (PointSet{{30, 40}, {50, 20}}));
}

TEST(Csv, ColumnAllowlist) {
  CsvOptions o;
  o.header = HeaderMode::No;
  o.columns = {2, 0};
  const auto d = csv("1,x,3\n4,y,6\n", o);
  EXPECT_EQ(d.kept_columns, (std::vector<std::size_t>{2, 0}));
  EXPECT_EQ(d.points, (PointSet{{3, 1}, {6, 4}}));
  o.columns = {5};
  EXPECT_FALSE(error_of("1,2\n", o).empty());
}

TEST(Csv, MinMaxNormalization) {
  CsvOptions o;
  o.normalize = true;
  const auto d = csv("0,5,7\n10,5,9\n5,5,8\n", o);
  EXPECT_EQ(d.points, (PointSet{{0, 0, 0}, {1, 0, 1}, {0.5, 0, 0.5}}));
}

TEST(Csv, RowCountMatchesLineCount) {
  std::ostringstream body;
  body << "x,y,z\n";
  for (int i = 0; i < 1234; ++i) body << i << "," << i * 2 << "," << i % 7 << "\n";
  const auto path = temp_file("rows.csv", body.str());
  const auto d = load_csv(path);
  std::ifstream in(path);
  const auto lines = std::count(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>(), '\n');
  EXPECT_EQ(d.rows, static_cast<std::size_t>(lines - 1));
  EXPECT_EQ(d.points.front().size(), 3u);
  std::filesystem::remove(path);
}

TEST(Csv, MissingFileNamesThePath) {
  try {
    load_csv("/definitely/not/here.csv");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/definitely/not/here.csv"), std::string::npos);
  }
}

TEST(Graph, EdgeListFormat) {
  std::istringstream in("4 3\n0 1\n1 2\n2 3\n");
  const auto g = parse_graph(in);
  EXPECT_EQ(g.n, 4u);
  ASSERT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.edges[2].u, 2u);
  EXPECT_EQ(g.edges[2].v, 3u);
  std::istringstream short_list("4 3\n0 1\n");
  EXPECT_THROW(parse_graph(short_list), InputError);
}

TEST(Matrix, LoadsSquareCsv) {
  const auto path = temp_file("m.csv", "0,2,3\n2,0,4\n3,4,0\n");
  const auto m = load_matrix(path);
  EXPECT_EQ(m, (std::vector<std::vector<double>>{{0, 2, 3}, {2, 0, 4}, {3, 4, 0}}));
  std::filesystem::remove(path);
}

TEST(Generators, RandomTreeIsASpanningTree) {
  const auto edges = gen_random_tree(10000, 17);
  ASSERT_EQ(edges.size(), 9999u);
  const auto hops = bfs_distances(10000, edges, 0);
  std::size_t far = 0;
  for (const auto& h : hops) {
    ASSERT_TRUE(h.has_value());
    far = std::max(far, *h);
  }
  EXPECT_GE(far, 1u);
}

TEST(Generators, RandomEuclideanIsDeterministic) {
  const auto a = gen_random_euclidean(100, 5, 3);
  EXPECT_EQ(a, gen_random_euclidean(100, 5, 3));
  EXPECT_NE(a, gen_random_euclidean(100, 5, 4));
  for (const auto& p : a) {
    for (double v : p) {
      EXPECT_GE(v, 0.0);
      EXPECT_LT(v, 1.0);
    }
  }
}

TEST(Generators, StarPathSmall) {
  EXPECT_EQ(star_path_length(2), 2u);
  const auto edges = gen_star_path(16, 2);
  ASSERT_EQ(edges.size(), 15u);
  const auto hops = bfs_distances(16, edges, 0);
  std::size_t leaves = 0, max_hop = 0;
  for (std::size_t v = 1; v < 16; ++v) {
    if (*hops[v] == 1) ++leaves;
    max_hop = std::max(max_hop, *hops[v]);
  }
  EXPECT_EQ(leaves, 14u);  // 13 star leaves plus the first path vertex
  EXPECT_EQ(max_hop, 2u);
}

TEST(Generators, StarPathLarge) {
  EXPECT_EQ(ceil_log2(64), 6u);
  EXPECT_EQ(ceil_log2(65), 7u);
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(star_path_length(64), 384u);
  const auto edges = gen_star_path(4096, 64);
  const auto hops = bfs_distances(4096, edges, 0);
  EXPECT_EQ(**std::max_element(hops.begin(), hops.end()), 384u);
  EXPECT_THROW(gen_star_path(9, 4), InputError);
}

TEST(Generators, KmeansppGadget) {
  const auto one = gen_kmeanspp_hard(1, 50);
  ASSERT_EQ(one.size(), 4u);
  const double expected[] = {0.0, 1.0, 1.02, 2.02};
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(one[i][0], expected[i]);
  EXPECT_EQ(gen_kmeanspp_hard(2000, 50).size(), 8000u);
}

TEST(Generators, KmeansppGadgetsAreFarApart) {
  const auto pts = gen_kmeanspp_hard(5, 50);
  const double gap = kmeanspp_gadget_gap(5, 50);
  for (std::size_t g = 1; g < 5; ++g) EXPECT_NEAR(pts[4 * g][0] - pts[4 * g - 1][0], gap, 1e-6);
}

TEST(Generators, IpClusteringOnGadgetsIsBounded) {
  const auto space = MetricSpace::from_points(gen_kmeanspp_hard(20, 50));
  EXPECT_LE(stability_report(space, ip_clustering(space, 40), Objective::Average).max_vi, 240.0);
}

TEST(Generators, SeparatedBlobs) {
  const auto pts = gen_separated_blobs(4, 2, 1e6, 1);
  ASSERT_EQ(pts.size(), 8u);
  const auto space = MetricSpace::from_points(pts);
  EXPECT_LT(optimal_alpha(space, 2, Objective::Average).alpha_star, 1.0);
  const auto single = gen_separated_blobs(10, 1, 5.0, 2, 3);
  EXPECT_EQ(single.size(), 10u);
  EXPECT_EQ(single.front().size(), 3u);
}

TEST(Instances, GenArgs) {
  EXPECT_EQ(parse_gen_args("n=100, dim=2,seed=7"), (std::map<std::string, double>{{"dim", 2}, {"n", 100}, {"seed", 7}}));
  EXPECT_TRUE(parse_gen_args("").empty());
  EXPECT_THROW(parse_gen_args("n"), ConfigError);
  EXPECT_THROW(parse_gen_args("n=abc"), ConfigError);
}

TEST(Instances, NamesRoundTrip) {
  for (auto name : {"csv-points", "matrix-file", "graph-file", "random-euclidean", "random-tree", "star-path",
                    "kmeanspp-hard", "separated-blobs"}) {
    const auto kind = parse_instance_kind(name);
    ASSERT_TRUE(kind.has_value()) << name;
    EXPECT_STREQ(to_string(*kind), name);
  }
  EXPECT_FALSE(parse_instance_kind("adult").has_value());
  EXPECT_EQ(metric_of(InstanceKind::StarPath), MetricKind::Graph);
  EXPECT_EQ(metric_of(InstanceKind::MatrixFile), MetricKind::Matrix);
  EXPECT_EQ(metric_of(InstanceKind::KmeansppHard), MetricKind::Points);
}

TEST(Instances, BuildValidatesParameters) {
  InstanceSpec spec;
  spec.kind = InstanceKind::RandomEuclidean;
  EXPECT_THROW(build_instance(spec), ConfigError);
  spec.params = {{"n", 10}, {"beta", 3}};
  EXPECT_THROW(build_instance(spec), ConfigError);
  spec.params = {{"n", 10.5}};
  EXPECT_THROW(build_instance(spec), ConfigError);
  spec.params = {{"n", 10}, {"dim", 3}};
  const auto inst = build_instance(spec);
  EXPECT_EQ(inst.space.size(), 10u);
  EXPECT_EQ(inst.space.dimension(), 3u);
  EXPECT_NE(inst.provenance.find("n=10"), std::string::npos);
}

TEST(Instances, GraphKindsCarryEdges) {
  InstanceSpec spec;
  spec.kind = InstanceKind::StarPath;
  spec.params = {{"n", 40}, {"k", 4}};
  const auto inst = build_instance(spec);
  EXPECT_EQ(inst.space.kind(), MetricKind::Graph);
  ASSERT_TRUE(inst.edges.has_value());
  EXPECT_EQ(inst.edges->size(), 39u);
  EXPECT_FALSE(inst.points.has_value());
}

TEST(Instances, CsvFile) {
  const auto path = temp_file("inst.csv", "a,b\n0,0\n3,4\n");
  InstanceSpec spec;
  spec.kind = InstanceKind::CsvPoints;
  spec.path = path;
  const auto inst = build_instance(spec);
  EXPECT_DOUBLE_EQ(inst.space.distance(0, 1), 5.0);
  std::filesystem::remove(path);
}
