#ifndef IPSTAB_DATAGEN_HPP
#define IPSTAB_DATAGEN_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipstab/metric.hpp"

namespace ipstab {

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

enum class HeaderMode { Auto, Yes, No };

std::optional<HeaderMode> parse_header_mode(std::string_view name);

struct CsvOptions {
  HeaderMode header = HeaderMode::Auto;
  // Drop every column holding a non-numeric data cell instead of failing.
  bool drop_non_numeric = false;
  // When nonempty, only these (0-based) columns are read.
  std::vector<std::size_t> columns;
  // Min-max scale each retained column to [0, 1] (constant columns become 0).
  bool normalize = false;
};

struct CsvData {
  PointSet points;
  std::size_t rows = 0;  // data rows read
  std::size_t raw_columns = 0;  // columns per row in the file
  std::vector<std::size_t> kept_columns;
  bool header_present = false;
  std::vector<std::string> header;
};

// One point per row, comma-separated decimals, optional header, blank lines
// ignored. In auto mode a first row with any non-numeric token is a header.
// Errors (ragged rows, bad cells, no data) carry the 1-based line number.
CsvData parse_csv(std::istream& in, const CsvOptions& options = {}, std::string_view source = "<stream>");
CsvData load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

void normalize_min_max(PointSet& points);

struct GraphData {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

// First line "n m", then m lines "u v" (0-indexed, whitespace separated).
GraphData parse_graph(std::istream& in, std::string_view source = "<stream>");
GraphData load_graph(const std::filesystem::path& path);

// Square numeric CSV (no header) read as an explicit distance matrix.
std::vector<std::vector<double>> load_matrix(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Generators (deterministic for fixed arguments)
// ---------------------------------------------------------------------------

// i.i.d. uniform points in [0, 1]^dim.
PointSet gen_random_euclidean(std::size_t n, std::size_t dim, std::uint64_t seed);

// Random recursive tree: vertex i >= 1 attaches to a uniform earlier vertex.
std::vector<Edge> gen_random_tree(std::size_t n, std::uint64_t seed);

// ceil(log2 k) for k >= 1.
std::size_t ceil_log2(std::size_t k);
// k * ceil(log2 k): the number of path vertices in gen_star_path.
std::size_t star_path_length(std::size_t k);

// Star centered at vertex 0 with n - L - 1 leaves (vertices 1..), plus a path
// of L = k ceil(log2 k) further vertices hanging off vertex 0. Needs k >= 2 and
// n > L + 1.
std::vector<Edge> gen_star_path(std::size_t n, std::size_t k);

// Width of one k-means++ gadget: [0, 1, 1 + 1/beta, 2 + 1/beta].
double kmeanspp_gadget_width(double beta);
// Gap between consecutive gadgets: 100 * num_gadgets * beta.
double kmeanspp_gadget_gap(std::size_t num_gadgets, double beta);

// num_gadgets copies of the 1-D gadget [0, 1, 1 + 1/beta, 2 + 1/beta], each
// separated from the next by kmeanspp_gadget_gap. Meant for
// k = 2 * num_gadgets: when D^2 seeding picks both gadget endpoints, Lloyd
// settles on {0, 1} | {1 + 1/beta, 2 + 1/beta}, whose middle points violate
// Min-IP stability by a factor beta (and average IP stability by about 2).
PointSet gen_kmeanspp_hard(std::size_t num_gadgets, double beta);

// `blobs` unit-variance Gaussian clouds of n_per_blob points, centered
// `separation` apart along the first axis.
PointSet gen_separated_blobs(std::size_t n_per_blob, std::size_t blobs, double separation, std::uint64_t seed,
                             std::size_t dim = 2);

// ---------------------------------------------------------------------------
// Experiment instances
// ---------------------------------------------------------------------------

enum class InstanceKind {
  CsvPoints,
  MatrixFile,
  GraphFile,
  RandomEuclidean,
  RandomTree,
  StarPath,
  KmeansppHard,
  SeparatedBlobs,
};

const char* to_string(InstanceKind kind);
std::optional<InstanceKind> parse_instance_kind(std::string_view name);
// The metric an instance kind produces.
MetricKind metric_of(InstanceKind kind);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::RandomEuclidean;
  std::filesystem::path path;  // file-backed kinds only
  std::map<std::string, double> params;  // generator parameters
  CsvOptions csv;
};

// Parses "n=100,dim=2,seed=7". Throws ConfigError on malformed pairs.
std::map<std::string, double> parse_gen_args(std::string_view text);

struct Instance {
  InstanceSpec spec;
  MetricSpace space;
  std::optional<PointSet> points;
  std::optional<std::vector<Edge>> edges;
  std::string provenance;
};

// Validates the parameters of the kind (ConfigError), then loads or generates.
Instance build_instance(const InstanceSpec& spec);

}  // namespace ipstab

#endif  // IPSTAB_DATAGEN_HPP
