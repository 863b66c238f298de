#include "ipstab/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "ipstab/error.hpp"
#include "ipstab/random.hpp"

namespace ipstab {

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  const auto first = std::find_if(s.begin(), s.end(), not_space);
  const auto last = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return first < last ? std::string_view(first, static_cast<std::size_t>(last - first)) : std::string_view{};
}

std::optional<double> parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string at_line(std::string_view source, std::size_t line) {
  std::ostringstream os;
  os << source << ":" << line << ": ";
  return os.str();
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

const std::map<InstanceKind, std::set<std::string>>& allowed_params() {
  static const std::map<InstanceKind, std::set<std::string>> table{
      {InstanceKind::CsvPoints, {}},
      {InstanceKind::MatrixFile, {}},
      {InstanceKind::GraphFile, {}},
      {InstanceKind::RandomEuclidean, {"n", "dim", "seed"}},
      {InstanceKind::RandomTree, {"n", "seed"}},
      {InstanceKind::StarPath, {"n", "k"}},
      {InstanceKind::KmeansppHard, {"gadgets", "beta"}},
      {InstanceKind::SeparatedBlobs, {"n_per_blob", "blobs", "separation", "seed", "dim"}},
  };
  return table;
}

double param(const InstanceSpec& spec, const std::string& key, std::optional<double> fallback = std::nullopt) {
  const auto it = spec.params.find(key);
  if (it != spec.params.end()) return it->second;
  if (!fallback) throw ConfigError(std::string("instance kind ") + to_string(spec.kind) + " needs parameter '" + key + "'");
  return *fallback;
}

std::uint64_t int_param(const InstanceSpec& spec, const std::string& key, std::optional<double> fallback = std::nullopt) {
  const double v = param(spec, key, fallback);
  if (!(v >= 0.0) || v != std::floor(v) || v > 9.0e15) {
    throw ConfigError("parameter '" + key + "' must be a non-negative integer");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::optional<HeaderMode> parse_header_mode(std::string_view name) {
  if (name == "auto") return HeaderMode::Auto;
  if (name == "yes" || name == "true") return HeaderMode::Yes;
  if (name == "no" || name == "false") return HeaderMode::No;
  return std::nullopt;
}

CsvData parse_csv(std::istream& in, const CsvOptions& options, std::string_view source) {
  struct Row {
    std::size_t line;
    std::vector<std::string> cells;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    Row row{line_no, {}};
    for (auto cell : split_commas(line)) row.cells.emplace_back(cell);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError(std::string(source) + ": file has no rows");

  CsvData data;
  bool header = options.header == HeaderMode::Yes;
  if (options.header == HeaderMode::Auto) {
    header = std::any_of(rows.front().cells.begin(), rows.front().cells.end(),
                         [](const std::string& c) { return !parse_number(c).has_value(); });
  }
  std::size_t first_data = 0;
  if (header) {
    data.header_present = true;
    data.header = rows.front().cells;
    first_data = 1;
  }
  if (first_data >= rows.size()) throw InputError(std::string(source) + ": file has no data rows");

  const std::size_t width = rows[first_data].cells.size();
  data.raw_columns = width;
  for (std::size_t r = first_data; r < rows.size(); ++r) {
    if (rows[r].cells.size() != width) {
      std::ostringstream os;
      os << at_line(source, rows[r].line) << "row has " << rows[r].cells.size() << " columns, expected " << width;
      throw InputError(os.str());
    }
  }

  std::vector<std::size_t> candidate;
  if (options.columns.empty()) {
    for (std::size_t c = 0; c < width; ++c) candidate.push_back(c);
  } else {
    for (std::size_t c : options.columns) {
      if (c >= width) throw InputError(std::string(source) + ": column " + std::to_string(c) + " does not exist");
      candidate.push_back(c);
    }
  }

  for (std::size_t c : candidate) {
    bool numeric = true;
    for (std::size_t r = first_data; r < rows.size() && numeric; ++r) {
      if (!parse_number(rows[r].cells[c])) {
        if (!options.drop_non_numeric) {
          std::ostringstream os;
          os << at_line(source, rows[r].line) << "non-numeric value '" << rows[r].cells[c] << "' in column " << c;
          throw InputError(os.str());
        }
        numeric = false;
      }
    }
    if (numeric) data.kept_columns.push_back(c);
  }
  if (data.kept_columns.empty()) throw InputError(std::string(source) + ": no numeric columns remain");

  for (std::size_t r = first_data; r < rows.size(); ++r) {
    Point p;
    p.reserve(data.kept_columns.size());
    for (std::size_t c : data.kept_columns) p.push_back(*parse_number(rows[r].cells[c]));
    data.points.push_back(std::move(p));
  }
  data.rows = data.points.size();
  if (options.normalize) normalize_min_max(data.points);
  return data;
}

CsvData load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  auto in = open_or_throw(path);
  return parse_csv(in, options, path.string());
}

void normalize_min_max(PointSet& points) {
  if (points.empty()) return;
  const std::size_t dim = points.front().size();
  for (std::size_t d = 0; d < dim; ++d) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Point& p : points) {
      lo = std::min(lo, p[d]);
      hi = std::max(hi, p[d]);
    }
    const double span = hi - lo;
    for (Point& p : points) p[d] = span > 0.0 ? (p[d] - lo) / span : 0.0;
  }
}

GraphData parse_graph(std::istream& in, std::string_view source) {
  GraphData graph;
  std::string line;
  std::size_t line_no = 0;
  std::size_t m = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::istringstream fields{std::string(line)};
    long long a = -1, b = -1;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0) {
      throw InputError(at_line(source, line_no) + "expected two non-negative integers");
    }
    if (!have_header) {
      graph.n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
      continue;
    }
    const Edge e{static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
    if (e.u >= graph.n || e.v >= graph.n) {
      throw InputError(at_line(source, line_no) + "vertex index out of range [0, " + std::to_string(graph.n) + ")");
    }
    graph.edges.push_back(e);
  }
  if (!have_header) throw InputError(std::string(source) + ": missing 'n m' header line");
  if (graph.edges.size() != m) {
    throw InputError(std::string(source) + ": header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(graph.edges.size()));
  }
  return graph;
}

GraphData load_graph(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_graph(in, path.string());
}

std::vector<std::vector<double>> load_matrix(const std::filesystem::path& path) {
  CsvOptions options;
  options.header = HeaderMode::No;
  return load_csv(path, options).points;
}

PointSet gen_random_euclidean(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (n == 0 || dim == 0) throw InputError("random Euclidean instance needs n >= 1 and dim >= 1");
  Rng rng(seed);
  PointSet points(n, Point(dim));
  for (Point& p : points) {
    for (double& c : p) c = rng.uniform01();
  }
  return points;
}

std::vector<Edge> gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("random tree needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<std::size_t>(rng.below(v)), v});
  return edges;
}

std::size_t ceil_log2(std::size_t k) {
  std::size_t p = 0;
  while ((std::size_t{1} << p) < k) ++p;
  return p;
}

std::size_t star_path_length(std::size_t k) { return k * ceil_log2(k); }

std::vector<Edge> gen_star_path(std::size_t n, std::size_t k) {
  if (k < 2) throw InputError("star+path instance needs k >= 2");
  const std::size_t path = star_path_length(k);
  if (n <= path + 1) {
    throw InputError("star+path instance needs n > " + std::to_string(path + 1) + " for k = " + std::to_string(k));
  }
  const std::size_t leaves = n - path - 1;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, v});
  std::size_t previous = 0;
  for (std::size_t v = leaves + 1; v < n; ++v) {
    edges.push_back({previous, v});
    previous = v;
  }
  return edges;
}

double kmeanspp_gadget_width(double beta) { return 2.0 + 1.0 / beta; }

double kmeanspp_gadget_gap(std::size_t num_gadgets, double beta) {
  return 100.0 * static_cast<double>(num_gadgets) * beta;
}

PointSet gen_kmeanspp_hard(std::size_t num_gadgets, double beta) {
  if (num_gadgets == 0) throw InputError("k-means++ hard instance needs at least one gadget");
  if (!(beta > 1.0) || !std::isfinite(beta)) throw InputError("k-means++ hard instance needs beta > 1");
  const double delta = 1.0 / beta;
  const double stride = kmeanspp_gadget_width(beta) + kmeanspp_gadget_gap(num_gadgets, beta);
  PointSet points;
  points.reserve(4 * num_gadgets);
  for (std::size_t g = 0; g < num_gadgets; ++g) {
    const double offset = static_cast<double>(g) * stride;
    for (double x : {0.0, 1.0, 1.0 + delta, 2.0 + delta}) points.push_back({offset + x});
  }
  return points;
}

PointSet gen_separated_blobs(std::size_t n_per_blob, std::size_t blobs, double separation, std::uint64_t seed,
                             std::size_t dim) {
  if (n_per_blob == 0 || blobs == 0 || dim == 0) throw InputError("blob instance needs positive sizes");
  if (!(separation > 0.0) || !std::isfinite(separation)) throw InputError("blob separation must be positive");
  Rng rng(seed);
  PointSet points;
  points.reserve(n_per_blob * blobs);
  for (std::size_t b = 0; b < blobs; ++b) {
    for (std::size_t i = 0; i < n_per_blob; ++i) {
      Point p(dim);
      for (double& c : p) c = rng.normal();
      p[0] += static_cast<double>(b) * separation;
      points.push_back(std::move(p));
    }
  }
  return points;
}

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::CsvPoints:
      return "csv-points";
    case InstanceKind::MatrixFile:
      return "matrix-file";
    case InstanceKind::GraphFile:
      return "graph-file";
    case InstanceKind::RandomEuclidean:
      return "random-euclidean";
    case InstanceKind::RandomTree:
      return "random-tree";
    case InstanceKind::StarPath:
      return "star-path";
    case InstanceKind::KmeansppHard:
      return "kmeanspp-hard";
    case InstanceKind::SeparatedBlobs:
      return "separated-blobs";
  }
  return "unknown";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  for (auto kind : {InstanceKind::CsvPoints, InstanceKind::MatrixFile, InstanceKind::GraphFile,
                    InstanceKind::RandomEuclidean, InstanceKind::RandomTree, InstanceKind::StarPath,
                    InstanceKind::KmeansppHard, InstanceKind::SeparatedBlobs}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

MetricKind metric_of(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::MatrixFile:
      return MetricKind::Matrix;
    case InstanceKind::GraphFile:
    case InstanceKind::RandomTree:
    case InstanceKind::StarPath:
      return MetricKind::Graph;
    default:
      return MetricKind::Points;
  }
}

std::map<std::string, double> parse_gen_args(std::string_view text) {
  std::map<std::string, double> params;
  text = trim(text);
  if (text.empty()) return params;
  for (auto item : split_commas(text)) {
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw ConfigError("generator argument '" + std::string(item) + "' is not key=value");
    const std::string key(trim(item.substr(0, eq)));
    const auto value = parse_number(item.substr(eq + 1));
    if (key.empty() || !value) throw ConfigError("generator argument '" + std::string(item) + "' is malformed");
    params[key] = *value;
  }
  return params;
}

Instance build_instance(const InstanceSpec& spec) {
  const auto& allowed = allowed_params().at(spec.kind);
  for (const auto& [key, value] : spec.params) {
    if (!allowed.count(key)) {
      throw ConfigError("parameter '" + key + "' does not apply to instance kind " + to_string(spec.kind));
    }
  }

  std::ostringstream provenance;
  provenance << to_string(spec.kind);
  std::optional<PointSet> points;
  std::optional<std::vector<Edge>> edges;
  std::optional<MetricSpace> space;

  switch (spec.kind) {
    case InstanceKind::CsvPoints: {
      CsvData data = load_csv(spec.path, spec.csv);
      provenance << " " << spec.path.string() << " (" << data.rows << " rows, " << data.kept_columns.size() << " of "
                 << data.raw_columns << " columns" << (spec.csv.normalize ? ", min-max normalized" : "") << ")";
      points = std::move(data.points);
      break;
    }
    case InstanceKind::MatrixFile: {
      provenance << " " << spec.path.string();
      space = MetricSpace::from_matrix(load_matrix(spec.path), provenance.str());
      break;
    }
    case InstanceKind::GraphFile: {
      GraphData graph = load_graph(spec.path);
      provenance << " " << spec.path.string() << " (" << graph.n << " vertices, " << graph.edges.size() << " edges)";
      space = MetricSpace::from_graph(graph.n, graph.edges, provenance.str());
      edges = std::move(graph.edges);
      break;
    }
    case InstanceKind::RandomEuclidean: {
      const auto n = int_param(spec, "n");
      const auto dim = int_param(spec, "dim", 2);
      const auto seed = int_param(spec, "seed", 0);
      provenance << " n=" << n << " dim=" << dim << " seed=" << seed << " (uniform in the unit cube)";
      points = gen_random_euclidean(n, dim, seed);
      break;
    }
    case InstanceKind::RandomTree: {
      const auto n = int_param(spec, "n");
      const auto seed = int_param(spec, "seed", 0);
      provenance << " n=" << n << " seed=" << seed << " (random recursive tree)";
      edges = gen_random_tree(n, seed);
      space = MetricSpace::from_graph(n, *edges, provenance.str());
      break;
    }
    case InstanceKind::StarPath: {
      const auto n = int_param(spec, "n");
      const auto k = int_param(spec, "k");
      provenance << " n=" << n << " k=" << k << " (star plus path of " << (k >= 1 ? star_path_length(k) : 0)
                 << " vertices)";
      edges = gen_star_path(n, k);
      space = MetricSpace::from_graph(n, *edges, provenance.str());
      break;
    }
    case InstanceKind::KmeansppHard: {
      const auto gadgets = int_param(spec, "gadgets");
      const double beta = param(spec, "beta", 50.0);
      provenance << " gadgets=" << gadgets << " beta=" << beta
                 << " (reconstructed 4-point gadget [0, 1, 1+1/beta, 2+1/beta]; not the original construction)";
      points = gen_kmeanspp_hard(gadgets, beta);
      break;
    }
    case InstanceKind::SeparatedBlobs: {
      const auto per = int_param(spec, "n_per_blob");
      const auto blobs = int_param(spec, "blobs", 2);
      const double separation = param(spec, "separation", 10.0);
      const auto seed = int_param(spec, "seed", 0);
      const auto dim = int_param(spec, "dim", 2);
      provenance << " n_per_blob=" << per << " blobs=" << blobs << " separation=" << separation << " seed=" << seed
                 << " dim=" << dim;
      points = gen_separated_blobs(per, blobs, separation, seed, dim);
      break;
    }
  }

  if (!space) space = MetricSpace::from_points(*points, provenance.str());
  return Instance{spec, std::move(*space), std::move(points), std::move(edges), provenance.str()};
}

}  // namespace ipstab
