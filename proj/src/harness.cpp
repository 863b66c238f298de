#include "ipstab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "ipstab/baselines.hpp"
#include "ipstab/carve.hpp"
#include "ipstab/error.hpp"
#include "ipstab/minmax.hpp"
#include "ipstab/oracle.hpp"

namespace ipstab {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

// Everything needed to score one clustering.
struct Outcome {
  Clustering clustering;
  std::optional<std::vector<std::size_t>> center_points;
  std::optional<PointSet> center_vectors;
};

Outcome run_algorithm(const Instance& instance, Algorithm algorithm, std::size_t k, std::uint64_t seed,
                      const RunConfig& config) {
  const MetricSpace& space = instance.space;
  switch (algorithm) {
    case Algorithm::Carve: {
      auto r = ip_clustering_detailed(space, k, config.first);
      return {std::move(r.clustering), std::move(r.kcenter.centers), std::nullopt};
    }
    case Algorithm::MinIp:
      return {min_ip_clustering(space, k), std::nullopt, std::nullopt};
    case Algorithm::MaxIp: {
      auto r = max_ip_clustering_detailed(space, k, config.first);
      return {std::move(r.clustering), std::move(r.kcenter.centers), std::nullopt};
    }
    case Algorithm::KMeansPP: {
      auto r = kmeans_pp(space, k, seed, config.max_iters);
      return {std::move(r.clustering), std::nullopt, std::move(r.centers)};
    }
    case Algorithm::RandomColor:
      return {random_coloring(space, k, seed), std::nullopt, std::nullopt};
  }
  throw std::logic_error("unhandled algorithm");
}

// Numeric summary of one run, or the mean of several.
struct Row {
  std::map<Objective, StabilityReport> stability;
  CostReport cost;
  std::size_t clusters = 0;
};

Row evaluate(const Instance& instance, const Outcome& outcome, const std::vector<Objective>& objectives) {
  Row row;
  for (Objective o : objectives) row.stability.emplace(o, stability_report(instance.space, outcome.clustering, o));
  if (outcome.center_points) {
    row.cost = cost_report(instance.space, outcome.clustering, std::span<const std::size_t>(*outcome.center_points));
  } else {
    row.cost = cost_report(instance.space, outcome.clustering);
  }
  if (outcome.center_vectors) {
    row.cost.k_center_cost = k_center_cost(instance.space, outcome.clustering, *outcome.center_vectors);
  }
  row.clusters = outcome.clustering.k();
  return row;
}

// Field-wise mean; per-point vectors are dropped.
Row mean_of(const std::vector<Row>& rows) {
  Row mean;
  const double count = static_cast<double>(rows.size());
  bool all_centers = true;
  double k_center = 0.0;
  for (const Row& r : rows) {
    for (const auto& [o, rep] : r.stability) {
      StabilityReport& acc = mean.stability[o];
      acc.objective = o;
      acc.max_vi += rep.max_vi / count;
      acc.mean_vi += rep.mean_vi / count;
    }
    mean.cost.avg_within_cost += r.cost.avg_within_cost / count;
    mean.cost.k_means_cost += r.cost.k_means_cost / count;
    if (r.cost.k_center_cost) {
      k_center += *r.cost.k_center_cost / count;
    } else {
      all_centers = false;
    }
  }
  if (all_centers && !rows.empty()) mean.cost.k_center_cost = k_center;
  return mean;
}

double mean_unstable(const std::vector<Row>& rows, Objective o) {
  double total = 0.0;
  for (const Row& r : rows) total += static_cast<double>(r.stability.at(o).num_unstable);
  return total / static_cast<double>(rows.size());
}

json row_json(const Row& row, const std::vector<Objective>& objectives, std::optional<std::vector<double>> unstable,
              bool per_point) {
  json j;
  json by_objective = json::object();
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    const StabilityReport& rep = row.stability.at(objectives[i]);
    json entry{{"max_violation", number(rep.max_vi)}, {"mean_violation", number(rep.mean_vi)}};
    entry["num_unstable"] = unstable ? json(number((*unstable)[i])) : json(rep.num_unstable);
    by_objective[to_string(objectives[i])] = entry;
  }
  const json& primary = by_objective[to_string(objectives.front())];
  j["max_violation"] = primary["max_violation"];
  j["mean_violation"] = primary["mean_violation"];
  j["num_unstable"] = primary["num_unstable"];
  j["objectives"] = by_objective;
  j["avg_within_cost"] = number(row.cost.avg_within_cost);
  j["k_center_cost"] = row.cost.k_center_cost ? number(*row.cost.k_center_cost) : json(nullptr);
  j["k_means_cost"] = number(row.cost.k_means_cost);
  if (row.clusters) j["clusters"] = row.clusters;
  if (per_point) {
    json pp = json::object();
    for (const auto& [o, rep] : row.stability) {
      json values = json::array();
      for (double v : rep.vi) values.push_back(number(v));
      pp[to_string(o)] = values;
    }
    j["per_point_violations"] = pp;
  }
  return j;
}

json instance_json(const Instance& instance) {
  json j{{"kind", to_string(instance.spec.kind)},
         {"metric", to_string(instance.space.kind())},
         {"n", instance.space.size()},
         {"provenance", instance.provenance}};
  if (instance.points) j["dim"] = instance.space.dimension();
  if (!instance.spec.path.empty()) j["path"] = instance.spec.path.string();
  json params = json::object();
  for (const auto& [key, value] : instance.spec.params) params[key] = value;
  j["params"] = params;
  return j;
}

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' is missing or has the wrong type");
  }
}

std::size_t get_count(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(std::string("config key '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string csv_cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Carve:
      return "carve";
    case Algorithm::MinIp:
      return "minip";
    case Algorithm::MaxIp:
      return "maxip";
    case Algorithm::KMeansPP:
      return "kmeanspp";
    case Algorithm::RandomColor:
      return "random-color";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::Carve, Algorithm::MinIp, Algorithm::MaxIp, Algorithm::KMeansPP, Algorithm::RandomColor}) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

bool is_stochastic(Algorithm algorithm) {
  return algorithm == Algorithm::KMeansPP || algorithm == Algorithm::RandomColor;
}

RunConfig parse_run_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"instance", "algorithms", "k",         "k_min",     "k_max",
                                           "objectives", "seeds",    "seed",      "repeats",   "first",
                                           "max_iters",  "per_point", "jobs",     "oracle_max_n"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
  }

  RunConfig config;
  if (!j.contains("instance") || !j["instance"].is_object()) throw ConfigError("config needs an 'instance' object");
  const json& inst = j["instance"];
  const auto kind = parse_instance_kind(get_as<std::string>(inst, "kind"));
  if (!kind) throw ConfigError("unknown instance kind '" + inst["kind"].get<std::string>() + "'");
  config.instance.kind = *kind;
  if (inst.contains("path")) config.instance.path = get_as<std::string>(inst, "path");
  const bool file_backed = *kind == InstanceKind::CsvPoints || *kind == InstanceKind::MatrixFile ||
                           *kind == InstanceKind::GraphFile;
  if (file_backed && config.instance.path.empty()) {
    throw ConfigError(std::string("instance kind ") + to_string(*kind) + " needs a path");
  }
  if (inst.contains("params")) {
    if (!inst["params"].is_object()) throw ConfigError("instance params must be an object");
    for (const auto& [key, value] : inst["params"].items()) {
      if (!value.is_number()) throw ConfigError("instance parameter '" + key + "' must be numeric");
      config.instance.params[key] = value.get<double>();
    }
  }
  if (inst.contains("header")) {
    const auto mode = parse_header_mode(get_as<std::string>(inst, "header"));
    if (!mode) throw ConfigError("header must be auto, yes or no");
    config.instance.csv.header = *mode;
  }
  if (inst.contains("drop_non_numeric")) config.instance.csv.drop_non_numeric = get_as<bool>(inst, "drop_non_numeric");
  if (inst.contains("normalize")) config.instance.csv.normalize = get_as<bool>(inst, "normalize");
  if (inst.contains("columns")) config.instance.csv.columns = get_as<std::vector<std::size_t>>(inst, "columns");

  if (j.contains("algorithms")) {
    config.algorithms.clear();
    for (const auto& name : get_as<std::vector<std::string>>(j, "algorithms")) {
      const auto a = parse_algorithm(name);
      if (!a) throw ConfigError("unknown algorithm '" + name + "'");
      config.algorithms.push_back(*a);
    }
    if (config.algorithms.empty()) throw ConfigError("at least one algorithm is required");
  }
  if (j.contains("k")) config.k = get_count(j, "k");
  if (j.contains("k_min")) config.k_min = get_count(j, "k_min");
  if (j.contains("k_max")) config.k_max = get_count(j, "k_max");
  if (j.contains("objectives")) {
    config.objectives.clear();
    for (const auto& name : get_as<std::vector<std::string>>(j, "objectives")) {
      const auto o = parse_objective(name);
      if (!o) throw ConfigError("unknown objective '" + name + "'");
      if (std::find(config.objectives.begin(), config.objectives.end(), *o) == config.objectives.end()) {
        config.objectives.push_back(*o);
      }
    }
    if (config.objectives.empty()) throw ConfigError("at least one objective is required");
  }
  if (j.contains("seeds")) {
    config.seeds = get_as<std::vector<std::uint64_t>>(j, "seeds");
    if (config.seeds.empty()) throw ConfigError("seed list is empty");
  } else {
    const std::uint64_t base = j.contains("seed") ? get_count(j, "seed") : 0;
    const std::size_t repeats = j.contains("repeats") ? get_count(j, "repeats") : 1;
    if (repeats == 0) throw ConfigError("repeats must be at least 1");
    config.seeds.clear();
    for (std::size_t i = 0; i < repeats; ++i) config.seeds.push_back(base + i);
  }
  if (j.contains("first")) config.first = get_count(j, "first");
  if (j.contains("max_iters")) config.max_iters = get_count(j, "max_iters");
  if (j.contains("per_point")) config.per_point = get_as<bool>(j, "per_point");
  if (j.contains("jobs")) config.jobs = std::max<std::size_t>(1, get_count(j, "jobs"));
  if (j.contains("oracle_max_n")) config.oracle_max_n = get_count(j, "oracle_max_n");
  return config;
}

json to_json(const RunConfig& config) {
  json inst{{"kind", to_string(config.instance.kind)}};
  if (!config.instance.path.empty()) inst["path"] = config.instance.path.string();
  json params = json::object();
  for (const auto& [key, value] : config.instance.params) params[key] = value;
  inst["params"] = params;
  if (config.instance.kind == InstanceKind::CsvPoints) {
    const char* header = config.instance.csv.header == HeaderMode::Auto  ? "auto"
                         : config.instance.csv.header == HeaderMode::Yes ? "yes"
                                                                         : "no";
    inst["header"] = header;
    inst["drop_non_numeric"] = config.instance.csv.drop_non_numeric;
    inst["normalize"] = config.instance.csv.normalize;
    inst["columns"] = config.instance.csv.columns;
  }

  json j{{"instance", inst}};
  json algorithms = json::array();
  for (Algorithm a : config.algorithms) algorithms.push_back(to_string(a));
  j["algorithms"] = algorithms;
  if (config.k) j["k"] = *config.k;
  if (config.k_min) j["k_min"] = *config.k_min;
  if (config.k_max) j["k_max"] = *config.k_max;
  json objectives = json::array();
  for (Objective o : config.objectives) objectives.push_back(to_string(o));
  j["objectives"] = objectives;
  j["seeds"] = config.seeds;
  j["first"] = config.first;
  j["max_iters"] = config.max_iters;
  j["per_point"] = config.per_point;
  j["jobs"] = config.jobs;
  j["oracle_max_n"] = config.oracle_max_n;
  return j;
}

void validate_compatibility(const RunConfig& config) {
  const MetricKind metric = metric_of(config.instance.kind);
  for (Algorithm a : config.algorithms) {
    if (a == Algorithm::KMeansPP && metric != MetricKind::Points) {
      throw ConfigError("k-means++ requires coordinates, but instance kind " +
                        std::string(to_string(config.instance.kind)) + " yields a " + to_string(metric) + " metric");
    }
    if (a == Algorithm::RandomColor && metric != MetricKind::Graph) {
      throw ConfigError("random coloring requires a graph metric, but instance kind " +
                        std::string(to_string(config.instance.kind)) + " yields a " + to_string(metric) + " metric");
    }
  }
}

json run_report(const RunConfig& config) {
  validate_compatibility(config);
  if (!config.k || *config.k == 0) throw ConfigError("run needs k >= 1");
  const std::size_t k = *config.k;
  const Algorithm algorithm = config.algorithms.front();
  const auto start = Clock::now();

  const Instance instance = build_instance(config.instance);
  json report;
  report["version"] = kVersion;
  report["config"] = to_json(config);
  report["instance"] = instance_json(instance);
  report["algorithm"] = to_string(algorithm);
  report["k"] = k;
  report["objective"] = to_string(config.objectives.front());

  json body;
  if (is_stochastic(algorithm)) {
    std::vector<Row> rows;
    json per_seed = json::array();
    for (std::uint64_t seed : config.seeds) {
      rows.push_back(evaluate(instance, run_algorithm(instance, algorithm, k, seed, config), config.objectives));
      json row = row_json(rows.back(), config.objectives, std::nullopt, config.per_point);
      row["seed"] = seed;
      per_seed.push_back(row);
    }
    std::vector<double> unstable;
    for (Objective o : config.objectives) unstable.push_back(mean_unstable(rows, o));
    body = row_json(mean_of(rows), config.objectives, unstable, false);
    body.erase("clusters");
    report["per_seed"] = per_seed;
    report["mean"] = body;
    report["seeds"] = config.seeds;
  } else {
    const Row row = evaluate(instance, run_algorithm(instance, algorithm, k, 0, config), config.objectives);
    body = row_json(row, config.objectives, std::nullopt, config.per_point);
    report["seeds"] = json::array();
  }
  for (auto& [key, value] : body.items()) report[key] = value;
  report["runtime_ms"] = elapsed_ms(start);
  return report;
}

std::string sweep_csv(const RunConfig& config) {
  validate_compatibility(config);
  std::size_t k_min = 0, k_max = 0;
  if (config.k_min || config.k_max) {
    if (!config.k_min || !config.k_max) throw ConfigError("sweep needs both k_min and k_max");
    k_min = *config.k_min;
    k_max = *config.k_max;
  } else if (config.k) {
    k_min = k_max = *config.k;
  } else {
    throw ConfigError("sweep needs a k range");
  }
  if (k_min == 0) throw ConfigError("sweep needs k_min >= 1");

  std::ostringstream out;
  out << "# ipstab " << kVersion << " sweep\n"
      << "# columns: k, algorithm, objective, max_vi (max violation), mean_vi (mean violation),\n"
      << "#   num_unstable (points with violation > 1; seed mean for stochastic algorithms),\n"
      << "#   avg_within_cost, k_center_cost (empty without centers), k_means_cost,\n"
      << "#   wall_ms (mean wall time per run), error (empty on success)\n"
      << "k,algorithm,objective,max_vi,mean_vi,num_unstable,avg_within_cost,k_center_cost,k_means_cost,wall_ms,error\n";
  if (k_min > k_max) return out.str();

  const Instance instance = build_instance(config.instance);

  struct Task {
    std::size_t k;
    Algorithm algorithm;
    std::optional<Row> row;
    std::vector<double> unstable;
    std::string error;
    double wall_ms = 0.0;
  };
  std::vector<Task> tasks;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    for (Algorithm a : config.algorithms) tasks.push_back(Task{k, a, std::nullopt, {}, {}, 0.0});
  }

  auto work = [&](Task& task) {
    try {
      const std::vector<std::uint64_t> seeds =
          is_stochastic(task.algorithm) ? config.seeds : std::vector<std::uint64_t>{0};
      std::vector<Row> rows;
      const auto start = Clock::now();
      for (std::uint64_t seed : seeds) {
        rows.push_back(evaluate(instance, run_algorithm(instance, task.algorithm, task.k, seed, config),
                                config.objectives));
      }
      task.wall_ms = elapsed_ms(start) / static_cast<double>(seeds.size());
      for (Objective o : config.objectives) task.unstable.push_back(mean_unstable(rows, o));
      task.row = rows.size() == 1 ? std::move(rows.front()) : mean_of(rows);
    } catch (const std::exception& e) {
      task.error = e.what();
    }
  };

  const std::size_t workers = std::min(config.jobs, tasks.size());
  if (workers <= 1) {
    for (Task& t : tasks) work(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) work(tasks[i]);
      });
    }
    for (auto& t : pool) t.join();
  }

  for (const Task& task : tasks) {
    for (std::size_t i = 0; i < config.objectives.size(); ++i) {
      const Objective o = config.objectives[i];
      out << task.k << ',' << to_string(task.algorithm) << ',' << to_string(o) << ',';
      if (!task.row) {
        out << ",,,,,,," << sanitize(task.error) << '\n';
        continue;
      }
      const StabilityReport& rep = task.row->stability.at(o);
      out << csv_cell(rep.max_vi) << ',' << csv_cell(rep.mean_vi) << ',' << csv_cell(task.unstable[i]) << ','
          << csv_cell(task.row->cost.avg_within_cost) << ','
          << (task.row->cost.k_center_cost ? csv_cell(*task.row->cost.k_center_cost) : std::string()) << ','
          << csv_cell(task.row->cost.k_means_cost) << ',' << csv_cell(task.wall_ms) << ",\n";
    }
  }
  return out.str();
}

json oracle_report(const RunConfig& config) {
  if (!config.k || *config.k == 0) throw ConfigError("oracle needs k >= 1");
  const std::size_t k = *config.k;
  const auto start = Clock::now();
  const Instance instance = build_instance(config.instance);
  const std::size_t n = instance.space.size();
  if (n > config.oracle_max_n) {
    throw ResourceError("brute-force oracle refuses n = " + std::to_string(n) + " (limit " +
                        std::to_string(config.oracle_max_n) + ")");
  }

  std::vector<Algorithm> contenders{Algorithm::Carve, Algorithm::MinIp, Algorithm::MaxIp};
  if (instance.space.has_coordinates()) contenders.push_back(Algorithm::KMeansPP);

  json by_objective = json::object();
  for (Objective o : config.objectives) {
    const OracleResult result = optimal_alpha(instance.space, k, o, config.oracle_max_n);
    json entry{{"alpha_star", number(result.alpha_star)},
               {"best_clustering", result.best_clustering.assignment()},
               {"partitions_examined", result.partitions_examined}};
    json algorithms = json::object();
    for (Algorithm a : contenders) {
      try {
        const Outcome outcome = run_algorithm(instance, a, k, config.seeds.front(), config);
        algorithms[to_string(a)] = json{{"max_violation", number(stability_report(instance.space, outcome.clustering, o).max_vi)}};
      } catch (const Error& e) {
        algorithms[to_string(a)] = json{{"error", e.what()}};
      }
    }
    entry["algorithms"] = algorithms;
    by_objective[to_string(o)] = entry;
  }

  json report;
  report["version"] = kVersion;
  report["config"] = to_json(config);
  report["instance"] = instance_json(instance);
  report["k"] = k;
  report["objective"] = to_string(config.objectives.front());
  for (auto& [key, value] : by_objective[to_string(config.objectives.front())].items()) report[key] = value;
  report["objectives"] = by_objective;
  report["runtime_ms"] = elapsed_ms(start);
  return report;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace ipstab
