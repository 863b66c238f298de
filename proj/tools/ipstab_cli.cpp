// ipstab: command-line front end over the C API.
//
//   ipstab run    --gen random-euclidean --gen-args n=100,dim=2 --algo carve --k 5
//   ipstab sweep  --input data.csv --algo minip --algo kmeanspp --k-min 2 --k-max 25
//   ipstab oracle --gen separated-blobs --gen-args n_per_blob=4 --k 2
//
// Exit codes: 0 ok, 1 configuration, 2 input data, 3 resource guard, 4 internal.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipstab/ipstab.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct ConfigFailure {
  std::string message;
};

struct Options {
  std::string config_path;
  std::string input;
  std::string metric = "euclidean";
  std::string gen;
  std::string gen_args;
  std::string header;
  bool drop_non_numeric = false;
  std::vector<std::size_t> columns;
  bool normalize = false;

  std::vector<std::string> algos;
  std::optional<std::size_t> k, k_min, k_max;
  std::vector<std::string> objectives;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  std::optional<std::size_t> repeats;
  std::optional<std::size_t> first, max_iters, jobs, max_n;
  bool per_point = false;
  std::string out;
};

int exit_code(ipstab_status status) {
  switch (status) {
    case IPSTAB_OK:
      return 0;
    case IPSTAB_E_CONFIG:
      return 1;
    case IPSTAB_E_INPUT:
    case IPSTAB_E_DEGENERATE:
      return 2;
    case IPSTAB_E_RESOURCE:
      return 3;
    default:
      return 4;
  }
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigFailure{std::string("bad ") + what + " '" + text + "'"};
  }
  return value;
}

// "A..B" (inclusive) or a comma-separated list.
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_u64(text.substr(0, dots), "seed range");
    const auto hi = parse_u64(text.substr(dots + 2), "seed range");
    if (lo > hi) throw ConfigFailure{"seed range " + text + " is empty"};
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    seeds.push_back(parse_u64(text.substr(start, comma - start), "seed"));
    start = comma + 1;
  }
  return seeds;
}

std::string file_kind(const std::string& metric) {
  if (metric == "euclidean") return "csv-points";
  if (metric == "matrix") return "matrix-file";
  if (metric == "graph") return "graph-file";
  throw ConfigFailure{"--metric must be euclidean, matrix or graph (got '" + metric + "')"};
}

json build_config(const Options& o) {
  json config = json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw ConfigFailure{"cannot open config file " + o.config_path};
    try {
      config = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigFailure{o.config_path + ": " + e.what()};
    }
  }

  if (!o.input.empty() && !o.gen.empty()) throw ConfigFailure{"--input and --gen are mutually exclusive"};
  if (!o.input.empty() || !o.gen.empty()) {
    json inst = json::object();
    if (!o.input.empty()) {
      inst["kind"] = file_kind(o.metric);
      inst["path"] = o.input;
    } else {
      inst["kind"] = o.gen;
    }
    json params = json::object();
    if (!o.gen_args.empty()) {
      std::size_t start = 0;
      while (start < o.gen_args.size()) {
        const auto comma = std::min(o.gen_args.find(',', start), o.gen_args.size());
        const std::string pair = o.gen_args.substr(start, comma - start);
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigFailure{"bad --gen-args entry '" + pair + "'"};
        try {
          std::size_t used = 0;
          const std::string value = pair.substr(eq + 1);
          params[pair.substr(0, eq)] = std::stod(value, &used);
          if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
          throw ConfigFailure{"bad --gen-args value in '" + pair + "'"};
        }
        start = comma + 1;
      }
    }
    inst["params"] = params;
    config["instance"] = inst;
  } else if (!config.contains("instance")) {
    throw ConfigFailure{"an instance is required: --input PATH or --gen KIND"};
  }

  json& inst = config["instance"];
  if (!o.header.empty()) inst["header"] = o.header;
  if (o.drop_non_numeric) inst["drop_non_numeric"] = true;
  if (o.normalize) inst["normalize"] = true;
  if (!o.columns.empty()) inst["columns"] = o.columns;

  if (!o.algos.empty()) config["algorithms"] = o.algos;
  if (o.k) config["k"] = *o.k;
  if (o.k_min) config["k_min"] = *o.k_min;
  if (o.k_max) config["k_max"] = *o.k_max;
  if (!o.objectives.empty()) config["objectives"] = o.objectives;
  if (!o.seeds.empty() && (o.seed || o.repeats)) {
    throw ConfigFailure{"--seeds cannot be combined with --seed or --repeats"};
  }
  if (!o.seeds.empty()) {
    config["seeds"] = parse_seeds(o.seeds);
  } else if (o.seed || o.repeats) {
    config.erase("seeds");
    if (o.seed) config["seed"] = *o.seed;
    if (o.repeats) config["repeats"] = *o.repeats;
  }
  if (o.first) config["first"] = *o.first;
  if (o.max_iters) config["max_iters"] = *o.max_iters;
  if (o.jobs) config["jobs"] = *o.jobs;
  if (o.per_point) config["per_point"] = true;

  if (o.max_n) {
    config["oracle_max_n"] = *o.max_n;
  } else if (const char* env = std::getenv("IPSTAB_MAX_N"); env && *env) {
    config["oracle_max_n"] = parse_u64(env, "IPSTAB_MAX_N");
  }
  return config;
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file || !file.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    std::cerr << "error: cannot write " << out << "\n";
    return 2;
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "JSON config file; flags override its keys");
  cmd->add_option("--input", o.input, "Data file (CSV points, CSV matrix or edge list)");
  cmd->add_option("--metric", o.metric, "Metric of --input: euclidean, matrix or graph")
      ->check(CLI::IsMember({"euclidean", "matrix", "graph"}));
  cmd->add_option("--gen", o.gen, "Generated instance kind (random-euclidean, random-tree, star-path, "
                                   "kmeanspp-hard, separated-blobs)");
  cmd->add_option("--gen-args", o.gen_args, "Generator parameters, e.g. n=100,dim=2,seed=1");
  cmd->add_option("--header", o.header, "CSV header handling: auto, yes or no")
      ->check(CLI::IsMember({"auto", "yes", "no"}));
  cmd->add_flag("--drop-non-numeric", o.drop_non_numeric, "Drop CSV columns with non-numeric cells");
  cmd->add_option("--columns", o.columns, "Only read these 0-based CSV columns")->delimiter(',');
  cmd->add_flag("--normalize", o.normalize, "Min-max scale each CSV column to [0, 1]");

  cmd->add_option("--algo", o.algos, "carve, minip, maxip, kmeanspp or random-color (repeatable)")
      ->check(CLI::IsMember({"carve", "minip", "maxip", "kmeanspp", "random-color"}));
  cmd->add_option("--k", o.k, "Number of clusters");
  cmd->add_option("--objective", o.objectives, "avg, min or max (repeatable)")
      ->check(CLI::IsMember({"avg", "min", "max", "average", "minimum", "maximum"}));
  cmd->add_option("--seed", o.seed, "Seed for stochastic algorithms (base seed with --repeats)");
  cmd->add_option("--seeds", o.seeds, "Seed range A..B (inclusive) or list a,b,c");
  cmd->add_option("--repeats", o.repeats, "Number of consecutive seeds starting at --seed");
  cmd->add_option("--first", o.first, "First center of the greedy k-center pass");
  cmd->add_option("--max-iters", o.max_iters, "Lloyd iteration cap for k-means++");
  cmd->add_option("--out", o.out, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Individually-preference stable clustering experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ipstab_version());

  Options o;
  auto* run = app.add_subcommand("run", "Run one algorithm and write a JSON report");
  add_common(run, o);
  run->add_flag("--per-point", o.per_point, "Include every point's violation");

  auto* sweep = app.add_subcommand("sweep", "Sweep k and write a CSV table");
  add_common(sweep, o);
  sweep->add_option("--k-min", o.k_min, "Smallest k");
  sweep->add_option("--k-max", o.k_max, "Largest k");
  sweep->add_option("--jobs", o.jobs, "Parallel rows");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum on a small instance");
  add_common(oracle, o);
  oracle->add_option("--max-n", o.max_n, "Size guard (also IPSTAB_MAX_N)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string config_text;
  try {
    config_text = build_config(o).dump();
  } catch (const ConfigFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return 1;
  }

  char* output = nullptr;
  ipstab_status status;
  if (run->parsed()) {
    status = ipstab_run_json(config_text.c_str(), &output);
  } else if (sweep->parsed()) {
    status = ipstab_sweep_csv(config_text.c_str(), &output);
  } else {
    status = ipstab_oracle_json(config_text.c_str(), &output);
  }
  if (status != IPSTAB_OK) {
    std::cerr << "error (" << ipstab_status_name(status) << "): " << ipstab_last_error() << "\n";
    return exit_code(status);
  }
  const std::string text(output);
  ipstab_string_free(output);
  return emit(text, o.out);
}
