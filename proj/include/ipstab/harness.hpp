#ifndef IPSTAB_HARNESS_HPP
#define IPSTAB_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipstab/datagen.hpp"
#include "ipstab/stability.hpp"
#include "json.hpp"

namespace ipstab {

inline constexpr const char* kVersion = "0.1.0";

enum class Algorithm { Carve, MinIp, MaxIp, KMeansPP, RandomColor };

const char* to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
bool is_stochastic(Algorithm algorithm);

// One experiment: an instance, algorithms, a k or k-range, objectives, seeds.
//
// JSON form (all keys but "instance" optional):
//   {"instance": {"kind": "random-euclidean", "params": {"n": 100},
//                 "path": "...", "header": "auto", "drop_non_numeric": false,
//                 "columns": [0, 2], "normalize": false},
//    "algorithms": ["carve"], "k": 5, "k_min": 2, "k_max": 25,
//    "objectives": ["avg"], "seeds": [0, 1], "first": 0, "max_iters": 300,
//    "per_point": false, "jobs": 1, "oracle_max_n": 14}
struct RunConfig {
  InstanceSpec instance;
  std::vector<Algorithm> algorithms{Algorithm::Carve};
  std::optional<std::size_t> k;
  std::optional<std::size_t> k_min;
  std::optional<std::size_t> k_max;
  std::vector<Objective> objectives{Objective::Average};
  std::vector<std::uint64_t> seeds{0};
  std::size_t first = 0;
  std::size_t max_iters = 300;
  bool per_point = false;
  std::size_t jobs = 1;
  std::size_t oracle_max_n = 14;
};

// Throws ConfigError on unknown names, wrong types or missing keys.
RunConfig parse_run_config(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& config);

// Checks algorithm/metric compatibility (k-means++ needs coordinates, random
// coloring needs a graph) before any data is touched.
void validate_compatibility(const RunConfig& config);

// Runs config.algorithms.front() at config.k. Stochastic algorithms run once
// per seed; the top-level numbers are then seed means and "per_seed" holds the
// individual runs.
nlohmann::json run_report(const RunConfig& config);

// Plot-ready CSV: one row per (k, algorithm, objective), in that order, with
// '#' comment lines describing the columns. Failing rows carry an error
// message and the sweep continues.
std::string sweep_csv(const RunConfig& config);

// Brute-force optimum next to the built-in algorithms on a small instance.
nlohmann::json oracle_report(const RunConfig& config);

// Serialization used for every report: sorted keys, two-space indent,
// non-finite numbers written as the strings "inf" / "nan".
std::string dump_report(const nlohmann::json& report);

}  // namespace ipstab

#endif  // IPSTAB_HARNESS_HPP
