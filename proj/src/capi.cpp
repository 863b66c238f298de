#include "ipstab/ipstab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "ipstab/baselines.hpp"
#include "ipstab/carve.hpp"
#include "ipstab/error.hpp"
#include "ipstab/harness.hpp"
#include "ipstab/minmax.hpp"
#include "ipstab/oracle.hpp"
#include "ipstab/stability.hpp"

struct ipstab_space {
  ipstab::MetricSpace space;
};

namespace {

thread_local std::string last_error;

ipstab_status fail(ipstab_status status, const char* message) {
  last_error = message;
  return status;
}

template <typename F>
ipstab_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return IPSTAB_OK;
  } catch (const ipstab::DegenerateInputError& e) {
    return fail(IPSTAB_E_DEGENERATE, e.what());
  } catch (const ipstab::InputError& e) {
    return fail(IPSTAB_E_INPUT, e.what());
  } catch (const ipstab::ConfigError& e) {
    return fail(IPSTAB_E_CONFIG, e.what());
  } catch (const ipstab::ResourceError& e) {
    return fail(IPSTAB_E_RESOURCE, e.what());
  } catch (const ipstab::ContractError& e) {
    return fail(IPSTAB_E_CONTRACT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(IPSTAB_E_CONFIG, e.what());
  } catch (const std::bad_alloc&) {
    return fail(IPSTAB_E_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(IPSTAB_E_INTERNAL, e.what());
  } catch (...) {
    return fail(IPSTAB_E_INTERNAL, "unknown exception");
  }
}

std::optional<ipstab::Objective> objective_of(ipstab_objective objective) {
  switch (objective) {
    case IPSTAB_AVERAGE:
      return ipstab::Objective::Average;
    case IPSTAB_MINIMUM:
      return ipstab::Objective::Minimum;
    case IPSTAB_MAXIMUM:
      return ipstab::Objective::Maximum;
  }
  return std::nullopt;
}

void write_labels(const ipstab::Clustering& clustering, size_t* labels) {
  const auto& a = clustering.assignment();
  std::copy(a.begin(), a.end(), labels);
}

ipstab::Clustering read_labels(const ipstab_space* space, const size_t* labels, size_t k) {
  return ipstab::Clustering(std::vector<std::size_t>(labels, labels + space->space.size()), k);
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

ipstab_status null_argument() { return fail(IPSTAB_E_ARGUMENT, "null pointer argument"); }

ipstab::RunConfig config_from(const char* text) {
  return ipstab::parse_run_config(nlohmann::json::parse(text));
}

}  // namespace

extern "C" {

const char* ipstab_version(void) { return ipstab::kVersion; }

const char* ipstab_last_error(void) { return last_error.c_str(); }

const char* ipstab_status_name(ipstab_status status) {
  switch (status) {
    case IPSTAB_OK:
      return "ok";
    case IPSTAB_E_INPUT:
      return "input error";
    case IPSTAB_E_DEGENERATE:
      return "degenerate input";
    case IPSTAB_E_CONFIG:
      return "configuration error";
    case IPSTAB_E_RESOURCE:
      return "resource limit";
    case IPSTAB_E_CONTRACT:
      return "contract violation";
    case IPSTAB_E_ARGUMENT:
      return "invalid argument";
    case IPSTAB_E_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void ipstab_string_free(char* text) { std::free(text); }

ipstab_status ipstab_space_from_points(const double* coords, size_t n, size_t dim, ipstab_space** out) {
  if (!out || (!coords && n * dim != 0)) return null_argument();
  *out = nullptr;
  return guarded([&] {
    ipstab::PointSet points(n, ipstab::Point(dim));
    for (size_t i = 0; i < n; ++i) std::copy(coords + i * dim, coords + (i + 1) * dim, points[i].begin());
    *out = new ipstab_space{ipstab::MetricSpace::from_points(points)};
  });
}

ipstab_status ipstab_space_from_matrix(const double* matrix, size_t n, ipstab_space** out) {
  if (!out || (!matrix && n != 0)) return null_argument();
  *out = nullptr;
  return guarded([&] {
    std::vector<std::vector<double>> rows(n);
    for (size_t i = 0; i < n; ++i) rows[i].assign(matrix + i * n, matrix + (i + 1) * n);
    *out = new ipstab_space{ipstab::MetricSpace::from_matrix(rows)};
  });
}

ipstab_status ipstab_space_from_graph(size_t n, const size_t* edges, size_t m, ipstab_space** out) {
  if (!out || (!edges && m != 0)) return null_argument();
  *out = nullptr;
  return guarded([&] {
    std::vector<ipstab::Edge> list(m);
    for (size_t e = 0; e < m; ++e) list[e] = {edges[2 * e], edges[2 * e + 1]};
    *out = new ipstab_space{ipstab::MetricSpace::from_graph(n, list)};
  });
}

void ipstab_space_free(ipstab_space* space) { delete space; }

size_t ipstab_space_size(const ipstab_space* space) { return space ? space->space.size() : 0; }

ipstab_status ipstab_space_distance(const ipstab_space* space, size_t i, size_t j, double* out) {
  if (!space || !out) return null_argument();
  if (i >= space->space.size() || j >= space->space.size()) {
    return fail(IPSTAB_E_CONTRACT, "point index out of range");
  }
  *out = space->space.distance(i, j);
  return IPSTAB_OK;
}

ipstab_status ipstab_space_ball_size(const ipstab_space* space, size_t center, double radius, size_t* out) {
  if (!space || !out) return null_argument();
  if (center >= space->space.size()) return fail(IPSTAB_E_CONTRACT, "center index out of range");
  return guarded([&] { *out = space->space.ball_size(center, radius); });
}

ipstab_status ipstab_ball_carving(const ipstab_space* space, double r, size_t* labels, size_t* num_clusters) {
  if (!space || !labels) return null_argument();
  return guarded([&] {
    const auto result = ipstab::ball_carving(space->space, r);
    write_labels(result.clustering, labels);
    if (num_clusters) *num_clusters = result.clustering.k();
  });
}

ipstab_status ipstab_ip_clustering(const ipstab_space* space, size_t k, size_t* labels) {
  if (!space || !labels) return null_argument();
  return guarded([&] { write_labels(ipstab::ip_clustering(space->space, k), labels); });
}

ipstab_status ipstab_min_ip_clustering(const ipstab_space* space, size_t k, size_t* labels) {
  if (!space || !labels) return null_argument();
  return guarded([&] { write_labels(ipstab::min_ip_clustering(space->space, k), labels); });
}

ipstab_status ipstab_max_ip_clustering(const ipstab_space* space, size_t k, size_t* labels) {
  if (!space || !labels) return null_argument();
  return guarded([&] { write_labels(ipstab::max_ip_clustering(space->space, k), labels); });
}

ipstab_status ipstab_kmeans_pp(const ipstab_space* space, size_t k, uint64_t seed, size_t max_iters, size_t* labels) {
  if (!space || !labels) return null_argument();
  return guarded([&] { write_labels(ipstab::kmeans_pp(space->space, k, seed, max_iters).clustering, labels); });
}

ipstab_status ipstab_random_coloring(const ipstab_space* space, size_t k, uint64_t seed, size_t* labels) {
  if (!space || !labels) return null_argument();
  return guarded([&] { write_labels(ipstab::random_coloring(space->space, k, seed), labels); });
}

ipstab_status ipstab_stability(const ipstab_space* space, const size_t* labels, size_t k, ipstab_objective objective,
                               ipstab_stability_summary* summary, double* per_point) {
  if (!space || !labels || !summary) return null_argument();
  const auto o = objective_of(objective);
  if (!o) return fail(IPSTAB_E_ARGUMENT, "unknown objective");
  return guarded([&] {
    const auto report = ipstab::stability_report(space->space, read_labels(space, labels, k), *o);
    summary->max_violation = report.max_vi;
    summary->mean_violation = report.mean_vi;
    summary->num_unstable = report.num_unstable;
    if (per_point) std::copy(report.vi.begin(), report.vi.end(), per_point);
  });
}

ipstab_status ipstab_costs(const ipstab_space* space, const size_t* labels, size_t k, ipstab_cost_summary* out) {
  if (!space || !labels || !out) return null_argument();
  return guarded([&] {
    const auto report = ipstab::cost_report(space->space, read_labels(space, labels, k));
    out->avg_within_cost = report.avg_within_cost;
    out->k_means_cost = report.k_means_cost;
  });
}

ipstab_status ipstab_optimal_alpha(const ipstab_space* space, size_t k, ipstab_objective objective, size_t max_n,
                                   double* alpha, size_t* best_labels) {
  if (!space || !alpha) return null_argument();
  const auto o = objective_of(objective);
  if (!o) return fail(IPSTAB_E_ARGUMENT, "unknown objective");
  return guarded([&] {
    const auto result = ipstab::optimal_alpha(space->space, k, *o, max_n);
    *alpha = result.alpha_star;
    if (best_labels) write_labels(result.best_clustering, best_labels);
  });
}

ipstab_status ipstab_run_json(const char* config_json, char** report_json) {
  if (!config_json || !report_json) return null_argument();
  *report_json = nullptr;
  return guarded([&] {
    *report_json = copy_string(ipstab::dump_report(ipstab::run_report(config_from(config_json))));
  });
}

ipstab_status ipstab_sweep_csv(const char* config_json, char** csv) {
  if (!config_json || !csv) return null_argument();
  *csv = nullptr;
  return guarded([&] { *csv = copy_string(ipstab::sweep_csv(config_from(config_json))); });
}

ipstab_status ipstab_oracle_json(const char* config_json, char** report_json) {
  if (!config_json || !report_json) return null_argument();
  *report_json = nullptr;
  return guarded([&] {
    *report_json = copy_string(ipstab::dump_report(ipstab::oracle_report(config_from(config_json))));
  });
}

}  // extern "C"
