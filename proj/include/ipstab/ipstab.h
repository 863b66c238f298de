/* C interface to the ipstab library.
 *
 * Every function returns an ipstab_status. On failure the message for the
 * calling thread is available from ipstab_last_error() until the next call
 * on that thread. Label arrays are caller-allocated with one entry per point;
 * labels are 0-based cluster ids. Strings returned through char** must be
 * released with ipstab_string_free().
 */
#ifndef IPSTAB_H
#define IPSTAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IPSTAB_BUILDING)
#    define IPSTAB_API __declspec(dllexport)
#  else
#    define IPSTAB_API __declspec(dllimport)
#  endif
#else
#  define IPSTAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ipstab_status {
  IPSTAB_OK = 0,
  IPSTAB_E_INPUT = 1,        /* malformed data, non-metric input, disconnected graph */
  IPSTAB_E_DEGENERATE = 2,   /* valid input the algorithm cannot handle (e.g. too few distinct points) */
  IPSTAB_E_CONFIG = 3,       /* bad options or incompatible algorithm/metric */
  IPSTAB_E_RESOURCE = 4,     /* instance too large for the requested computation */
  IPSTAB_E_CONTRACT = 5,     /* precondition violated by the caller */
  IPSTAB_E_ARGUMENT = 6,     /* null pointer or out-of-range enum */
  IPSTAB_E_INTERNAL = 7
} ipstab_status;

typedef enum ipstab_objective {
  IPSTAB_AVERAGE = 0,
  IPSTAB_MINIMUM = 1,
  IPSTAB_MAXIMUM = 2
} ipstab_objective;

typedef struct ipstab_space ipstab_space;

typedef struct ipstab_stability_summary {
  double max_violation;
  double mean_violation;
  size_t num_unstable;
} ipstab_stability_summary;

typedef struct ipstab_cost_summary {
  double avg_within_cost;
  double k_means_cost;
} ipstab_cost_summary;

IPSTAB_API const char* ipstab_version(void);
IPSTAB_API const char* ipstab_last_error(void);
IPSTAB_API const char* ipstab_status_name(ipstab_status status);
IPSTAB_API void ipstab_string_free(char* text);

/* Metric spaces. coords is row-major n x dim; matrix is row-major n x n;
 * edges holds m (u, v) pairs, 2m entries. */
IPSTAB_API ipstab_status ipstab_space_from_points(const double* coords, size_t n, size_t dim, ipstab_space** out);
IPSTAB_API ipstab_status ipstab_space_from_matrix(const double* matrix, size_t n, ipstab_space** out);
IPSTAB_API ipstab_status ipstab_space_from_graph(size_t n, const size_t* edges, size_t m, ipstab_space** out);
IPSTAB_API void ipstab_space_free(ipstab_space* space);

IPSTAB_API size_t ipstab_space_size(const ipstab_space* space);
IPSTAB_API ipstab_status ipstab_space_distance(const ipstab_space* space, size_t i, size_t j, double* out);
IPSTAB_API ipstab_status ipstab_space_ball_size(const ipstab_space* space, size_t center, double radius, size_t* out);

/* Clustering algorithms; each writes n labels. */
IPSTAB_API ipstab_status ipstab_ball_carving(const ipstab_space* space, double r, size_t* labels, size_t* num_clusters);
IPSTAB_API ipstab_status ipstab_ip_clustering(const ipstab_space* space, size_t k, size_t* labels);
IPSTAB_API ipstab_status ipstab_min_ip_clustering(const ipstab_space* space, size_t k, size_t* labels);
IPSTAB_API ipstab_status ipstab_max_ip_clustering(const ipstab_space* space, size_t k, size_t* labels);
IPSTAB_API ipstab_status ipstab_kmeans_pp(const ipstab_space* space, size_t k, uint64_t seed, size_t max_iters,
                                          size_t* labels);
IPSTAB_API ipstab_status ipstab_random_coloring(const ipstab_space* space, size_t k, uint64_t seed, size_t* labels);

/* Evaluation. per_point may be null; otherwise it receives n violations. */
IPSTAB_API ipstab_status ipstab_stability(const ipstab_space* space, const size_t* labels, size_t k,
                                          ipstab_objective objective, ipstab_stability_summary* summary,
                                          double* per_point);
IPSTAB_API ipstab_status ipstab_costs(const ipstab_space* space, const size_t* labels, size_t k,
                                      ipstab_cost_summary* out);

/* Exhaustive optimum over all k-partitions. best_labels may be null. */
IPSTAB_API ipstab_status ipstab_optimal_alpha(const ipstab_space* space, size_t k, ipstab_objective objective,
                                              size_t max_n, double* alpha, size_t* best_labels);

/* Experiment harness driven by a JSON config (see README). */
IPSTAB_API ipstab_status ipstab_run_json(const char* config_json, char** report_json);
IPSTAB_API ipstab_status ipstab_sweep_csv(const char* config_json, char** csv);
IPSTAB_API ipstab_status ipstab_oracle_json(const char* config_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* IPSTAB_H */
