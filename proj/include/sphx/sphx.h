#ifndef SPHX_SPHX_H
#define SPHX_SPHX_H

#include <stddef.h>
#include <stdint.h>

#if defined(SPHX_BUILDING_LIBRARY)
#define SPHX_API __attribute__((visibility("default")))
#else
#define SPHX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every fallible call returns one of these; on failure the
 * message is available from sphx_last_error() on the same thread. */
typedef enum sphx_status {
  SPHX_OK = 0,
  SPHX_ERR_INVALID_ARGUMENT = 1,
  SPHX_ERR_DOMAIN = 2,
  SPHX_ERR_DEGENERATE = 3,
  SPHX_ERR_UNBOUNDED = 4,
  SPHX_ERR_NUMERIC = 5,
  SPHX_ERR_IO = 6,
  SPHX_ERR_PARSE = 7,
  SPHX_ERR_INTERNAL = 99
} sphx_status;

SPHX_API const char* sphx_version(void);
SPHX_API const char* sphx_last_error(void);
SPHX_API const char* sphx_status_name(sphx_status status);

/* ---- spherical codes ---------------------------------------------------- */

typedef struct sphx_code sphx_code;

/* coords is row-major, count rows of dim entries; rows are normalized. */
SPHX_API sphx_status sphx_code_create(int dim, size_t count, const double* coords, sphx_code** out);
SPHX_API sphx_status sphx_code_load(const char* path, sphx_code** out);
SPHX_API sphx_status sphx_code_save(const sphx_code* code, const char* path);
/* Named Platonic solid: its vertex directions, or the tangency points of its
 * copy circumscribed about the unit sphere when tangency != 0. */
SPHX_API sphx_status sphx_code_solid(const char* name, int tangency, sphx_code** out);
SPHX_API void sphx_code_free(sphx_code* code);
SPHX_API size_t sphx_code_size(const sphx_code* code);
SPHX_API int sphx_code_dim(const sphx_code* code);
/* Writes size * dim doubles. */
SPHX_API sphx_status sphx_code_coords(const sphx_code* code, double* out);
SPHX_API double sphx_code_psi(const sphx_code* code);

/* ---- bounds --------------------------------------------------------------- */

typedef enum sphx_method { SPHX_METHOD_CLOSED_FORM = 0, SPHX_METHOD_QUADRATURE = 1, SPHX_METHOD_MONTE_CARLO = 2 } sphx_method;

typedef struct sphx_bound {
  double value;
  sphx_method method;
  double error_estimate;
  double implied_iq; /* 36 pi / value for the F^3/V^2 conjecture bounds, else 0 */
  long long floor_value;
} sphx_bound;

SPHX_API const char* sphx_method_name(sphx_method method);

SPHX_API sphx_status sphx_omega_n(int n, double* out);
SPHX_API sphx_status sphx_ft_packing_bound(int n, sphx_bound* out);
SPHX_API sphx_status sphx_ft_covering_bound(int n, sphx_bound* out);
SPHX_API sphx_status sphx_ft_code_bound(double phi, sphx_bound* out);
SPHX_API sphx_status sphx_ft_tammes_ceiling(int n, double* out);
SPHX_API sphx_status sphx_coxeter_bound(int n, double phi, sphx_bound* out);
SPHX_API sphx_status sphx_goldberg_bound(int faces, sphx_bound* out);
SPHX_API sphx_status sphx_ft_vertex_conjecture(int vertices, sphx_bound* out);
SPHX_API sphx_status sphx_ft_edge_conjecture(int faces, int vertices, int edges, sphx_bound* out);
SPHX_API sphx_status sphx_kappa(double d, int* out, double* real_out);

typedef struct sphx_kissing_table sphx_kissing_table;

SPHX_API sphx_status sphx_kissing_table_default(sphx_kissing_table** out);
SPHX_API sphx_status sphx_kissing_table_load(const char* path, sphx_kissing_table** out);
SPHX_API void sphx_kissing_table_free(sphx_kissing_table* table);
/* Dimensions in ascending order; returns the total count, writes up to cap. */
SPHX_API size_t sphx_kissing_table_dims(const sphx_kissing_table* table, int* out, size_t cap);
/* exact_out is 1 for exact values, 0 for upper bounds. */
SPHX_API sphx_status sphx_kissing_table_get(const sphx_kissing_table* table, int n, long long* k_out, int* exact_out);
SPHX_API sphx_status sphx_kbar(const sphx_kissing_table* table, int n, double* out);

/* ---- optimizer ------------------------------------------------------------ */

typedef enum sphx_mode {
  SPHX_MODE_FREE = 0,
  SPHX_MODE_ANTIPODAL = 1,
  SPHX_MODE_HEMISPHERE = 2,
  SPHX_MODE_MAX_CONTACTS = 3
} sphx_mode;

SPHX_API const char* sphx_mode_name(sphx_mode mode);

typedef struct sphx_optimizer_config {
  int restarts;
  int iterations_per_restart;
  uint64_t master_seed;
  const double* beta_schedule; /* softmin sharpness per stage */
  size_t beta_count;
  const double* step_schedule; /* step size per stage, same length */
  size_t step_count;
  double convergence_tol;
  double contact_tol;
  double search_contact_eps;
  int threads;
} sphx_optimizer_config;

/* Schedules point to static storage owned by the library. */
SPHX_API sphx_optimizer_config sphx_optimizer_config_default(void);

typedef struct sphx_result sphx_result;

typedef struct sphx_result_info {
  double psi;
  sphx_mode mode;
  int best_restart; /* -1 in max-contacts mode when the Tammes optimum won */
  int has_certificate;
  double certificate;
  double target;
  int feasible;
  double contact_distance;
  int contacts;
} sphx_result_info;

SPHX_API sphx_status sphx_tammes(int n, const sphx_optimizer_config* cfg, sphx_result** out);
SPHX_API sphx_status sphx_antipodal(int m, const sphx_optimizer_config* cfg, sphx_result** out);
SPHX_API sphx_status sphx_hemisphere(int count, double target, const sphx_optimizer_config* cfg, sphx_result** out);
/* distance may be NULL to search the contact distance. */
SPHX_API sphx_status sphx_max_contacts(int n, const double* distance, const sphx_optimizer_config* cfg,
                                       sphx_result** out);
SPHX_API sphx_status sphx_result_info_get(const sphx_result* result, sphx_result_info* out);
/* New handle owned by the caller. */
SPHX_API sphx_status sphx_result_code(const sphx_result* result, sphx_code** out);
SPHX_API void sphx_result_free(sphx_result* result);

/* ---- contact graphs ------------------------------------------------------- */

typedef struct sphx_graph sphx_graph;

typedef struct sphx_graph_info {
  int vertices;
  int edges;
  int connected;
  int faces; /* -1 when disconnected */
  double contact_distance;
  double tolerance;
  double min_edge_length;
  double max_edge_length;
  int maximal;
  int kappa;
  int irreducible_by_faces; /* -1 when faces are unavailable */
  int irreducible_by_count;
} sphx_graph_info;

SPHX_API sphx_status sphx_graph_build(const sphx_code* code, double tol, sphx_graph** out);
SPHX_API sphx_status sphx_graph_info_get(const sphx_graph* graph, sphx_graph_info* out);
/* Writes 2 * edges ints. */
SPHX_API sphx_status sphx_graph_edges(const sphx_graph* graph, int* out);
/* Maximality warning, or NULL. Valid until the graph is freed. */
SPHX_API const char* sphx_graph_warning(const sphx_graph* graph);
SPHX_API sphx_status sphx_graph_save(const sphx_graph* graph, const char* path);
SPHX_API void sphx_graph_free(sphx_graph* graph);

/* ---- circumscribed polyhedra --------------------------------------------- */

typedef struct sphx_mc_options {
  uint64_t seed;
  long long samples;
  int threads;
} sphx_mc_options;

SPHX_API sphx_mc_options sphx_mc_options_default(void);

typedef struct sphx_polyhedron sphx_polyhedron;

typedef struct sphx_polyhedron_info {
  int dimension;
  int vertices;
  int faces;
  int edges; /* 0 when d > 3 */
  int monte_carlo;
  double surface_area;
  double volume;
  double surface_stderr;
  double volume_stderr;
  double volume_residual;
  double iq;
  double iq_shortcut;
  double iq_stderr;
} sphx_polyhedron_info;

typedef struct sphx_projection_info {
  int cells;
  double projected_vertex_match;
  double face_area_sum_check;
  double delaunay_area_sum_check;
  double preimage_area_sum;
  double preimage_relative_error;
} sphx_projection_info;

typedef struct sphx_conjecture_record {
  char bound_name[32];
  double lhs;
  double rhs;
  double margin;
  double standard_error;
  int conjectured;
} sphx_conjecture_record;

/* mc may be NULL for defaults; it is only used when d > 3. */
SPHX_API sphx_status sphx_polyhedron_build(const sphx_code* tangency, const sphx_mc_options* mc, sphx_polyhedron** out);
SPHX_API sphx_status sphx_polyhedron_info_get(const sphx_polyhedron* p, sphx_polyhedron_info* out);
SPHX_API sphx_status sphx_polyhedron_projection(const sphx_polyhedron* p, sphx_projection_info* out);
SPHX_API sphx_status sphx_polyhedron_save(const sphx_polyhedron* p, const char* path);
/* Returns the record count through count_out and writes up to cap records. */
SPHX_API sphx_status sphx_conjecture_report(const sphx_polyhedron* p, const sphx_mc_options* mc,
                                            sphx_conjecture_record* out, size_t cap, size_t* count_out);
SPHX_API void sphx_polyhedron_free(sphx_polyhedron* p);

typedef struct sphx_rho_estimate {
  double value;
  double standard_error;
  double inner_product;
  double area;
} sphx_rho_estimate;

SPHX_API sphx_status sphx_rho(double t, double* out);
SPHX_API sphx_status sphx_lifted_triangle_bound(int faces, double* out);
SPHX_API sphx_status sphx_omega_sphere(int d, double* out);
SPHX_API sphx_status sphx_upper_bound_vertices(int d, int n, long long* out);
SPHX_API sphx_status sphx_rho_d(int d, double t, const sphx_mc_options* mc, sphx_rho_estimate* out);

/* ---- helpers -------------------------------------------------------------- */

/* Regular spherical triangle with side phi, and its inverse. */
SPHX_API sphx_status sphx_regular_triangle_area(double phi, double* out);
SPHX_API sphx_status sphx_regular_triangle_side(double area, double* out);

#ifdef __cplusplus
}
#endif

#endif /* SPHX_SPHX_H */
