#include <math.h>
#include <stdio.h>
#include <string.h>

#include "sphx/sphx.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static const double kPi = 3.14159265358979323846;

static void test_errors(void) {
  sphx_bound b;
  EXPECT(sphx_goldberg_bound(3, &b) == SPHX_ERR_DOMAIN);
  EXPECT(strlen(sphx_last_error()) > 0);
  EXPECT(sphx_goldberg_bound(6, NULL) == SPHX_ERR_INVALID_ARGUMENT);
  EXPECT(sphx_goldberg_bound(6, &b) == SPHX_OK);
  EXPECT(strlen(sphx_last_error()) == 0);
  EXPECT(strcmp(sphx_status_name(SPHX_ERR_UNBOUNDED), "unbounded") == 0);
  EXPECT(strlen(sphx_version()) > 0);
  sphx_code* code = NULL;
  EXPECT(sphx_code_load("/nonexistent/points.json", &code) == SPHX_ERR_IO);
  EXPECT(code == NULL);
  EXPECT(sphx_code_solid("sphere", 1, &code) == SPHX_ERR_PARSE);
}

static void test_bounds(void) {
  sphx_bound b;
  EXPECT(sphx_coxeter_bound(4, kPi / 5, &b) == SPHX_OK);
  EXPECT(b.floor_value == 120);
  EXPECT(b.method == SPHX_METHOD_QUADRATURE);
  EXPECT(strcmp(sphx_method_name(b.method), "quadrature") == 0);
  EXPECT(sphx_ft_code_bound(kPi / 2, &b) == SPHX_OK);
  EXPECT(fabs(b.value - 6) < 1e-9);
  EXPECT(sphx_ft_edge_conjecture(6, 8, 12, &b) == SPHX_OK);
  EXPECT(fabs(b.implied_iq - kPi / 6) < 1e-9);
  int k = 0;
  double real = 0;
  EXPECT(sphx_kappa(kPi / 2, &k, &real) == SPHX_OK);
  EXPECT(k == 4);
  sphx_kissing_table* t = NULL;
  EXPECT(sphx_kissing_table_default(&t) == SPHX_OK);
  double kb = 0;
  EXPECT(sphx_kbar(t, 4, &kb) == SPHX_OK && kb == 18.0);
  EXPECT(sphx_kbar(t, 6, &kb) == SPHX_ERR_DOMAIN || sphx_kbar(t, 6, &kb) == SPHX_ERR_INVALID_ARGUMENT);
  int dims[8];
  EXPECT(sphx_kissing_table_dims(t, dims, 8) == 4);
  EXPECT(dims[0] == 1 && dims[3] == 4);
  sphx_kissing_table_free(t);
}

static void test_codes_and_graphs(void) {
  const double sq[] = {0, 0, 2, 1, 0, 0, 0, 1, 0, -1, 0, 0, 0, -1, 0};
  sphx_code* code = NULL;
  EXPECT(sphx_code_create(3, 5, sq, &code) == SPHX_OK);
  EXPECT(sphx_code_size(code) == 5);
  EXPECT(fabs(sphx_code_psi(code) - kPi / 2) < 1e-15);
  double coords[15];
  EXPECT(sphx_code_coords(code, coords) == SPHX_OK);
  EXPECT(coords[2] == 1.0);
  sphx_graph* g = NULL;
  EXPECT(sphx_graph_build(code, 1e-6, &g) == SPHX_OK);
  sphx_graph_info gi;
  EXPECT(sphx_graph_info_get(g, &gi) == SPHX_OK);
  EXPECT(gi.edges == 8);
  EXPECT(gi.connected == 1);
  EXPECT(gi.faces == 5);
  int edges[16];
  EXPECT(sphx_graph_edges(g, edges) == SPHX_OK);
  sphx_graph_free(g);
  sphx_code_free(code);
  const double zero[] = {0, 0, 0};
  EXPECT(sphx_code_create(3, 1, zero, &code) != SPHX_OK);
}

static void test_optimizer(void) {
  sphx_optimizer_config cfg = sphx_optimizer_config_default();
  EXPECT(cfg.restarts == 200);
  EXPECT(cfg.beta_count == 4 && cfg.beta_schedule[0] == 50.0);
  cfg.restarts = 6;
  cfg.iterations_per_restart = 2000;
  sphx_result* r = NULL;
  EXPECT(sphx_tammes(6, &cfg, &r) == SPHX_OK);
  sphx_result_info info;
  EXPECT(sphx_result_info_get(r, &info) == SPHX_OK);
  EXPECT(fabs(info.psi - kPi / 2) < 1e-6);
  EXPECT(info.mode == SPHX_MODE_FREE);
  EXPECT(info.has_certificate);
  sphx_code* code = NULL;
  EXPECT(sphx_result_code(r, &code) == SPHX_OK);
  EXPECT(sphx_code_size(code) == 6);
  sphx_code_free(code);
  sphx_result_free(r);
  cfg.beta_count = 0;
  EXPECT(sphx_tammes(6, &cfg, &r) == SPHX_ERR_INVALID_ARGUMENT);
}

static void test_polyhedra(void) {
  sphx_code* code = NULL;
  EXPECT(sphx_code_solid("octahedron", 1, &code) == SPHX_OK);
  EXPECT(sphx_code_size(code) == 8);
  sphx_polyhedron* p = NULL;
  EXPECT(sphx_polyhedron_build(code, NULL, &p) == SPHX_OK);
  sphx_polyhedron_info pi;
  EXPECT(sphx_polyhedron_info_get(p, &pi) == SPHX_OK);
  EXPECT(pi.faces == 8 && pi.vertices == 6 && pi.edges == 12);
  EXPECT(fabs(pi.iq - 0.605) < 1e-3);
  sphx_projection_info pr;
  EXPECT(sphx_polyhedron_projection(p, &pr) == SPHX_OK);
  EXPECT(pr.preimage_relative_error < 1e-9);
  size_t count = 0;
  EXPECT(sphx_conjecture_report(p, NULL, NULL, 0, &count) == SPHX_OK);
  EXPECT(count == 5);
  sphx_conjecture_record recs[5];
  EXPECT(sphx_conjecture_report(p, NULL, recs, 5, &count) == SPHX_OK);
  EXPECT(strcmp(recs[2].bound_name, "goldberg_ft") == 0);
  EXPECT(recs[2].conjectured == 0);
  sphx_polyhedron_free(p);
  sphx_code_free(code);

  const double cap[] = {1, 0, 0.2, 0, 1, 0.2, -1, 0, 0.2, 0, -1, 0.2, 0, 0, 1};
  EXPECT(sphx_code_create(3, 5, cap, &code) == SPHX_OK);
  EXPECT(sphx_polyhedron_build(code, NULL, &p) == SPHX_ERR_UNBOUNDED);
  sphx_code_free(code);

  double v = 0;
  EXPECT(sphx_rho(kPi / 2, &v) == SPHX_OK && fabs(v - 3) < 1e-12);
  EXPECT(sphx_omega_sphere(4, &v) == SPHX_OK && fabs(v - 2 * kPi * kPi) < 1e-12);
  long long h = 0;
  EXPECT(sphx_upper_bound_vertices(3, 10, &h) == SPHX_OK && h == 16);
  sphx_mc_options mc = sphx_mc_options_default();
  EXPECT(mc.samples == 1000000);
  mc.samples = 50000;
  sphx_rho_estimate e;
  EXPECT(sphx_rho_d(3, kPi / 2, &mc, &e) == SPHX_OK);
  EXPECT(fabs(e.value - 3) < 4 * e.standard_error);
}

int main(void) {
  test_errors();
  test_bounds();
  test_codes_and_graphs();
  test_optimizer();
  test_polyhedra();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
