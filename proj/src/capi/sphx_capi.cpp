#include "sphx/sphx.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "sphx/bounds.hpp"
#include "sphx/contacts.hpp"
#include "sphx/error.hpp"
#include "sphx/geom.hpp"
#include "sphx/io.hpp"
#include "sphx/isoperimetric.hpp"
#include "sphx/optimize.hpp"
#include "sphx/solids.hpp"

struct sphx_code {
  sphx::SphericalCode code;
};

struct sphx_kissing_table {
  sphx::KissingTable table;
};

struct sphx_result {
  sphx::TammesResult result;
};

struct sphx_graph {
  sphx::ContactGraph graph;
  sphx::MaximalityReport maximality;
};

struct sphx_polyhedron {
  sphx::CircumscribedPolyhedron poly;
};

namespace {

thread_local std::string g_last_error;

sphx_status set_error(sphx_status s, const char* what) {
  g_last_error = what;
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
sphx_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SPHX_OK;
  } catch (const sphx::Error& e) {
    return set_error(static_cast<sphx_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SPHX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SPHX_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SPHX_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* name) {
  sphx::require(p != nullptr, sphx::ErrorCode::invalid_argument, std::string(name) + " is null");
}

void fill(const sphx::BoundReport& r, sphx_bound* out) {
  out->value = r.value;
  out->method = static_cast<sphx_method>(r.method);
  out->error_estimate = r.error_estimate;
  out->implied_iq = r.implied_iq;
  out->floor_value = r.floor_value();
}

template <class Fn>
sphx_status bound_call(sphx_bound* out, Fn&& fn) {
  return guarded([&] {
    need(out, "out");
    fill(fn(), out);
  });
}

sphx::OptimizerConfig to_config(const sphx_optimizer_config* c) {
  sphx::OptimizerConfig cfg;
  if (!c) return cfg;
  cfg.restarts = c->restarts;
  cfg.iterations_per_restart = c->iterations_per_restart;
  cfg.master_seed = c->master_seed;
  sphx::require((c->beta_schedule || c->beta_count == 0) && (c->step_schedule || c->step_count == 0),
                sphx::ErrorCode::invalid_argument, "schedule pointer is null");
  cfg.softmin_beta_schedule.assign(c->beta_schedule, c->beta_schedule + c->beta_count);
  cfg.step_schedule.assign(c->step_schedule, c->step_schedule + c->step_count);
  cfg.convergence_tol = c->convergence_tol;
  cfg.contact_tol = c->contact_tol;
  cfg.search_contact_eps = c->search_contact_eps;
  cfg.threads = c->threads;
  cfg.validate();
  return cfg;
}

sphx::MonteCarloOptions to_mc(const sphx_mc_options* mc) {
  sphx::MonteCarloOptions o;
  if (mc) {
    o.seed = mc->seed;
    o.samples = mc->samples;
    o.threads = mc->threads;
  }
  return o;
}

template <class Fn>
sphx_status solve(sphx_result** out, Fn&& fn) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    *out = new sphx_result{fn()};
  });
}

}  // namespace

extern "C" {

const char* sphx_version(void) { return SPHX_VERSION_STRING; }

const char* sphx_last_error(void) { return g_last_error.c_str(); }

const char* sphx_status_name(sphx_status status) {
  switch (status) {
    case SPHX_OK: return "ok";
    case SPHX_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SPHX_ERR_DOMAIN: return "domain";
    case SPHX_ERR_DEGENERATE: return "degenerate";
    case SPHX_ERR_UNBOUNDED: return "unbounded";
    case SPHX_ERR_NUMERIC: return "numeric";
    case SPHX_ERR_IO: return "io";
    case SPHX_ERR_PARSE: return "parse";
    case SPHX_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

// ---- codes

sphx_status sphx_code_create(int dim, size_t count, const double* coords, sphx_code** out) {
  return guarded([&] {
    need(out, "out");
    need(coords, "coords");
    sphx::require(dim >= 2 && count >= 1, sphx::ErrorCode::invalid_argument, "need dim >= 2 and count >= 1");
    std::vector<sphx::UnitVector> pts;
    for (size_t i = 0; i < count; ++i)
      pts.emplace_back(Eigen::Map<const Eigen::VectorXd>(coords + i * dim, dim));
    *out = new sphx_code{sphx::SphericalCode(std::move(pts))};
  });
}

sphx_status sphx_code_load(const char* path, sphx_code** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new sphx_code{sphx::io::load_point_set(path)};
  });
}

sphx_status sphx_code_save(const sphx_code* code, const char* path) {
  return guarded([&] {
    need(code, "code");
    need(path, "path");
    sphx::io::save_point_set(path, code->code);
  });
}

sphx_status sphx_code_solid(const char* name, int tangency, sphx_code** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    const sphx::Solid s = sphx::parse_solid(name);
    const auto pts = tangency ? sphx::tangency_points(s) : sphx::solid_vertices(s);
    *out = new sphx_code{sphx::SphericalCode::from_vec3(pts)};
  });
}

void sphx_code_free(sphx_code* code) { delete code; }

size_t sphx_code_size(const sphx_code* code) { return code ? code->code.size() : 0; }

int sphx_code_dim(const sphx_code* code) { return code ? code->code.dim() : 0; }

sphx_status sphx_code_coords(const sphx_code* code, double* out) {
  return guarded([&] {
    need(code, "code");
    need(out, "out");
    const int d = code->code.dim();
    for (size_t i = 0; i < code->code.size(); ++i)
      for (int k = 0; k < d; ++k) out[i * d + k] = code->code[i][k];
  });
}

double sphx_code_psi(const sphx_code* code) { return code && code->code.size() >= 2 ? code->code.psi() : 0.0; }

// ---- bounds

const char* sphx_method_name(sphx_method method) {
  return sphx::to_string(static_cast<sphx::BoundMethod>(method));
}

sphx_status sphx_omega_n(int n, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::omega_n(n);
  });
}

sphx_status sphx_ft_packing_bound(int n, sphx_bound* out) {
  return bound_call(out, [&] { return sphx::ft_packing_bound(n); });
}

sphx_status sphx_ft_covering_bound(int n, sphx_bound* out) {
  return bound_call(out, [&] { return sphx::ft_covering_bound(n); });
}

sphx_status sphx_ft_code_bound(double phi, sphx_bound* out) {
  return bound_call(out, [&] { return sphx::ft_code_bound(phi); });
}

sphx_status sphx_ft_tammes_ceiling(int n, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::ft_tammes_ceiling(n);
  });
}

sphx_status sphx_coxeter_bound(int n, double phi, sphx_bound* out) {
  return bound_call(out, [&] { return sphx::coxeter_bound(n, phi); });
}

sphx_status sphx_goldberg_bound(int faces, sphx_bound* out) {
  return bound_call(out, [&] { return sphx::goldberg_ft_rhs(faces); });
}

sphx_status sphx_ft_vertex_conjecture(int vertices, sphx_bound* out) {
  return bound_call(out, [&] { return sphx::ft_vertex_conjecture_rhs(vertices); });
}

sphx_status sphx_ft_edge_conjecture(int faces, int vertices, int edges, sphx_bound* out) {
  return bound_call(out, [&] { return sphx::ft_edge_conjecture_rhs(faces, vertices, edges); });
}

sphx_status sphx_kappa(double d, int* out, double* real_out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::kappa(d);
    if (real_out) *real_out = sphx::kappa_real(d);
  });
}

sphx_status sphx_kissing_table_default(sphx_kissing_table** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sphx_kissing_table{sphx::KissingTable::with_defaults()};
  });
}

sphx_status sphx_kissing_table_load(const char* path, sphx_kissing_table** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new sphx_kissing_table{sphx::io::load_kissing_table(path)};
  });
}

void sphx_kissing_table_free(sphx_kissing_table* table) { delete table; }

size_t sphx_kissing_table_dims(const sphx_kissing_table* table, int* out, size_t cap) {
  if (!table) return 0;
  size_t i = 0;
  for (const auto& [n, entry] : table->table.entries()) {
    if (out && i < cap) out[i] = n;
    ++i;
  }
  return i;
}

sphx_status sphx_kissing_table_get(const sphx_kissing_table* table, int n, long long* k_out, int* exact_out) {
  return guarded([&] {
    need(table, "table");
    const auto& e = table->table.at(n);
    if (k_out) *k_out = e.k;
    if (exact_out) *exact_out = e.provenance == sphx::Provenance::exact;
  });
}

sphx_status sphx_kbar(const sphx_kissing_table* table, int n, double* out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    *out = sphx::kbar(table->table, n);
  });
}

// ---- optimizer

const char* sphx_mode_name(sphx_mode mode) { return sphx::to_string(static_cast<sphx::TammesMode>(mode)); }

sphx_optimizer_config sphx_optimizer_config_default(void) {
  static const sphx::OptimizerConfig defaults;
  sphx_optimizer_config c{};
  c.restarts = defaults.restarts;
  c.iterations_per_restart = defaults.iterations_per_restart;
  c.master_seed = defaults.master_seed;
  c.beta_schedule = defaults.softmin_beta_schedule.data();
  c.beta_count = defaults.softmin_beta_schedule.size();
  c.step_schedule = defaults.step_schedule.data();
  c.step_count = defaults.step_schedule.size();
  c.convergence_tol = defaults.convergence_tol;
  c.contact_tol = defaults.contact_tol;
  c.search_contact_eps = defaults.search_contact_eps;
  c.threads = defaults.threads;
  return c;
}

sphx_status sphx_tammes(int n, const sphx_optimizer_config* cfg, sphx_result** out) {
  return solve(out, [&] { return sphx::tammes_solve(n, to_config(cfg)); });
}

sphx_status sphx_antipodal(int m, const sphx_optimizer_config* cfg, sphx_result** out) {
  return solve(out, [&] { return sphx::antipodal_solve(m, to_config(cfg)); });
}

sphx_status sphx_hemisphere(int count, double target, const sphx_optimizer_config* cfg, sphx_result** out) {
  return solve(out, [&] { return sphx::hemisphere_code_search(count, target, to_config(cfg)); });
}

sphx_status sphx_max_contacts(int n, const double* distance, const sphx_optimizer_config* cfg, sphx_result** out) {
  return solve(out, [&] {
    std::optional<double> d;
    if (distance) d = *distance;
    return sphx::max_contacts(n, d, to_config(cfg));
  });
}

sphx_status sphx_result_info_get(const sphx_result* result, sphx_result_info* out) {
  return guarded([&] {
    need(result, "result");
    need(out, "out");
    const auto& r = result->result;
    out->psi = r.psi;
    out->mode = static_cast<sphx_mode>(r.mode);
    out->best_restart = r.best_restart;
    out->has_certificate = r.certificate.has_value();
    out->certificate = r.certificate.value_or(0.0);
    out->target = r.target;
    out->feasible = r.feasible;
    out->contact_distance = r.contact_distance;
    out->contacts = r.contacts;
  });
}

sphx_status sphx_result_code(const sphx_result* result, sphx_code** out) {
  return guarded([&] {
    need(result, "result");
    need(out, "out");
    *out = new sphx_code{result->result.code};
  });
}

void sphx_result_free(sphx_result* result) { delete result; }

// ---- contact graphs

sphx_status sphx_graph_build(const sphx_code* code, double tol, sphx_graph** out) {
  return guarded([&] {
    need(code, "code");
    need(out, "out");
    auto g = std::make_unique<sphx_graph>();
    g->graph = sphx::build_contact_graph(code->code, tol);
    g->maximality = sphx::is_maximal_packing(g->graph);
    *out = g.release();
  });
}

sphx_status sphx_graph_info_get(const sphx_graph* graph, sphx_graph_info* out) {
  return guarded([&] {
    need(graph, "graph");
    need(out, "out");
    const auto& g = graph->graph;
    out->vertices = static_cast<int>(g.vertices.size());
    out->edges = sphx::edge_count(g);
    out->connected = g.connected;
    out->faces = g.faces ? static_cast<int>(g.faces->size()) : -1;
    out->contact_distance = g.contact_distance;
    out->tolerance = g.tolerance;
    out->min_edge_length = g.min_edge_length;
    out->max_edge_length = g.max_edge_length;
    out->maximal = graph->maximality.maximal;
    out->kappa = graph->maximality.kappa;
    out->irreducible_by_faces = g.faces ? static_cast<int>(sphx::irreducible_by_faces(g)) : -1;
    out->irreducible_by_count = sphx::irreducible_by_count(g);
  });
}

sphx_status sphx_graph_edges(const sphx_graph* graph, int* out) {
  return guarded([&] {
    need(graph, "graph");
    need(out, "out");
    size_t i = 0;
    for (const auto& [a, b] : graph->graph.edges) {
      out[i++] = a;
      out[i++] = b;
    }
  });
}

const char* sphx_graph_warning(const sphx_graph* graph) {
  return graph && graph->maximality.warning ? graph->maximality.warning->c_str() : nullptr;
}

sphx_status sphx_graph_save(const sphx_graph* graph, const char* path) {
  return guarded([&] {
    need(graph, "graph");
    need(path, "path");
    sphx::io::write_text_file(path, sphx::io::format_graph(graph->graph));
  });
}

void sphx_graph_free(sphx_graph* graph) { delete graph; }

// ---- polyhedra

sphx_mc_options sphx_mc_options_default(void) {
  const sphx::MonteCarloOptions o;
  return {o.seed, o.samples, o.threads};
}

sphx_status sphx_polyhedron_build(const sphx_code* tangency, const sphx_mc_options* mc, sphx_polyhedron** out) {
  return guarded([&] {
    need(tangency, "tangency");
    need(out, "out");
    *out = new sphx_polyhedron{sphx::circumscribe(tangency->code, to_mc(mc))};
  });
}

sphx_status sphx_polyhedron_info_get(const sphx_polyhedron* p, sphx_polyhedron_info* out) {
  return guarded([&] {
    need(p, "polyhedron");
    need(out, "out");
    const auto& P = p->poly;
    const sphx::IqValue q = sphx::iq(P);
    out->dimension = P.dimension;
    out->vertices = static_cast<int>(P.vertices.size());
    out->faces = static_cast<int>(P.faces.size());
    out->edges = P.edge_count;
    out->monte_carlo = P.monte_carlo;
    out->surface_area = P.surface_area;
    out->volume = P.volume;
    out->surface_stderr = P.surface_stderr;
    out->volume_stderr = P.volume_stderr;
    out->volume_residual = P.volume_residual;
    out->iq = q.value;
    out->iq_shortcut = q.shortcut;
    out->iq_stderr = q.standard_error;
  });
}

sphx_status sphx_polyhedron_projection(const sphx_polyhedron* p, sphx_projection_info* out) {
  return guarded([&] {
    need(p, "polyhedron");
    need(out, "out");
    const sphx::ProjectionReport r = sphx::projection_report(p->poly);
    out->cells = static_cast<int>(r.preimage_areas.size());
    out->projected_vertex_match = r.projected_vertex_match;
    out->face_area_sum_check = r.face_area_sum_check;
    out->delaunay_area_sum_check = r.delaunay_area_sum_check;
    out->preimage_area_sum = r.preimage_area_sum;
    out->preimage_relative_error = r.preimage_relative_error;
  });
}

sphx_status sphx_polyhedron_save(const sphx_polyhedron* p, const char* path) {
  return guarded([&] {
    need(p, "polyhedron");
    need(path, "path");
    sphx::io::write_text_file(path, sphx::io::format_polyhedron(p->poly));
  });
}

sphx_status sphx_conjecture_report(const sphx_polyhedron* p, const sphx_mc_options* mc, sphx_conjecture_record* out,
                                   size_t cap, size_t* count_out) {
  return guarded([&] {
    need(p, "polyhedron");
    const auto records = sphx::conjecture_report(p->poly, to_mc(mc));
    if (count_out) *count_out = records.size();
    for (size_t i = 0; i < records.size() && i < cap && out; ++i) {
      const auto& r = records[i];
      sphx_conjecture_record& o = out[i];
      std::memset(o.bound_name, 0, sizeof o.bound_name);
      std::strncpy(o.bound_name, r.bound_name.c_str(), sizeof o.bound_name - 1);
      o.lhs = r.lhs;
      o.rhs = r.rhs;
      o.margin = r.margin;
      o.standard_error = r.standard_error;
      o.conjectured = r.conjectured;
    }
  });
}

void sphx_polyhedron_free(sphx_polyhedron* p) { delete p; }

sphx_status sphx_rho(double t, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::rho(t);
  });
}

sphx_status sphx_lifted_triangle_bound(int faces, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::lifted_triangle_bound(faces);
  });
}

sphx_status sphx_omega_sphere(int d, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::omega_sphere(d);
  });
}

sphx_status sphx_upper_bound_vertices(int d, int n, long long* out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::upper_bound_vertices(d, n);
  });
}

sphx_status sphx_rho_d(int d, double t, const sphx_mc_options* mc, sphx_rho_estimate* out) {
  return guarded([&] {
    need(out, "out");
    const sphx::RhoEstimate e = sphx::rho_d(d, t, to_mc(mc));
    out->value = e.value;
    out->standard_error = e.standard_error;
    out->inner_product = e.inner_product;
    out->area = e.area;
  });
}

sphx_status sphx_regular_triangle_area(double phi, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::regular_triangle_area(phi);
  });
}

sphx_status sphx_regular_triangle_side(double area, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = sphx::regular_triangle_side(area);
  });
}

}  // extern "C"
