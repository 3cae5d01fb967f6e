#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphx/sphx.h"

namespace {

using ojson = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kNumeric = 3, kIo = 4 };

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(sphx_status s) {
  switch (s) {
    case SPHX_OK: return kOk;
    case SPHX_ERR_INVALID_ARGUMENT:
    case SPHX_ERR_DOMAIN: return kUsage;
    case SPHX_ERR_DEGENERATE:
    case SPHX_ERR_UNBOUNDED:
    case SPHX_ERR_NUMERIC: return kNumeric;
    case SPHX_ERR_IO:
    case SPHX_ERR_PARSE: return kIo;
    default: return kInternal;
  }
}

void check(sphx_status s) {
  if (s != SPHX_OK) throw Failure{exit_for(s), std::string(sphx_status_name(s)) + ": " + sphx_last_error()};
}

[[noreturn]] void usage(const std::string& what) { throw Failure{kUsage, what}; }

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Code = Handle<sphx_code, sphx_code_free>;
using Result = Handle<sphx_result, sphx_result_free>;
using Graph = Handle<sphx_graph, sphx_graph_free>;
using Poly = Handle<sphx_polyhedron, sphx_polyhedron_free>;
using Table = Handle<sphx_kissing_table, sphx_kissing_table_free>;

// "pi/3", "2pi/3", "2*pi/5", "pi", "60deg", or plain radians.
double parse_angle(std::string text) {
  std::erase_if(text, [](char c) { return c == ' '; });
  if (text.empty()) usage("empty angle");
  auto number = [&](const std::string& s, double fallback) {
    if (s.empty()) return fallback;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      usage("cannot parse angle '" + text + "'");
    }
    if (used != s.size()) usage("cannot parse angle '" + text + "'");
    return v;
  };
  if (text.size() > 3 && text.ends_with("deg")) return number(text.substr(0, text.size() - 3), 0.0) * kPi / 180.0;
  const auto at = text.find("pi");
  if (at == std::string::npos) return number(text, 0.0);
  std::string coef = text.substr(0, at);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  if (coef == "-") coef = "-1";
  const std::string rest = text.substr(at + 2);
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/') usage("cannot parse angle '" + text + "'");
    denom = number(rest.substr(1), 0.0);
    if (denom == 0.0) usage("zero denominator in angle '" + text + "'");
  }
  return number(coef, 1.0) * kPi / denom;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

// Rounds every floating value in a record to 12 significant digits.
ojson rounded(const ojson& j) {
  if (j.is_number_float()) return round12(j.get<double>());
  if (j.is_object()) {
    ojson out = ojson::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = rounded(it.value());
    return out;
  }
  if (j.is_array()) {
    ojson out = ojson::array();
    for (const auto& v : j) out.push_back(rounded(v));
    return out;
  }
  return j;
}

std::string table_value(const ojson& v) {
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

struct Settings {
  std::string format = "table";
  std::optional<std::uint64_t> seed;
  int threads = 1;
  std::optional<double> tol;
  bool strict = false;
  std::string config_path;
  ojson config = ojson::object();
};

class Output {
 public:
  explicit Output(const Settings& s) : records_(s.format == "records") {}

  void emit(const ojson& record) {
    if (records_) {
      std::cout << rounded(record).dump() << '\n';
      return;
    }
    if (blocks_++) std::cout << '\n';
    std::size_t width = 0;
    for (auto it = record.begin(); it != record.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = record.begin(); it != record.end(); ++it) {
      std::string key = it.key();
      key.resize(width, ' ');
      std::cout << key << "  " << table_value(it.value()) << '\n';
    }
  }

 private:
  bool records_;
  int blocks_ = 0;
};

void require_seed(const Settings& s, const char* command) {
  if (s.strict && !s.seed) usage(std::string(command) + " is randomized; --strict requires --seed");
}

template <class T>
T config_value(const Settings& s, const char* key, T fallback) {
  if (!s.config.contains(key)) return fallback;
  try {
    return s.config[key].get<T>();
  } catch (const std::exception&) {
    usage(std::string("config key '") + key + "' has the wrong type");
  }
}

sphx_mc_options mc_options(const Settings& s, std::optional<long long> samples) {
  sphx_mc_options mc = sphx_mc_options_default();
  mc.seed = s.seed.value_or(config_value<std::uint64_t>(s, "master_seed", mc.seed));
  mc.samples = samples.value_or(config_value<long long>(s, "samples", mc.samples));
  mc.threads = s.threads;
  return mc;
}

std::string bound_name_for(const std::string& kind) {
  static const std::map<std::string, std::string> names{
      {"ft-packing", "ft_packing"}, {"ft-covering", "ft_covering"}, {"ft-code", "ft_code"},
      {"coxeter", "coxeter"},       {"goldberg", "goldberg_ft"},    {"conjecture-vertex", "ft_vertex_conj"},
      {"conjecture-edge", "ft_edge_conj"}};
  return names.at(kind);
}

// ---- bounds

struct BoundsArgs {
  std::string kind;
  std::optional<int> n, f, v, e;
  std::optional<std::string> phi, d;
  std::string table;
};

int cmd_bounds(const Settings& s, const BoundsArgs& a, Output& out) {
  auto need_int = [&](const std::optional<int>& x, const char* flag) {
    if (!x) usage("bounds " + a.kind + " needs " + flag);
    return *x;
  };
  auto need_angle = [&](const std::optional<std::string>& x, const char* flag) {
    if (!x) usage("bounds " + a.kind + " needs " + flag);
    return parse_angle(*x);
  };
  ojson rec;
  rec["bound"] = a.kind;
  if (a.kind == "kappa") {
    const double d = need_angle(a.d, "--d");
    int k = 0;
    double real = 0.0;
    check(sphx_kappa(d, &k, &real));
    rec["d"] = d;
    rec["value"] = k;
    rec["real_value"] = real;
    rec["method"] = "closed_form";
    out.emit(rec);
    return kOk;
  }
  if (a.kind == "kbar") {
    const int n = need_int(a.n, "--n");
    Table t;
    check(a.table.empty() ? sphx_kissing_table_default(t.out()) : sphx_kissing_table_load(a.table.c_str(), t.out()));
    double kb = 0.0;
    check(sphx_kbar(t.get(), n, &kb));
    long long k0 = 0, k1 = 0;
    int e0 = 0, e1 = 0;
    check(sphx_kissing_table_get(t.get(), n - 1, &k0, &e0));
    check(sphx_kissing_table_get(t.get(), n, &k1, &e1));
    rec["n"] = n;
    rec["value"] = kb;
    rec["k_prev"] = k0;
    rec["k"] = k1;
    rec["provenance"] = (e0 && e1) ? "exact" : "bound";
    rec["method"] = "closed_form";
    out.emit(rec);
    return kOk;
  }

  sphx_bound b{};
  if (a.kind == "ft-packing") {
    rec["n"] = need_int(a.n, "--n");
    check(sphx_ft_packing_bound(*a.n, &b));
  } else if (a.kind == "ft-covering") {
    rec["n"] = need_int(a.n, "--n");
    check(sphx_ft_covering_bound(*a.n, &b));
  } else if (a.kind == "ft-code") {
    const double phi = need_angle(a.phi, "--phi");
    rec["phi"] = phi;
    check(sphx_ft_code_bound(phi, &b));
  } else if (a.kind == "coxeter") {
    rec["n"] = need_int(a.n, "--n");
    const double phi = need_angle(a.phi, "--phi");
    rec["phi"] = phi;
    check(sphx_coxeter_bound(*a.n, phi, &b));
  } else if (a.kind == "goldberg") {
    rec["f"] = need_int(a.f, "--f");
    check(sphx_goldberg_bound(*a.f, &b));
  } else if (a.kind == "conjecture-vertex") {
    rec["v"] = need_int(a.v, "--v");
    check(sphx_ft_vertex_conjecture(*a.v, &b));
  } else if (a.kind == "conjecture-edge") {
    rec["f"] = need_int(a.f, "--f");
    rec["v"] = need_int(a.v, "--v");
    rec["e"] = need_int(a.e, "--e");
    check(sphx_ft_edge_conjecture(*a.f, *a.v, *a.e, &b));
  } else {
    usage("unknown bound kind '" + a.kind + "'");
  }
  rec["bound"] = bound_name_for(a.kind);
  rec["value"] = b.value;
  if (a.kind == "ft-code" || a.kind == "coxeter") rec["floor"] = b.floor_value;
  if (a.kind.starts_with("conjecture")) {
    rec["implied_iq"] = b.implied_iq;
    rec["status"] = "conjectured bound";
  }
  rec["method"] = sphx_method_name(b.method);
  rec["error_estimate"] = b.error_estimate;
  (void)s;
  out.emit(rec);
  return kOk;
}

// ---- optimize

struct OptimizeArgs {
  std::string mode;
  std::optional<int> n, m;
  std::string target = "pi/3";
  std::optional<std::string> d;
  std::optional<int> restarts, iterations;
  std::string out_dir = ".";
  std::string prefix;
};

struct ConfigStorage {
  std::vector<double> beta, steps;
};

sphx_optimizer_config optimizer_config(const Settings& s, const OptimizeArgs& a, ConfigStorage& store) {
  sphx_optimizer_config c = sphx_optimizer_config_default();
  store.beta.assign(c.beta_schedule, c.beta_schedule + c.beta_count);
  store.steps.assign(c.step_schedule, c.step_schedule + c.step_count);
  c.restarts = a.restarts.value_or(config_value<int>(s, "restarts", c.restarts));
  c.iterations_per_restart = a.iterations.value_or(config_value<int>(s, "iterations_per_restart", c.iterations_per_restart));
  c.master_seed = s.seed.value_or(config_value<std::uint64_t>(s, "master_seed", c.master_seed));
  store.beta = config_value<std::vector<double>>(s, "softmin_beta_schedule", store.beta);
  store.steps = config_value<std::vector<double>>(s, "step_schedule", store.steps);
  c.beta_schedule = store.beta.data();
  c.beta_count = store.beta.size();
  c.step_schedule = store.steps.data();
  c.step_count = store.steps.size();
  c.convergence_tol = config_value<double>(s, "convergence_tol", c.convergence_tol);
  c.contact_tol = s.tol.value_or(config_value<double>(s, "contact_tol", c.contact_tol));
  c.search_contact_eps = config_value<double>(s, "search_contact_eps", c.search_contact_eps);
  c.threads = s.threads;
  return c;
}

ojson config_echo(const sphx_optimizer_config& c) {
  ojson j;
  j["restarts"] = c.restarts;
  j["iterations_per_restart"] = c.iterations_per_restart;
  j["master_seed"] = c.master_seed;
  j["softmin_beta_schedule"] = std::vector<double>(c.beta_schedule, c.beta_schedule + c.beta_count);
  j["step_schedule"] = std::vector<double>(c.step_schedule, c.step_schedule + c.step_count);
  j["convergence_tol"] = c.convergence_tol;
  j["contact_tol"] = c.contact_tol;
  j["search_contact_eps"] = c.search_contact_eps;
  j["threads"] = c.threads;
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Failure{kIo, "cannot write '" + path + "'"};
  f << text;
  if (!f) throw Failure{kIo, "write failed for '" + path + "'"};
}

int cmd_optimize(const Settings& s, const OptimizeArgs& a, const std::string& command_line, Output& out) {
  require_seed(s, "optimize");
  const auto start = std::chrono::steady_clock::now();
  ConfigStorage store;
  const sphx_optimizer_config cfg = optimizer_config(s, a, store);
  ojson params;
  Result r;
  if (a.mode == "tammes") {
    if (!a.n) usage("optimize tammes needs --n");
    params["n"] = *a.n;
    check(sphx_tammes(*a.n, &cfg, r.out()));
  } else if (a.mode == "antipodal") {
    if (!a.m) usage("optimize antipodal needs --m");
    params["m"] = *a.m;
    check(sphx_antipodal(*a.m, &cfg, r.out()));
  } else if (a.mode == "hemisphere") {
    if (!a.n) usage("optimize hemisphere needs --n");
    const double target = parse_angle(a.target);
    params["n"] = *a.n;
    params["target"] = target;
    check(sphx_hemisphere(*a.n, target, &cfg, r.out()));
  } else if (a.mode == "max-contacts") {
    if (!a.n) usage("optimize max-contacts needs --n");
    params["n"] = *a.n;
    std::optional<double> d;
    if (a.d) {
      d = parse_angle(*a.d);
      params["d"] = *d;
    }
    check(sphx_max_contacts(*a.n, d ? &*d : nullptr, &cfg, r.out()));
  } else {
    usage("unknown optimize mode '" + a.mode + "'");
  }
  sphx_result_info info{};
  check(sphx_result_info_get(r.get(), &info));
  Code code;
  check(sphx_result_code(r.get(), code.out()));

  std::string prefix = a.prefix;
  if (prefix.empty()) {
    prefix = a.mode;
    if (params.contains("n")) prefix += "_n" + std::to_string(params["n"].get<int>());
    if (params.contains("m")) prefix += "_m" + std::to_string(params["m"].get<int>());
  }
  const std::string base = a.out_dir + "/" + prefix;
  const std::string points_path = base + "_points.json";
  const std::string graph_path = base + "_graph.json";
  const std::string manifest_path = base + "_manifest.json";
  check(sphx_code_save(code.get(), points_path.c_str()));

  ojson outputs = ojson::array({points_path});
  std::optional<std::string> graph_note;
  {
    Graph g;
    const sphx_status gs = sphx_graph_build(code.get(), cfg.contact_tol, g.out());
    if (gs == SPHX_OK) {
      check(sphx_graph_save(g.get(), graph_path.c_str()));
      outputs.push_back(graph_path);
    } else {
      graph_note = std::string("contact graph not exported: ") + sphx_last_error();
    }
  }

  ojson rec;
  rec["command"] = "optimize";
  rec["mode"] = a.mode;
  for (auto it = params.begin(); it != params.end(); ++it) rec[it.key()] = it.value();
  rec["points"] = static_cast<long long>(sphx_code_size(code.get()));
  rec["psi"] = info.psi;
  rec["psi_deg"] = info.psi * 180.0 / kPi;
  rec["best_restart"] = info.best_restart;
  rec["certificate"] = info.has_certificate ? ojson(info.certificate) : ojson(nullptr);
  if (a.mode == "hemisphere") rec["feasible"] = static_cast<bool>(info.feasible);
  if (a.mode == "max-contacts") {
    rec["contacts"] = info.contacts;
    rec["contact_distance"] = info.contact_distance;
    rec["contact_distance_deg"] = info.contact_distance * 180.0 / kPi;
  }
  rec["seed"] = cfg.master_seed;
  if (graph_note) rec["note"] = *graph_note;

  ojson manifest;
  manifest["command"] = command_line;
  ojson echo = config_echo(cfg);
  echo["mode"] = a.mode;
  for (auto it = params.begin(); it != params.end(); ++it) echo[it.key()] = it.value();
  manifest["config_echo"] = echo;
  manifest["master_seed"] = cfg.master_seed;
  manifest["best_restart"] = info.best_restart;
  manifest["psi"] = info.psi;
  outputs.push_back(manifest_path);
  manifest["outputs"] = outputs;
  manifest["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest["tool_version"] = sphx_version();
  write_file(manifest_path, manifest.dump(2) + "\n");

  out.emit(rec);
  return kOk;
}

// ---- contacts

int cmd_contacts(const Settings& s, const std::string& path, const std::string& graph_out, Output& out) {
  Code code;
  check(sphx_code_load(path.c_str(), code.out()));
  const double tol = s.tol.value_or(config_value<double>(s, "contact_tol", 1e-6));
  Graph g;
  check(sphx_graph_build(code.get(), tol, g.out()));
  sphx_graph_info gi{};
  check(sphx_graph_info_get(g.get(), &gi));
  ojson rec;
  rec["command"] = "contacts";
  rec["n"] = gi.vertices;
  rec["psi"] = gi.contact_distance;
  rec["psi_deg"] = gi.contact_distance * 180.0 / kPi;
  rec["edges"] = gi.edges;
  rec["connected"] = static_cast<bool>(gi.connected);
  rec["faces"] = gi.faces >= 0 ? ojson(gi.faces) : ojson(nullptr);
  rec["min_edge_length"] = gi.min_edge_length;
  rec["max_edge_length"] = gi.max_edge_length;
  rec["tolerance"] = gi.tolerance;
  rec["kappa"] = gi.kappa;
  rec["maximal"] = static_cast<bool>(gi.maximal);
  rec["irreducible_by_faces"] = gi.irreducible_by_faces >= 0 ? ojson(static_cast<bool>(gi.irreducible_by_faces)) : ojson(nullptr);
  rec["irreducible_by_count"] = static_cast<bool>(gi.irreducible_by_count);
  if (const char* w = sphx_graph_warning(g.get())) rec["warning"] = w;
  if (!graph_out.empty()) {
    check(sphx_graph_save(g.get(), graph_out.c_str()));
    rec["graph_file"] = graph_out;
  }
  out.emit(rec);
  return kOk;
}

// ---- polyhedron commands

struct PolyArgs {
  std::string path;
  std::string solid;
  std::optional<long long> samples;
  std::string export_path;
};

void load_tangency(const PolyArgs& a, Code& code) {
  if (!a.solid.empty() && !a.path.empty()) usage("give either a point file or --solid, not both");
  if (!a.solid.empty())
    check(sphx_code_solid(a.solid.c_str(), 1, code.out()));
  else if (!a.path.empty())
    check(sphx_code_load(a.path.c_str(), code.out()));
  else
    usage("need a tangency-point file or --solid");
}

ojson source_of(const PolyArgs& a) { return a.solid.empty() ? ojson(a.path) : ojson(a.solid); }

int cmd_iq(const Settings& s, const PolyArgs& a, Output& out) {
  Code code;
  load_tangency(a, code);
  if (sphx_code_dim(code.get()) > 3) require_seed(s, "iq in dimension > 3");
  const sphx_mc_options mc = mc_options(s, a.samples);
  Poly p;
  check(sphx_polyhedron_build(code.get(), &mc, p.out()));
  sphx_polyhedron_info pi{};
  check(sphx_polyhedron_info_get(p.get(), &pi));
  ojson rec;
  rec["command"] = "iq";
  rec["source"] = source_of(a);
  rec["dimension"] = pi.dimension;
  rec["faces"] = pi.faces;
  rec["vertices"] = pi.vertices;
  if (pi.dimension == 3) rec["edges"] = pi.edges;
  rec["surface_area"] = pi.surface_area;
  rec["volume"] = pi.volume;
  rec["iq"] = pi.iq;
  rec["iq_shortcut"] = pi.iq_shortcut;
  rec["volume_residual"] = pi.volume_residual;
  if (pi.monte_carlo) {
    rec["surface_area_stderr"] = pi.surface_stderr;
    rec["volume_stderr"] = pi.volume_stderr;
    rec["iq_stderr"] = pi.iq_stderr;
  }
  if (pi.dimension == 3) {
    sphx_projection_info pr{};
    check(sphx_polyhedron_projection(p.get(), &pr));
    rec["voronoi_sum_residual"] = pr.face_area_sum_check;
    rec["delaunay_sum_residual"] = pr.delaunay_area_sum_check;
    rec["projected_vertex_match"] = pr.projected_vertex_match;
    rec["preimage_relative_error"] = pr.preimage_relative_error;
    sphx_bound g{};
    check(sphx_goldberg_bound(pi.faces, &g));
    double lifted = 0.0;
    check(sphx_lifted_triangle_bound(pi.faces, &lifted));
    rec["goldberg_ft_rhs"] = g.value;
    rec["goldberg_ft_margin"] = g.value - pi.iq;
    rec["lifted_triangle_rhs"] = lifted;
    rec["lifted_triangle_margin"] = lifted - pi.iq;
  }
  if (!a.export_path.empty()) {
    check(sphx_polyhedron_save(p.get(), a.export_path.c_str()));
    rec["export_file"] = a.export_path;
  }
  out.emit(rec);
  return kOk;
}

int cmd_project(const Settings& s, const PolyArgs& a, Output& out) {
  Code code;
  load_tangency(a, code);
  (void)s;
  Poly p;
  check(sphx_polyhedron_build(code.get(), nullptr, p.out()));
  sphx_polyhedron_info pi{};
  check(sphx_polyhedron_info_get(p.get(), &pi));
  sphx_projection_info pr{};
  check(sphx_polyhedron_projection(p.get(), &pr));
  ojson rec;
  rec["command"] = "project";
  rec["source"] = source_of(a);
  rec["voronoi_cells"] = pi.faces;
  rec["delaunay_cells"] = pr.cells;
  rec["voronoi_sum_residual"] = pr.face_area_sum_check;
  rec["delaunay_sum_residual"] = pr.delaunay_area_sum_check;
  rec["projected_vertex_match"] = pr.projected_vertex_match;
  rec["surface_area"] = pi.surface_area;
  rec["preimage_area_sum"] = pr.preimage_area_sum;
  rec["preimage_relative_error"] = pr.preimage_relative_error;
  out.emit(rec);
  return kOk;
}

int cmd_conjectures(const Settings& s, const PolyArgs& a, Output& out) {
  Code code;
  load_tangency(a, code);
  const bool randomized = sphx_code_dim(code.get()) > 3;
  if (randomized) require_seed(s, "conjectures in dimension > 3");
  const sphx_mc_options mc = mc_options(s, a.samples);
  Poly p;
  check(sphx_polyhedron_build(code.get(), &mc, p.out()));
  std::size_t count = 0;
  check(sphx_conjecture_report(p.get(), &mc, nullptr, 0, &count));
  std::vector<sphx_conjecture_record> recs(count);
  check(sphx_conjecture_report(p.get(), &mc, recs.data(), recs.size(), &count));
  for (const auto& c : recs) {
    ojson rec;
    rec["bound_name"] = c.bound_name;
    rec["source"] = source_of(a);
    rec["lhs"] = c.lhs;
    rec["rhs"] = c.rhs;
    rec["margin"] = c.margin;
    rec["stderr"] = c.standard_error;
    rec["status"] = c.conjectured ? "conjectured bound" : "proven bound";
    out.emit(rec);
  }
  return kOk;
}

// ---- rho

struct RhoArgs {
  std::string t;
  std::optional<int> d;
  std::optional<long long> samples;
};

int cmd_rho(const Settings& s, const RhoArgs& a, Output& out) {
  const double t = parse_angle(a.t);
  ojson rec;
  rec["command"] = "rho";
  rec["t"] = t;
  const int d = a.d.value_or(3);
  rec["d"] = d;
  if (d == 3) {
    double exact = 0.0;
    check(sphx_rho(t, &exact));
    rec["rho"] = exact;
    rec["ratio"] = t / exact;
  }
  if (d != 3 || a.samples) {
    require_seed(s, "rho with Monte Carlo");
    const sphx_mc_options mc = mc_options(s, a.samples);
    sphx_rho_estimate e{};
    check(sphx_rho_d(d, t, &mc, &e));
    rec["rho_mc"] = e.value;
    rec["rho_mc_stderr"] = e.standard_error;
    rec["inner_product"] = e.inner_product;
    rec["mc_area"] = e.area;
    rec["samples"] = mc.samples;
    rec["seed"] = mc.seed;
  }
  out.emit(rec);
  return kOk;
}

// ---- table

int cmd_table(const Settings& s, const std::string& path, Output& out) {
  (void)s;
  Table t;
  check(path.empty() ? sphx_kissing_table_default(t.out()) : sphx_kissing_table_load(path.c_str(), t.out()));
  const std::size_t count = sphx_kissing_table_dims(t.get(), nullptr, 0);
  std::vector<int> dims(count);
  sphx_kissing_table_dims(t.get(), dims.data(), dims.size());
  for (int n : dims) {
    long long k = 0;
    int exact = 0;
    check(sphx_kissing_table_get(t.get(), n, &k, &exact));
    ojson rec;
    rec["n"] = n;
    rec["k"] = k;
    rec["provenance"] = exact ? "exact" : "bound";
    double kb = 0.0;
    if (sphx_kbar(t.get(), n, &kb) == SPHX_OK)
      rec["kbar"] = kb;
    else
      rec["kbar"] = nullptr;
    out.emit(rec);
  }
  return kOk;
}

void load_config(Settings& s) {
  if (s.config_path.empty()) return;
  std::ifstream in(s.config_path);
  if (!in) throw Failure{kIo, "cannot open config '" + s.config_path + "'"};
  ojson doc;
  try {
    doc = ojson::parse(in);
  } catch (const std::exception& e) {
    throw Failure{kIo, std::string("config parse error: ") + e.what()};
  }
  // A run manifest replays through its config echo.
  if (doc.is_object() && doc.contains("config_echo")) doc = doc["config_echo"];
  if (!doc.is_object()) throw Failure{kIo, "config must be an object"};
  s.config = doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical codes, packing bounds and circumscribed polyhedra"};
  app.set_version_flag("--version", std::string(sphx_version()));
  app.require_subcommand(1);

  Settings settings;
  std::uint64_t seed = 0;
  double tol = 0.0;
  app.add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"table", "records"}))
      ->default_val("table");
  auto* seed_opt = app.add_option("--seed", seed, "Master seed for randomized commands");
  app.add_option("--threads", settings.threads, "Worker threads")->check(CLI::Range(1, 1024));
  auto* tol_opt = app.add_option("--tol", tol, "Contact tolerance (radians)")->check(CLI::PositiveNumber);
  app.add_flag("--strict", settings.strict, "Require --seed for randomized commands");
  app.add_option("--config", settings.config_path, "JSON document overriding optimizer defaults");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Evaluate a packing, covering or isoperimetric bound");
  bounds->add_option("kind", ba.kind, "Bound kind")
      ->required()
      ->check(CLI::IsMember({"ft-packing", "ft-covering", "ft-code", "coxeter", "goldberg", "conjecture-vertex",
                             "conjecture-edge", "kappa", "kbar"}));
  bounds->add_option("--n", ba.n, "Point count or dimension");
  bounds->add_option("--phi", ba.phi, "Angle, e.g. pi/3 or 60deg");
  bounds->add_option("--d", ba.d, "Cap diameter for kappa");
  bounds->add_option("--f", ba.f, "Face count");
  bounds->add_option("--v", ba.v, "Vertex count");
  bounds->add_option("--e", ba.e, "Edge count");
  bounds->add_option("--table", ba.table, "Kissing-table file for kbar");

  OptimizeArgs oa;
  auto* optimize = app.add_subcommand("optimize", "Search for optimal spherical codes");
  optimize->add_option("mode", oa.mode, "Search mode")
      ->required()
      ->check(CLI::IsMember({"tammes", "antipodal", "hemisphere", "max-contacts"}));
  optimize->add_option("--n", oa.n, "Number of points")->check(CLI::Range(2, 100000));
  optimize->add_option("--m", oa.m, "Number of antipodal pairs")->check(CLI::Range(1, 100000));
  optimize->add_option("--target", oa.target, "Hemisphere target distance");
  optimize->add_option("--d", oa.d, "Fixed contact distance for max-contacts");
  optimize->add_option("--restarts", oa.restarts, "Restart count")->check(CLI::PositiveNumber);
  optimize->add_option("--iterations", oa.iterations, "Iterations per restart")->check(CLI::PositiveNumber);
  optimize->add_option("--out-dir", oa.out_dir, "Directory for output files");
  optimize->add_option("--prefix", oa.prefix, "File name prefix");

  std::string contacts_path, graph_out;
  auto* contacts = app.add_subcommand("contacts", "Contact graph of a point set");
  contacts->add_option("points", contacts_path, "Point-set file")->required();
  contacts->add_option("--graph-out", graph_out, "Write the graph export here");

  auto add_poly = [&](CLI::App* sub, PolyArgs& pa) {
    sub->add_option("points", pa.path, "Tangency-point file");
    sub->add_option("--solid", pa.solid, "Named Platonic solid")
        ->check(CLI::IsMember({"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}));
    sub->add_option("--samples", pa.samples, "Monte Carlo samples (d > 3)")->check(CLI::Range(1000LL, 1000000000LL));
  };
  PolyArgs ia, pa, ca;
  auto* iq = app.add_subcommand("iq", "Circumscribed polyhedron and its isoperimetric quotient");
  add_poly(iq, ia);
  iq->add_option("--export", ia.export_path, "Write the polyhedron export here");
  auto* project = app.add_subcommand("project", "Central-projection identities");
  add_poly(project, pa);
  auto* conjectures = app.add_subcommand("conjectures", "Evaluate conjectured isoperimetric bounds");
  add_poly(conjectures, ca);

  RhoArgs ra;
  auto* rho = app.add_subcommand("rho", "Lifted area of a regular spherical simplex");
  rho->add_option("--t", ra.t, "Spherical area, e.g. pi/2")->required();
  rho->add_option("--d", ra.d, "Ambient dimension")->check(CLI::Range(3, 16));
  rho->add_option("--samples", ra.samples, "Monte Carlo samples")->check(CLI::Range(10000LL, 1000000000LL));

  std::string table_path;
  auto* table = app.add_subcommand("table", "Kissing-number table");
  table->add_option("--table", table_path, "Kissing-table file");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::string command_line;
  for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);

  try {
    if (*seed_opt) settings.seed = seed;
    if (*tol_opt) settings.tol = tol;
    load_config(settings);
    Output out(settings);
    if (*bounds) return cmd_bounds(settings, ba, out);
    if (*optimize) return cmd_optimize(settings, oa, command_line, out);
    if (*contacts) return cmd_contacts(settings, contacts_path, graph_out, out);
    if (*iq) return cmd_iq(settings, ia, out);
    if (*project) return cmd_project(settings, pa, out);
    if (*conjectures) return cmd_conjectures(settings, ca, out);
    if (*rho) return cmd_rho(settings, ra, out);
    if (*table) return cmd_table(settings, table_path, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
