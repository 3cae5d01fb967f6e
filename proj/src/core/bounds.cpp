#include "sphx/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphx/error.hpp"
#include "sphx/geom.hpp"

namespace sphx {

namespace {

constexpr double kPi = std::numbers::pi;

BoundReport make_report(BoundName name, std::vector<std::pair<std::string, double>> params, double value) {
  BoundReport r{name, std::move(params), value, BoundMethod::closed_form, 0.0, 0.0};
  return r;
}

}  // namespace

const char* to_string(BoundName name) {
  switch (name) {
    case BoundName::ft_packing: return "ft_packing";
    case BoundName::ft_covering: return "ft_covering";
    case BoundName::ft_code: return "ft_code";
    case BoundName::coxeter: return "coxeter";
    case BoundName::goldberg_ft: return "goldberg_ft";
    case BoundName::ft_vertex_conj: return "ft_vertex_conj";
    case BoundName::ft_edge_conj: return "ft_edge_conj";
  }
  return "unknown";
}

const char* to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::closed_form: return "closed_form";
    case BoundMethod::quadrature: return "quadrature";
    case BoundMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

const char* to_string(Provenance p) { return p == Provenance::exact ? "exact" : "bound"; }

long long BoundReport::floor_value() const { return static_cast<long long>(std::floor(value + kFloorSlack)); }

double omega_n(int n) {
  require(n >= 3, ErrorCode::domain, "omega_N needs N >= 3");
  return n * kPi / (6.0 * n - 12.0);
}

BoundReport ft_packing_bound(int n) {
  const double w = omega_n(n);
  return make_report(BoundName::ft_packing, {{"N", n}}, n / 4.0 * (2.0 - 1.0 / std::sin(w)));
}

BoundReport ft_covering_bound(int n) {
  const double w = omega_n(n);
  return make_report(BoundName::ft_covering, {{"N", n}},
                     n / 2.0 * (1.0 - std::cos(w) / (std::sqrt(3.0) * std::sin(w))));
}

BoundReport ft_code_bound(double phi) {
  const double area = regular_triangle_area(phi);
  return make_report(BoundName::ft_code, {{"phi", phi}}, 2.0 * kPi / area + 2.0);
}

double ft_tammes_ceiling(int n) {
  require(n >= 2, ErrorCode::domain, "need at least two points");
  if (n == 2) return kPi;
  if (n == 3) return 2.0 * kPi / 3.0;
  return regular_triangle_side(2.0 * kPi / (n - 2));
}

BoundReport goldberg_ft_rhs(int faces) {
  require(faces >= 4, ErrorCode::domain, "a convex polyhedron has at least four faces");
  const double w = omega_n(faces);
  const double s = std::sin(w);
  const double value = 2.0 * kPi * (std::cos(w) / s) / (3.0 * (faces - 2) * (4.0 * s * s - 1.0));
  return make_report(BoundName::goldberg_ft, {{"f", faces}}, value);
}

BoundReport ft_vertex_conjecture_rhs(int vertices) {
  require(vertices >= 4, ErrorCode::domain, "a convex polyhedron has at least four vertices");
  const double t = std::tan(omega_n(vertices));
  const double value = 27.0 * std::sqrt(3.0) / 2.0 * (vertices - 2) * (3.0 * t * t - 1.0);
  auto r = make_report(BoundName::ft_vertex_conj, {{"v", vertices}}, value);
  r.implied_iq = 36.0 * kPi / value;
  return r;
}

BoundReport ft_edge_conjecture_rhs(int faces, int vertices, int edges) {
  require(edges >= 6 && faces >= 4 && vertices >= 4, ErrorCode::domain,
          "a convex polyhedron has f, v >= 4 and e >= 6");
  require(vertices - edges + faces == 2, ErrorCode::domain, "Euler relation v - e + f = 2 violated");
  const double p = 2.0 * edges / faces;
  const double q = 2.0 * edges / vertices;
  const double tp = std::tan(kPi / p);
  const double tq = std::tan(kPi / q);
  const double value = 9.0 * edges * std::sin(2.0 * kPi / p) * (tp * tp * tq * tq - 1.0);
  auto r = make_report(BoundName::ft_edge_conj, {{"f", faces}, {"v", vertices}, {"e", edges}}, value);
  r.implied_iq = 36.0 * kPi / value;
  return r;
}

double kappa_real(double d) {
  require(d > 0.0 && d <= 2.0 * kPi / 3.0 + 1e-12, ErrorCode::domain, "cap diameter must lie in (0, 2pi/3]");
  const double ratio = std::min(1.0, 0.5 / std::cos(0.5 * d));
  return kPi / std::asin(ratio);
}

int kappa(double d) { return static_cast<int>(std::floor(kappa_real(d) + kFloorSlack)); }

// ---------------------------------------------------------------------------

struct SchlafliFunction::Level {
  double lower = 0.0;
  ChebyshevInterpolant table;
  double error = 0.0;
  double max_abs = 0.0;
};

SchlafliFunction::SchlafliFunction(SchlafliOptions opts) : opts_(opts) {}
SchlafliFunction::~SchlafliFunction() = default;

double SchlafliFunction::lower_limit(int n) {
  require(n >= 2, ErrorCode::domain, "lower limit defined for n >= 2");
  return 0.5 * std::acos(1.0 / (n - 1));
}

namespace {

// beta(theta) with sec 2beta = sec 2theta - 2, written as
//   sin^2 beta = (1 - 3 cos 2theta) / (2 (1 - 2 cos 2theta))
// with 1 - 3 cos 2theta = 6 sin(theta + t4) sin(theta - t4), t4 = arccos(1/3)/2.
// `above_t4` = theta - t4 must be supplied exactly; near t4 the direct
// arccos form loses half the significant digits.
double schlafli_beta(double theta, double above_t4, double t4) {
  const double c = std::cos(2.0 * theta);
  double s2 = 3.0 * std::sin(theta + t4) * std::sin(above_t4) / (1.0 - 2.0 * c);
  if (s2 < 0.0) {
    require(s2 >= -1e-12, ErrorCode::numeric, "sec 2theta - 2 fell below 1");
    s2 = 0.0;
  }
  return std::asin(std::sqrt(std::min(1.0, s2)));
}

}  // namespace

double SchlafliFunction::interpolate(int k, double alpha, double* err) {
  if (k <= 1) {
    *err = 0.0;
    return 1.0;
  }
  const Level& lv = level(k);
  if (alpha <= lv.lower) {
    *err = 0.0;
    return 0.0;
  }
  *err = lv.error;
  return lv.table(std::sqrt(alpha - lv.lower));
}

SchlafliValue SchlafliFunction::integrate(int k, double alpha) {
  const double lower = lower_limit(k);
  if (alpha <= lower) return {0.0, 0.0, alpha < lower};
  double inner_err = 0.0;
  const double span = alpha - lower;
  // Interpolated inner levels carry absolute noise near their lower limit;
  // the tolerance floor keeps relative refinement from chasing it.
  const double inner_scale = k - 2 <= 1 ? 1.0 : level(k - 2).max_abs;
  SimpsonOptions quad = opts_.quadrature;
  if (quad.rel_tol > 0.0) quad.abs_floor = std::max(quad.abs_floor, 1e-2 * quad.rel_tol * span * inner_scale);
  // theta = lower + s^2 removes the square-root behaviour at the lower limit.
  const double t4 = k >= 4 ? lower_limit(4) : 0.0;
  const double lower_above_t4 = lower - t4;
  auto integrand = [&](double s) {
    const double theta = lower + s * s;
    double e = 0.0;
    const double f =
        k - 2 <= 1 ? 1.0 : interpolate(k - 2, schlafli_beta(theta, lower_above_t4 + s * s, t4), &e);
    inner_err = std::max(inner_err, e);
    return 2.0 * s * f;
  };
  const QuadratureResult q = adaptive_simpson(integrand, 0.0, std::sqrt(span), quad);
  // Panels pinned at the depth cap only matter when their residual is large.
  require(q.converged || q.error_estimate <= 1e-8 * std::abs(q.value), ErrorCode::numeric,
          "Schlafli quadrature did not converge");
  const double scale = 2.0 / kPi;
  return {scale * q.value, scale * (q.error_estimate + span * inner_err), false};
}

const SchlafliFunction::Level& SchlafliFunction::level(int k) {
  std::lock_guard lock(mutex_);
  if (auto it = levels_.find(k); it != levels_.end()) return *it->second;
  auto lv = std::make_unique<Level>();
  lv->lower = lower_limit(k);
  const double u_max = std::sqrt(kPi / 4.0 - lv->lower);
  lv->table = ChebyshevInterpolant(0.0, u_max, opts_.chebyshev_nodes);
  double err = 0.0;
  for (int j = 0; j < lv->table.size(); ++j) {
    const double u = lv->table.node(j);
    const SchlafliValue v = integrate(k, lv->lower + u * u);
    lv->table.set_value(j, v.value);
    err = std::max(err, v.error_estimate);
    lv->max_abs = std::max(lv->max_abs, std::abs(v.value));
  }
  // Off-node probes measure the interpolation error.
  for (double frac : {0.3137, 0.6181, 0.9013}) {
    const double u = frac * u_max;
    const SchlafliValue v = integrate(k, lv->lower + u * u);
    err = std::max(err, std::abs(lv->table(u) - v.value) + v.error_estimate);
  }
  lv->error = err;
  return *levels_.emplace(k, std::move(lv)).first->second;
}

SchlafliValue SchlafliFunction::operator()(int n, double alpha) {
  require(n >= 0, ErrorCode::domain, "F_n needs n >= 0");
  require(alpha <= kPi / 4.0 + 1e-15, ErrorCode::domain, "F_n needs alpha <= pi/4");
  if (n <= 1) return {1.0, 0.0, false};
  return integrate(n, std::min(alpha, kPi / 4.0));
}

SchlafliFunction& shared_schlafli() {
  static SchlafliFunction instance;
  return instance;
}

double coxeter_alpha(int n, double phi) {
  require(n >= 3, ErrorCode::domain, "Coxeter bound needs n >= 3");
  require(phi > 0.0 && phi <= kPi / 2.0 + 1e-15, ErrorCode::domain, "Coxeter bound needs 0 < phi <= pi/2");
  const double c = std::max(0.0, std::cos(phi));
  return 0.5 * std::acos(std::min(1.0, c / (1.0 + (n - 2) * c)));
}

BoundReport coxeter_bound(int n, double phi, SchlafliFunction& F) {
  const double alpha = coxeter_alpha(n, phi);
  const SchlafliValue num = F(n - 1, alpha);
  const SchlafliValue den = F(n, alpha);
  require(den.value > 0.0 && !den.below_domain, ErrorCode::domain, "F_n vanishes at this alpha");
  BoundReport r{BoundName::coxeter, {{"n", n}, {"phi", phi}, {"alpha", alpha}}, 2.0 * num.value / den.value,
                BoundMethod::quadrature, 0.0, 0.0};
  r.error_estimate = r.value * (num.error_estimate / num.value + den.error_estimate / den.value);
  return r;
}

KissingTable KissingTable::with_defaults() {
  KissingTable t;
  t.set(1, 2, Provenance::exact);
  t.set(2, 6, Provenance::exact);
  t.set(3, 12, Provenance::exact);
  t.set(4, 24, Provenance::exact);
  return t;
}

void KissingTable::set(int n, long long k, Provenance p) {
  require(n >= 1 && k >= 1, ErrorCode::invalid_argument, "kissing table entries need n >= 1 and k >= 1");
  entries_[n] = {k, p};
}

const KissingTable::Entry& KissingTable::at(int n) const {
  const auto it = entries_.find(n);
  require(it != entries_.end(), ErrorCode::domain, "kissing table has no entry for n = " + std::to_string(n));
  return it->second;
}

double kbar(const KissingTable& table, int n) {
  require(n >= 2, ErrorCode::domain, "kbar needs n >= 2");
  return 0.5 * static_cast<double>(table.at(n - 1).k + table.at(n).k);
}

}  // namespace sphx
