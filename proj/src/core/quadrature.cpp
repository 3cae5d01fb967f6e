#include "sphx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sphx {

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
  int max_depth;
  QuadratureResult result;
};

void simpson_panel(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  st.result.evaluations += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || depth >= st.max_depth) {
    if (depth >= st.max_depth && std::abs(delta) > 15.0 * tol) st.result.converged = false;
    st.result.value += left + right + delta / 15.0;
    st.result.error_estimate += std::abs(delta) / 15.0;
    return;
  }
  simpson_panel(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
  simpson_panel(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const SimpsonOptions& opts) {
  SimpsonState st{f, opts.max_depth, {}};
  if (b == a) return st.result;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  st.result.evaluations = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double tol =
      opts.rel_tol > 0.0 ? std::max(opts.abs_floor, opts.rel_tol * std::abs(whole)) : opts.abs_tol;
  simpson_panel(st, a, b, fa, fm, fb, whole, tol, 0);
  return st.result;
}

ChebyshevInterpolant::ChebyshevInterpolant(double a, double b, int nodes) : a_(a), b_(b) {
  const int n = nodes - 1;
  x_.resize(nodes);
  f_.assign(nodes, 0.0);
  w_.resize(nodes);
  for (int j = 0; j <= n; ++j) {
    const double t = std::cos(std::numbers::pi * j / n);
    x_[j] = 0.5 * (a + b) + 0.5 * (b - a) * t;
    w_[j] = (j % 2 == 0 ? 1.0 : -1.0) * ((j == 0 || j == n) ? 0.5 : 1.0);
  }
}

double ChebyshevInterpolant::operator()(double x) const {
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < x_.size(); ++j) {
    const double d = x - x_[j];
    if (d == 0.0) return f_[j];
    const double c = w_[j] / d;
    num += c * f_[j];
    den += c;
  }
  return num / den;
}

}  // namespace sphx
