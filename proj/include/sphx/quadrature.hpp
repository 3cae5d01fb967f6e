#pragma once

#include <functional>
#include <vector>

namespace sphx {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of |S2 - S1| / 15 over accepted panels
  int evaluations = 0;
  bool converged = true;        // false when the depth cap was hit somewhere
};

struct SimpsonOptions {
  double abs_tol = 1e-10;
  // When positive, the tolerance becomes rel_tol * |coarse estimate| (never
  // below abs_floor) instead of abs_tol.
  double rel_tol = 0.0;
  double abs_floor = 1e-300;
  int max_depth = 40;
};

// Adaptive Simpson with Richardson correction on accepted panels.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const SimpsonOptions& opts = {});

/// Interpolant on [a, b] through Chebyshev points of the second kind,
/// evaluated with the barycentric formula.
class ChebyshevInterpolant {
 public:
  ChebyshevInterpolant() = default;
  ChebyshevInterpolant(double a, double b, int nodes);

  double a() const { return a_; }
  double b() const { return b_; }
  int size() const { return static_cast<int>(x_.size()); }
  double node(int j) const { return x_[j]; }
  void set_value(int j, double v) { f_[j] = v; }

  double operator()(double x) const;

 private:
  double a_ = 0.0, b_ = 1.0;
  std::vector<double> x_, f_, w_;
};

}  // namespace sphx
