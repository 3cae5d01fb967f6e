#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sphx/quadrature.hpp"

namespace sphx {

enum class BoundName { ft_packing, ft_covering, ft_code, coxeter, goldberg_ft, ft_vertex_conj, ft_edge_conj };
enum class BoundMethod { closed_form, quadrature, monte_carlo };

const char* to_string(BoundName name);
const char* to_string(BoundMethod method);

struct BoundReport {
  BoundName name;
  std::vector<std::pair<std::string, double>> params;
  double value = 0.0;
  BoundMethod method = BoundMethod::closed_form;
  double error_estimate = 0.0;
  // Implied IQ ceiling 36 pi / value for the F^3/V^2 conjecture bounds.
  double implied_iq = 0.0;

  // floor(value + 1e-9); keeps exact integers such as 120 intact.
  long long floor_value() const;
};

inline constexpr double kFloorSlack = 1e-9;

double omega_n(int n);
BoundReport ft_packing_bound(int n);
BoundReport ft_covering_bound(int n);
BoundReport ft_code_bound(double phi);
BoundReport goldberg_ft_rhs(int faces);
BoundReport ft_vertex_conjecture_rhs(int vertices);
BoundReport ft_edge_conjecture_rhs(int faces, int vertices, int edges);

// Largest phi the Fejes Toth code bound allows for n points, i.e. an upper
// bound on the Tammes optimum d_n (pi for n = 2).
double ft_tammes_ceiling(int n);

// Real-valued count pi / arcsin(sin(d/2) / sin d) before flooring.
double kappa_real(double d);
// Kissing number of a spherical cap of diameter d, 0 < d <= 2pi/3.
int kappa(double d);

struct SchlafliValue {
  double value = 0.0;
  double error_estimate = 0.0;
  bool below_domain = false;  // alpha under the lower integration limit; value is 0
};

struct SchlafliOptions {
  SimpsonOptions quadrature{.abs_tol = 1e-10, .rel_tol = 1e-12};
  int chebyshev_nodes = 256;
};

/// The recursive integral family F_n behind the simplex-density bound.
/// Each level F_k, k >= 2, is tabulated once on a Chebyshev grid in
/// u = sqrt(alpha - lower_k) and reused by the level above. Thread-safe.
class SchlafliFunction {
 public:
  explicit SchlafliFunction(SchlafliOptions opts = {});
  ~SchlafliFunction();
  SchlafliFunction(const SchlafliFunction&) = delete;
  SchlafliFunction& operator=(const SchlafliFunction&) = delete;

  // Lower integration limit arcsec(n - 1) / 2 of F_n, n >= 2.
  static double lower_limit(int n);

  SchlafliValue operator()(int n, double alpha);

 private:
  struct Level;
  const Level& level(int k);
  SchlafliValue integrate(int k, double alpha);
  double interpolate(int k, double alpha, double* err);

  SchlafliOptions opts_;
  std::recursive_mutex mutex_;
  std::map<int, std::unique_ptr<Level>> levels_;
};

SchlafliFunction& shared_schlafli();

// sec 2 alpha = sec phi + n - 2.
double coxeter_alpha(int n, double phi);
BoundReport coxeter_bound(int n, double phi, SchlafliFunction& F = shared_schlafli());

enum class Provenance { exact, bound };
const char* to_string(Provenance p);

class KissingTable {
 public:
  struct Entry {
    long long k;
    Provenance provenance;
  };

  // k(1)=2, k(2)=6, k(3)=12, k(4)=24.
  static KissingTable with_defaults();

  void set(int n, long long k, Provenance p);
  bool contains(int n) const { return entries_.count(n) > 0; }
  const Entry& at(int n) const;
  const std::map<int, Entry>& entries() const { return entries_; }

 private:
  std::map<int, Entry> entries_;
};

// (k(n-1) + k(n)) / 2.
double kbar(const KissingTable& table, int n);

}  // namespace sphx
