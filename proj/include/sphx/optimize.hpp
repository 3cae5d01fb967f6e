#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sphx/geom.hpp"

namespace sphx {

enum class TammesMode { free, antipodal, hemisphere, max_contacts };
const char* to_string(TammesMode mode);

struct OptimizerConfig {
  int restarts = 200;
  int iterations_per_restart = 5000;
  std::uint64_t master_seed = 0;
  std::vector<double> softmin_beta_schedule{50.0, 200.0, 1000.0, 5000.0};
  std::vector<double> step_schedule{1e-2, 3e-3, 1e-3, 3e-4};
  double convergence_tol = 1e-10;
  // Exact contact classification after polish.
  double contact_tol = 1e-6;
  // Smoothed contact width at the end of a max-contacts search.
  double search_contact_eps = 1e-3;
  int threads = 1;

  // Throws invalid_argument on empty or malformed schedules.
  void validate() const;
};

struct TammesResult {
  SphericalCode code;
  double psi = 0.0;
  TammesMode mode = TammesMode::free;
  // Winning restart; -1 in max-contacts mode when the Tammes optimum itself won.
  int best_restart = 0;
  std::optional<double> certificate;  // upper bound on psi, when known
  // hemisphere mode
  double target = 0.0;
  bool feasible = true;
  // max-contacts mode: contact distance and exact edge count
  double contact_distance = 0.0;
  int contacts = 0;
};

// Tammes problem: N points on S^2 maximizing the minimum angular distance.
TammesResult tammes_solve(int n, const OptimizerConfig& cfg);

// Antipodal variant on M free representatives; the result holds all 2M points.
TammesResult antipodal_solve(int m, const OptimizerConfig& cfg);

// Points on the closed hemisphere z >= 0; feasible iff psi >= target - 1e-8.
TammesResult hemisphere_code_search(int count, double target, const OptimizerConfig& cfg);

// Largest number of contacts among N points with minimum distance d; when d
// is absent it is searched on a grid below the Tammes optimum.
TammesResult max_contacts(int n, std::optional<double> d, const OptimizerConfig& cfg);

// Pairs within tol of psi(code), given all pairs are >= psi - tol.
int count_contacts(const std::vector<Vec3>& points, double distance, double tol);

}  // namespace sphx
