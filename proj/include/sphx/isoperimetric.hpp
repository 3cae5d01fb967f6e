#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sphx/geom.hpp"

namespace sphx {

struct MonteCarloOptions {
  std::uint64_t seed = 0;
  long long samples = 1'000'000;
  int threads = 1;
};

/// Intersection of the halfspaces {p : p . x_i <= 1}. In dimension 3 faces,
/// area and volume are exact; for d >= 4 area and volume are Monte Carlo
/// estimates with standard errors.
struct CircumscribedPolyhedron {
  SphericalCode tangency_points;  // duplicates collapsed
  int dimension = 3;
  std::vector<Eigen::VectorXd> vertices;
  // Vertex indices of the face tangent at each tangency point;
  // counterclockwise seen from outside when d = 3.
  std::vector<std::vector<int>> faces;
  std::vector<double> face_areas;  // d = 3 only
  double surface_area = 0.0;
  double volume = 0.0;
  bool monte_carlo = false;
  double surface_stderr = 0.0;
  double volume_stderr = 0.0;
  // |V - F/d| / V; F and V come from independent computations.
  double volume_residual = 0.0;
  int edge_count = 0;  // d = 3 only
};

CircumscribedPolyhedron circumscribe(const SphericalCode& x, const MonteCarloOptions& mc = {});

struct IqValue {
  double value = 0.0;     // d^{d-1} Omega_d V^{d-1} / F^d
  double shortcut = 0.0;  // Omega_d / F, using V = F / d
  double standard_error = 0.0;
};

IqValue iq(const CircumscribedPolyhedron& p);

struct ProjectionReport {
  std::vector<double> voronoi_areas;
  std::vector<double> delaunay_areas;
  // Largest angular gap between projected polyhedron vertices and Voronoi
  // vertices, matched both ways.
  double projected_vertex_match = 0.0;
  double face_area_sum_check = 0.0;      // |sum voronoi - 4 pi|
  double delaunay_area_sum_check = 0.0;  // |sum delaunay - 4 pi|
  // Lifted Delaunay cells, each integrated as sec^3 over its spherical image.
  std::vector<double> preimage_areas;
  double preimage_area_sum = 0.0;
  double preimage_relative_error = 0.0;  // |sum - F| / F
};

ProjectionReport projection_report(const CircumscribedPolyhedron& p);

// Area of the lift of a regular spherical triangle of area t onto the
// tangent planes at its vertices, 0 < t < 2 pi.
double rho(double t);

// tau / rho(tau) with tau = 2 pi / (f - 2).
double lifted_triangle_bound(int f);

// Area of S^{d-1}.
double omega_sphere(int d);

// Largest vertex count of a d-polytope with n facets.
long long upper_bound_vertices(int d, int n);

struct RhoEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  double inner_product = 0.0;  // common inner product of the simplex vertices
  double area = 0.0;           // Monte Carlo area at that inner product
};

// Lift area of the regular spherical simplex with d vertices on S^{d-1} and
// area t, 0 < t < Omega_d / 2.
RhoEstimate rho_d(int d, double t, const MonteCarloOptions& mc = {});

/// One evaluated inequality. margin >= 0 means the inequality holds at these
/// values; conjectured bounds are reported, never enforced.
struct ConjectureRecord {
  std::string bound_name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double standard_error = 0.0;
  bool conjectured = true;
};

// IQ against Omega_d / (v rho_d(Omega_d / v)) and tau / rho_d(tau) with
// tau = Omega_d / h_d(n); in dimension 3 also the proven face bound and
// the two F^3/V^2 conjectures.
std::vector<ConjectureRecord> conjecture_report(const CircumscribedPolyhedron& p, const MonteCarloOptions& mc = {});

}  // namespace sphx
