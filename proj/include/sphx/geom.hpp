#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sphx/error.hpp"

namespace sphx {

using Vec3 = Eigen::Vector3d;

struct GeomTolerances {
  double norm = 1e-12;         // |u| = 1 after construction
  double orientation = 1e-12;  // signed plane distance treated as zero
  double duplicate = 1e-10;    // points closer than this are collapsed
  double coplanar = 1e-9;      // hull facets merged when planes agree
};

/// A direction in R^d, d >= 2. The constructor normalizes; the zero vector
/// is rejected.
class UnitVector {
 public:
  explicit UnitVector(Eigen::VectorXd coords);
  UnitVector(double x, double y, double z);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }
  const Eigen::VectorXd& coords() const { return coords_; }
  Vec3 vec3() const;

 private:
  Eigen::VectorXd coords_;
};

/// Finite point set on S^{d-1} with its minimum pairwise angular distance.
class SphericalCode {
 public:
  SphericalCode() = default;
  explicit SphericalCode(std::vector<UnitVector> points);
  static SphericalCode from_vec3(std::span<const Vec3> points);

  std::size_t size() const { return points_.size(); }
  int dim() const { return dim_; }
  const UnitVector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<UnitVector>& points() const { return points_; }
  std::vector<Vec3> vec3() const;

  // Defined for size() >= 2; 0 when duplicates are present.
  double psi() const;

 private:
  std::vector<UnitVector> points_;
  int dim_ = 0;
  double psi_ = 0.0;
};

double angular_distance(const UnitVector& u, const UnitVector& v);
double angular_distance(const Vec3& u, const Vec3& v);

double min_pairwise(std::span<const UnitVector> points);

// Area of the regular spherical triangle with side phi, 0 < phi < 2pi/3.
double regular_triangle_area(double phi);
// Inverse of regular_triangle_area, 0 < area < 2pi.
double regular_triangle_side(double area);

// Area of the spherical triangle (a, b, c); negative when the vertices are
// clockwise seen from outside. Vertices must be unit vectors.
double signed_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

// Counterclockwise cycle (seen from outside) of a simple spherical polygon.
double spherical_polygon_area(std::span<const Vec3> cycle);

// Intersection of the ray O->y with the plane tangent to the sphere at x.
Vec3 project_to_tangent(const Vec3& x, const Vec3& y);

// Orthonormal pair (e1, e2) spanning the tangent plane at x with
// e1 x e2 = x.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& x);

/// Convex hull of points on S^2. Triangles are outward oriented; facets
/// group coplanar triangles into convex polygons (several points on a common
/// circle produce one polygonal facet).
struct ConvexHull3 {
  struct Facet {
    std::vector<int> cycle;  // counterclockwise from outside
    Vec3 normal;             // outward unit normal
    double offset = 0.0;     // normal . p for points p of the facet
  };
  std::vector<Vec3> points;                   // after duplicate collapse
  std::vector<int> source_index;              // input index of each point
  std::vector<int> representative;            // input index -> point index
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> triangle_facet;
  std::vector<Facet> facets;
};

ConvexHull3 convex_hull(std::span<const Vec3> points, const GeomTolerances& tol = {});

struct SphericalTessellation {
  SphericalCode sites;                             // duplicates collapsed
  std::vector<int> collapsed;                      // input indices dropped as duplicates
  std::vector<std::vector<Vec3>> voronoi_cells;    // one cycle per site
  std::vector<std::array<int, 3>> delaunay_cells;  // site indices
  std::vector<Vec3> circumcenters;                 // one per Delaunay cell
  std::vector<double> voronoi_areas;
  std::vector<double> delaunay_areas;
};

SphericalTessellation tessellate(const SphericalCode& code, const GeomTolerances& tol = {});

}  // namespace sphx
