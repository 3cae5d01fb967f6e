#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sphx/geom.hpp"
#include "sphx/random.hpp"
#include "sphx/solids.hpp"

using namespace sphx;
using std::numbers::pi;

TEST_CASE("unit vectors normalize and reject zero") {
  UnitVector u(3.0, 0.0, 4.0);
  CHECK(u[0] == doctest::Approx(0.6));
  CHECK(u[2] == doctest::Approx(0.8));
  CHECK_THROWS_AS(UnitVector(0.0, 0.0, 0.0), Error);
}

TEST_CASE("angular distance") {
  CHECK(angular_distance(Vec3(1, 0, 0), Vec3(-1, 0, 0)) == doctest::Approx(pi));
  CHECK(angular_distance(Vec3(1, 0, 0), Vec3(0, 1, 0)) == doctest::Approx(pi / 2));
  // Tiny separations stay accurate where acos of the dot product would not.
  const double eps = 1e-9;
  CHECK(angular_distance(Vec3(1, 0, 0), Vec3(std::cos(eps), std::sin(eps), 0)) == doctest::Approx(eps).epsilon(1e-6));
}

TEST_CASE("psi of the octahedron and icosahedron") {
  CHECK(SphericalCode::from_vec3(solid_vertices(Solid::octahedron)).psi() == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(SphericalCode::from_vec3(solid_vertices(Solid::icosahedron)).psi() ==
        doctest::Approx(std::acos(1 / std::sqrt(5.0))).epsilon(1e-14));
  CHECK(SphericalCode::from_vec3(solid_vertices(Solid::tetrahedron)).psi() ==
        doctest::Approx(std::acos(-1.0 / 3)).epsilon(1e-14));
}

TEST_CASE("regular triangle area") {
  // Octant: side pi/2, area 4 pi / 8.
  CHECK(regular_triangle_area(pi / 2) == doctest::Approx(pi / 2).epsilon(1e-14));
  // Icosahedron face: side arccos(1/sqrt 5), area 4 pi / 20.
  CHECK(regular_triangle_area(std::acos(1 / std::sqrt(5.0))) == doctest::Approx(pi / 5).epsilon(1e-13));
  // Tetrahedron face: area pi.
  CHECK(regular_triangle_area(std::acos(-1.0 / 3)) == doctest::Approx(pi).epsilon(1e-13));
  CHECK(regular_triangle_side(pi / 5) == doctest::Approx(std::acos(1 / std::sqrt(5.0))).epsilon(1e-12));
  CHECK_THROWS_AS(regular_triangle_area(2.2), Error);
  CHECK_THROWS_AS(regular_triangle_side(0.0), Error);
}

TEST_CASE("signed triangle area follows orientation") {
  const Vec3 a(1, 0, 0), b(0, 1, 0), c(0, 0, 1);
  CHECK(signed_triangle_area(a, b, c) == doctest::Approx(pi / 2));
  CHECK(signed_triangle_area(a, c, b) == doctest::Approx(-pi / 2));
}

TEST_CASE("tangent projection") {
  const Vec3 p = project_to_tangent(Vec3(0, 0, 1), Vec3(1, 1, 1).normalized());
  CHECK(p.x() == doctest::Approx(1.0));
  CHECK(p.y() == doctest::Approx(1.0));
  CHECK(p.z() == doctest::Approx(1.0));
  const auto [e1, e2] = tangent_basis(Vec3(0.3, -0.4, 0.5).normalized());
  CHECK(e1.cross(e2).dot(Vec3(0.3, -0.4, 0.5).normalized()) == doctest::Approx(1.0));
}

TEST_CASE("hull of the cube merges coplanar triangles into squares") {
  const auto pts = solid_vertices(Solid::cube);
  const ConvexHull3 hull = convex_hull(pts);
  CHECK(hull.points.size() == 8);
  CHECK(hull.triangles.size() == 12);
  REQUIRE(hull.facets.size() == 6);
  for (const auto& f : hull.facets) {
    CHECK(f.cycle.size() == 4);
    CHECK(f.offset == doctest::Approx(1 / std::sqrt(3.0)));
  }
}

TEST_CASE("hull collapses duplicates") {
  auto pts = solid_vertices(Solid::octahedron);
  pts.push_back(pts[0]);
  const ConvexHull3 hull = convex_hull(pts);
  CHECK(hull.points.size() == 6);
  CHECK(hull.representative[6] == hull.representative[0]);
}

TEST_CASE("tessellation areas sum to the sphere") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec3> pts;
    for (int i = 0; i < 30; ++i) pts.push_back(rng.unit3());
    const auto t = tessellate(SphericalCode::from_vec3(pts));
    double vs = 0, ds = 0;
    for (double a : t.voronoi_areas) vs += a;
    for (double a : t.delaunay_areas) ds += a;
    CHECK(vs == doctest::Approx(4 * pi).epsilon(1e-12));
    CHECK(ds == doctest::Approx(4 * pi).epsilon(1e-12));
    CHECK(t.delaunay_cells.size() == 2 * 30 - 4);
  }
}

TEST_CASE("octahedron Voronoi cells are equal squares") {
  const auto t = tessellate(SphericalCode::from_vec3(solid_vertices(Solid::octahedron)));
  REQUIRE(t.voronoi_areas.size() == 6);
  for (double a : t.voronoi_areas) CHECK(a == doctest::Approx(2 * pi / 3).epsilon(1e-12));
  for (const auto& cell : t.voronoi_cells) CHECK(cell.size() == 4);
}

TEST_CASE("tessellation needs points around the origin") {
  std::vector<Vec3> pts{Vec3(1, 0, 0.1), Vec3(0, 1, 0.1), Vec3(-1, 0, 0.1), Vec3(0, -1, 0.1), Vec3(0, 0, 1)};
  CHECK_THROWS_AS(tessellate(SphericalCode::from_vec3(pts)), Error);
}

TEST_CASE("solids parse by name") {
  CHECK(parse_solid("dodecahedron") == Solid::dodecahedron);
  CHECK_THROWS_AS(parse_solid("sphere"), Error);
  CHECK(solid_vertices(Solid::dodecahedron).size() == 20);
  CHECK(tangency_points(Solid::dodecahedron).size() == 12);
  CHECK(tangency_points(Solid::cube).size() == 6);
}
