#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sphx/bounds.hpp"
#include "sphx/error.hpp"
#include "sphx/isoperimetric.hpp"
#include "sphx/random.hpp"
#include "sphx/solids.hpp"

using namespace sphx;
using std::numbers::pi;

namespace {

CircumscribedPolyhedron around(Solid s) { return circumscribe(SphericalCode::from_vec3(tangency_points(s))); }

SphericalCode cross_polytope(int d) {
  std::vector<UnitVector> pts;
  for (int k = 0; k < d; ++k)
    for (double s : {1.0, -1.0}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      v[k] = s;
      pts.emplace_back(v);
    }
  return SphericalCode(std::move(pts));
}

}  // namespace

TEST_CASE("cube around the unit sphere") {
  const auto P = around(Solid::cube);
  CHECK(P.surface_area == doctest::Approx(24).epsilon(1e-14));
  CHECK(P.volume == doctest::Approx(8).epsilon(1e-14));
  CHECK(P.vertices.size() == 8);
  CHECK(P.edge_count == 12);
  for (const auto& v : P.vertices) CHECK(v.norm() >= 1.0);
  CHECK(std::abs(iq(P).value - pi / 6) < 1e-12);
}

TEST_CASE("tetrahedron with unit insphere has edge 2 sqrt 6") {
  const auto P = around(Solid::tetrahedron);
  const double edge = 2 * std::sqrt(6.0);
  CHECK(P.surface_area == doctest::Approx(std::sqrt(3.0) * edge * edge).epsilon(1e-13));
  CHECK(P.volume == doctest::Approx(edge * edge * edge / (6 * std::sqrt(2.0))).epsilon(1e-13));
  CHECK(iq(P).value == doctest::Approx(pi / (6 * std::sqrt(3.0))).epsilon(1e-13));
}

TEST_CASE("Platonic isoperimetric quotients") {
  const std::pair<Solid, double> cases[] = {{Solid::tetrahedron, 0.302},
                                            {Solid::cube, 0.524},
                                            {Solid::octahedron, 0.605},
                                            {Solid::dodecahedron, 0.755},
                                            {Solid::icosahedron, 0.829}};
  for (const auto& [s, expected] : cases) {
    const auto P = around(s);
    const auto q = iq(P);
    INFO(to_string(s));
    CHECK(std::abs(q.value - expected) < 1e-3);
    CHECK(std::abs(q.value - q.shortcut) < 1e-13);
    CHECK(P.volume_residual < 1e-12);
  }
}

TEST_CASE("unbounded circumscription is rejected") {
  std::vector<Vec3> pts;
  for (int k = 0; k < 4; ++k) pts.emplace_back(std::cos(2 * pi * k / 4), std::sin(2 * pi * k / 4), 0.3);
  pts.emplace_back(0, 0, 1);
  CHECK_THROWS_AS(circumscribe(SphericalCode::from_vec3(pts)), Error);
  try {
    circumscribe(SphericalCode::from_vec3(pts));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unbounded);
  }
}

TEST_CASE("projection identities on the Platonic solids") {
  for (Solid s : {Solid::tetrahedron, Solid::cube, Solid::octahedron, Solid::dodecahedron, Solid::icosahedron}) {
    const auto P = around(s);
    const auto r = projection_report(P);
    INFO(to_string(s));
    CHECK(r.face_area_sum_check < 1e-9);
    CHECK(r.delaunay_area_sum_check < 1e-9);
    CHECK(r.projected_vertex_match < 1e-9);
    CHECK(r.preimage_relative_error < 1e-9);
  }
  const auto cube = projection_report(around(Solid::cube));
  for (double a : cube.voronoi_areas) CHECK(a == doctest::Approx(2 * pi / 3).epsilon(1e-12));
}

TEST_CASE("projection identities on random tangency sets") {
  Rng rng(11);
  int built = 0;
  while (built < 25) {
    const int f = 4 + static_cast<int>(rng.uniform() * 17);
    std::vector<Vec3> pts;
    for (int i = 0; i < f; ++i) pts.push_back(rng.unit3());
    CircumscribedPolyhedron P;
    try {
      P = circumscribe(SphericalCode::from_vec3(pts));
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::unbounded);
      continue;
    }
    ++built;
    const auto r = projection_report(P);
    CHECK(P.volume_residual < 1e-12);
    CHECK(r.face_area_sum_check < 1e-9);
    CHECK(r.preimage_relative_error < 1e-9);
    CHECK(r.projected_vertex_match < 1e-9);
    CHECK(iq(P).value <= goldberg_ft_rhs(f).value + 1e-9);
  }
}

TEST_CASE("lifted regular triangles") {
  CHECK(std::abs(rho(pi / 2) - 3) < 1e-12);
  CHECK(std::abs(8 * rho(pi / 2) - around(Solid::cube).surface_area) < 1e-12);
  CHECK(20 * rho(pi / 5) == doctest::Approx(around(Solid::dodecahedron).surface_area).epsilon(1e-12));
  CHECK(rho(1e-6) / 1e-6 == doctest::Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS(rho(0.0), Error);
  CHECK_THROWS_AS(rho(2 * pi), Error);
}

TEST_CASE("lifted triangle bound equals the polyhedral IQ bound") {
  for (int f = 4; f <= 64; ++f) CHECK(std::abs(lifted_triangle_bound(f) - goldberg_ft_rhs(f).value) < 1e-9);
  CHECK(std::abs(lifted_triangle_bound(6) - pi / 6) < 1e-12);
  CHECK_THROWS_AS(lifted_triangle_bound(3), Error);
}

TEST_CASE("sphere areas and vertex counts") {
  CHECK(omega_sphere(2) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(omega_sphere(3) == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(std::abs(omega_sphere(4) - 2 * pi * pi) < 1e-12);
  CHECK_THROWS_AS(omega_sphere(1), Error);
  for (int n = 4; n <= 100; ++n) CHECK(upper_bound_vertices(3, n) == 2 * n - 4);
  CHECK(upper_bound_vertices(3, 6) == 8);
  CHECK(upper_bound_vertices(4, 5) == 5);
  CHECK_THROWS_AS(upper_bound_vertices(4, 4), Error);
}

TEST_CASE("Monte Carlo lift area in dimension 3") {
  const MonteCarloOptions mc{.seed = 3, .samples = 200'000, .threads = 1};
  for (double t : {pi / 2, pi / 5}) {
    const auto e = rho_d(3, t, mc);
    CHECK(std::abs(e.value - rho(t)) < 3 * e.standard_error);
    CHECK(std::abs(e.area - t) < 1e-4);
  }
  CHECK_THROWS_AS(rho_d(3, 2 * pi + 0.1, mc), Error);
  CHECK_THROWS_AS(rho_d(3, 1.0, MonteCarloOptions{.seed = 0, .samples = 100, .threads = 1}), Error);
  CHECK_THROWS_AS(rho_d(2, 1.0, mc), Error);
}

TEST_CASE("Monte Carlo lift area is thread independent") {
  const MonteCarloOptions one{.seed = 5, .samples = 150'000, .threads = 1};
  MonteCarloOptions many = one;
  many.threads = 4;
  const auto a = rho_d(4, 0.5, one), b = rho_d(4, 0.5, many);
  CHECK(a.value == b.value);
  CHECK(a.standard_error == b.standard_error);
}

TEST_CASE("hypercube around the unit 3-sphere") {
  const MonteCarloOptions mc{.seed = 1, .samples = 400'000, .threads = 1};
  const auto P = circumscribe(cross_polytope(4), mc);
  CHECK(P.monte_carlo);
  CHECK(P.vertices.size() == 16);
  CHECK(P.volume == doctest::Approx(16));
  CHECK(std::abs(P.surface_area - 64) < 4 * P.surface_stderr);
  const auto q = iq(P);
  CHECK(q.standard_error > 0);
  // Exact value 4^3 * 2 pi^2 * 16^3 / 64^4.
  CHECK(std::abs(q.value - 2 * pi * pi / 64) < 4 * q.standard_error);
}

TEST_CASE("open hemisphere in dimension 4 is unbounded") {
  std::vector<UnitVector> pts;
  for (int k = 0; k < 6; ++k) {
    Eigen::VectorXd v(4);
    v << std::cos(k), std::sin(k), std::cos(2.0 * k), 0.5;
    pts.emplace_back(v);
  }
  CHECK_THROWS_AS(circumscribe(SphericalCode(std::move(pts)), MonteCarloOptions{.seed = 0, .samples = 10000, .threads = 1}), Error);
}

TEST_CASE("conjecture report on the dodecahedron equality case") {
  const auto recs = conjecture_report(around(Solid::dodecahedron));
  REQUIRE(recs.size() == 5);
  CHECK(recs[0].bound_name == "vertex_lift_conj");
  CHECK(std::abs(recs[0].margin) < 1e-9);
  CHECK(std::abs(recs[1].margin) < 1e-9);
  CHECK(recs[2].bound_name == "goldberg_ft");
  CHECK_FALSE(recs[2].conjectured);
  const auto cube = conjecture_report(around(Solid::cube));
  CHECK(std::abs(cube[1].rhs - pi / 6) < 1e-6);
}
