#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sphx/bounds.hpp"
#include "sphx/error.hpp"
#include "sphx/geom.hpp"

using namespace sphx;
using std::numbers::pi;

namespace {

// Independent nested quadrature for the recursive integral family, written
// directly from the definition with theta = lower + u^2.
double oracle_beta(double theta) {
  const double x = 1.0 / std::cos(2 * theta) - 2.0;
  return 0.5 * std::acos(1.0 / std::max(1.0, x));
}

double oracle_F(int n, double a) {
  if (n <= 1) return 1.0;
  const double lo = 0.5 * std::acos(1.0 / (n - 1));
  if (a <= lo) return 0.0;
  if (n == 2) return 2 * a / pi;
  if (n == 3) return 2 / pi * (a - lo);
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&](double u) { return oracle_F(n - 2, oracle_beta(lo + u * u)) * 2 * u; };
  return 2 / pi * gauss_kronrod<double, 31>::integrate(f, 0.0, std::sqrt(a - lo), 12, 1e-13);
}

}  // namespace

TEST_CASE("omega_n") {
  CHECK(omega_n(12) == doctest::Approx(pi / 5).epsilon(1e-15));
  CHECK(omega_n(4) == doctest::Approx(pi / 3).epsilon(1e-15));
  CHECK(omega_n(3) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK_THROWS_AS(omega_n(2), Error);
}

TEST_CASE("packing and covering density bounds") {
  CHECK(ft_packing_bound(3).value == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(ft_packing_bound(4).value == doctest::Approx(2 - 2 / std::sqrt(3.0)).epsilon(1e-14));
  // Tight at N = 12: twelve caps of radius psi/2 around icosahedron vertices.
  const double r = std::acos(1 / std::sqrt(5.0)) / 2;
  CHECK(std::abs(ft_packing_bound(12).value - 12 * 2 * pi * (1 - std::cos(r)) / (4 * pi)) < 1e-12);
  CHECK(ft_covering_bound(4).value == doctest::Approx(4.0 / 3).epsilon(1e-14));
  CHECK(ft_covering_bound(3).value == doctest::Approx(1.5).epsilon(1e-14));
  // Tight at N = 12: caps reaching the icosahedron face centers.
  const double g = (1 + std::sqrt(5.0)) / 2;
  const Vec3 a(0, 1, g), b(0, -1, g), c(g, 0, 1);
  const double cos_cover = a.normalized().dot((a + b + c).normalized());
  CHECK(std::abs(ft_covering_bound(12).value - 6 * (1 - cos_cover)) < 1e-12);
  for (int n : {3, 10, 100, 10000}) {
    const double v = ft_packing_bound(n).value;
    CHECK(v > 0);
    CHECK(v < 1);
  }
  CHECK(std::abs(ft_packing_bound(1000000).value - pi / std::sqrt(12.0)) < 1e-3);
}

TEST_CASE("cap-count bound") {
  CHECK(std::abs(ft_code_bound(std::acos(1 / std::sqrt(5.0))).value - 12) < 1e-9);
  CHECK(std::abs(ft_code_bound(pi / 2).value - 6) < 1e-9);
  const auto b = ft_code_bound(pi / 3);
  CHECK(b.value == doctest::Approx(2 * pi / regular_triangle_area(pi / 3) + 2));
  CHECK(b.floor_value() == 13);
  CHECK_THROWS_AS(ft_code_bound(2.1), Error);
  // The Tammes ceiling inverts the bound.
  CHECK(ft_tammes_ceiling(12) == doctest::Approx(std::acos(1 / std::sqrt(5.0))).epsilon(1e-10));
  CHECK(ft_tammes_ceiling(6) == doctest::Approx(pi / 2).epsilon(1e-10));
}

TEST_CASE("recursive integrals: closed forms for low levels") {
  SchlafliFunction F;
  for (double a : {0.1, 0.3, 0.5, 0.7}) {
    CHECK(F(0, a).value == 1.0);
    CHECK(F(1, a).value == 1.0);
    const auto f2 = F(2, a);
    CHECK(std::abs(f2.value - 2 * a / pi) < 1e-10);
    CHECK(std::abs(f2.value - 2 * a / pi) <= f2.error_estimate + 1e-13);
  }
  for (double a : {0.55, 0.6, 0.7}) CHECK(std::abs(F(3, a).value - 2 / pi * (a - pi / 6)) < 1e-10);
  CHECK(F(3, 0.4).below_domain);
  CHECK(F(3, 0.4).value == 0.0);
}

TEST_CASE("recursive integrals against nested quadrature") {
  SchlafliFunction F;
  for (int n : {4, 5, 6})
    for (double a : {0.65, 0.7, 0.75}) {
      INFO("n = " << n << ", alpha = " << a);
      CHECK(std::abs(F(n, a).value - oracle_F(n, a)) < 1e-9);
    }
}

TEST_CASE("recursive integrals against high-precision reference values") {
  // 30-digit reference evaluations of the same recursion.
  const double ref[] = {0.477464829275686,     0.144131495942353,     0.030679856761308,    0.004858247002746,
                        0.000587700715973372, 5.48050640415373e-05, 3.9171857642863e-06};
  SchlafliFunction F;
  for (int n = 2; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(F(n, 0.75).value == doctest::Approx(ref[n - 2]).epsilon(1e-9));
  }
  CHECK(F(4, 0.7).value == doctest::Approx(0.016420080347877436).epsilon(1e-9));
  CHECK(F(5, 0.7).value == doctest::Approx(0.0012088001287751322).epsilon(1e-9));
}

TEST_CASE("simplex bound in higher dimensions") {
  const double ref[] = {13.39733257143766, 26.44009910052953, 48.70260938931672, 85.81413709141856,
                        146.570478475287, 244.622617045413};
  for (int n = 3; n <= 8; ++n) {
    const auto b = coxeter_bound(n, pi / 3);
    INFO("n = " << n);
    CHECK(b.value == doctest::Approx(ref[n - 3]).epsilon(1e-9));
    CHECK(b.error_estimate < 1e-6);
    CHECK(b.method == BoundMethod::quadrature);
  }
  CHECK(coxeter_bound(4, pi / 5).floor_value() == 120);
  // Same floor as the cap-count bound on S^2.
  for (double phi : {pi / 3, pi / 2, std::acos(1 / std::sqrt(5.0))})
    CHECK(coxeter_bound(3, phi).floor_value() == ft_code_bound(phi).floor_value());
  CHECK_THROWS_AS(coxeter_bound(2, pi / 3), Error);
}

TEST_CASE("polyhedral IQ bound") {
  CHECK(goldberg_ft_rhs(4).value == doctest::Approx(0.302300).epsilon(1e-5));
  CHECK(std::abs(goldberg_ft_rhs(6).value - pi / 6) < 1e-12);
  CHECK(goldberg_ft_rhs(12).value == doctest::Approx(0.754697).epsilon(1e-5));
  double prev = 0;
  for (int f = 4; f <= 200; ++f) {
    const double v = goldberg_ft_rhs(f).value;
    CHECK(v < 1);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(goldberg_ft_rhs(3), Error);
}

TEST_CASE("conjecture evaluators") {
  CHECK(ft_vertex_conjecture_rhs(12).implied_iq == doctest::Approx(0.8288).epsilon(1e-4));
  CHECK(std::abs(ft_vertex_conjecture_rhs(4).implied_iq - goldberg_ft_rhs(4).value) < 1e-9);
  CHECK(std::abs(ft_edge_conjecture_rhs(4, 4, 6).implied_iq - goldberg_ft_rhs(4).value) < 1e-9);
  CHECK(std::abs(ft_edge_conjecture_rhs(6, 8, 12).implied_iq - pi / 6) < 1e-9);
  CHECK(std::abs(ft_edge_conjecture_rhs(20, 12, 30).implied_iq - ft_vertex_conjecture_rhs(12).implied_iq) < 1e-9);
  // The cube's F^3/V^2 = 216 clears the vertex conjecture at v = 8.
  CHECK(ft_vertex_conjecture_rhs(8).value < 216);
  CHECK_THROWS_AS(ft_edge_conjecture_rhs(6, 8, 13), Error);
  CHECK_THROWS_AS(ft_vertex_conjecture_rhs(3), Error);
}

TEST_CASE("cap kissing count") {
  CHECK(kappa(std::acos(1 / std::sqrt(5.0))) == 5);
  CHECK(kappa(pi / 2) == 4);
  CHECK(kappa(pi / 3) == 5);
  CHECK(kappa_real(1e-6) == doctest::Approx(6.0).epsilon(1e-9));
  CHECK_THROWS_AS(kappa(0.0), Error);
}

TEST_CASE("kissing table averages") {
  const auto t = KissingTable::with_defaults();
  CHECK(kbar(t, 2) == 4.0);
  CHECK(kbar(t, 3) == 9.0);
  CHECK(kbar(t, 4) == 18.0);
  CHECK_THROWS_AS(kbar(t, 5), Error);
  auto u = t;
  u.set(5, 40, Provenance::bound);
  CHECK(kbar(u, 5) == 32.0);
  CHECK(u.at(5).provenance == Provenance::bound);
}
