#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sphx/bounds.hpp"
#include "sphx/error.hpp"
#include "sphx/optimize.hpp"

using namespace sphx;
using std::numbers::pi;

namespace {

OptimizerConfig small_budget(int restarts = 12) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.iterations_per_restart = 2000;
  return cfg;
}

double recomputed_psi(const TammesResult& r) { return SphericalCode(r.code.points()).psi(); }

}  // namespace

TEST_CASE("config validation") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.softmin_beta_schedule.clear();
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = OptimizerConfig{};
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = OptimizerConfig{};
  cfg.softmin_beta_schedule = {50.0, -1.0, 10.0, 20.0};
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("small Tammes instances") {
  const auto r4 = tammes_solve(4, small_budget());
  CHECK(std::abs(r4.psi - std::acos(-1.0 / 3)) < 1e-6);
  CHECK(r4.psi == doctest::Approx(recomputed_psi(r4)).epsilon(1e-12));
  REQUIRE(r4.certificate.has_value());
  CHECK(r4.psi <= *r4.certificate + 1e-9);

  const auto r6 = tammes_solve(6, small_budget());
  CHECK(std::abs(r6.psi - pi / 2) < 1e-6);
  const auto r2 = tammes_solve(2, small_budget(2));
  CHECK(r2.psi == doctest::Approx(pi));
  CHECK_THROWS_AS(tammes_solve(1, small_budget()), Error);
}

TEST_CASE("Tammes psi respects the cap-count bound") {
  for (int n = 4; n <= 9; ++n) {
    const auto r = tammes_solve(n, small_budget(6));
    INFO("n = " << n);
    CHECK(ft_code_bound(r.psi).value >= n - 1e-6);
  }
}

TEST_CASE("antipodal solutions are closed under negation") {
  const auto r = antipodal_solve(4, small_budget());
  CHECK(std::abs(r.psi - std::acos(1.0 / 3)) < 1e-6);
  REQUIRE(r.code.size() == 8);
  const auto pts = r.code.vec3();
  for (const auto& p : pts) {
    double best = 10;
    for (const auto& q : pts) best = std::min(best, (p + q).norm());
    CHECK(best < 1e-9);
  }
  CHECK_THROWS_AS(antipodal_solve(1, small_budget()), Error);
}

TEST_CASE("hemisphere search keeps points on the closed hemisphere") {
  const auto r = hemisphere_code_search(4, pi / 2, small_budget());
  CHECK(r.feasible);
  for (const auto& p : r.code.vec3()) CHECK(p.z() >= -1e-12);
  // Five points at 100 degrees do not fit on a hemisphere.
  const auto tight = hemisphere_code_search(5, 100 * pi / 180, small_budget(4));
  CHECK_FALSE(tight.feasible);
  CHECK(tight.psi < tight.target);
}

TEST_CASE("contact maximization for tiny N") {
  const auto r = max_contacts(4, std::nullopt, small_budget(8));
  CHECK(r.contacts == 6);
  CHECK_THROWS_AS(max_contacts(4, 2.0, small_budget()), Error);
}

TEST_CASE("contact counting") {
  const std::vector<Vec3> square{Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(-1, 0, 0), Vec3(0, -1, 0)};
  CHECK(count_contacts(square, pi / 2, 1e-9) == 4);
  CHECK(count_contacts(square, pi / 2 - 0.1, 1e-9) == 0);
}

TEST_CASE("results do not depend on the thread count") {
  auto cfg = small_budget(8);
  const auto a = tammes_solve(7, cfg);
  cfg.threads = 4;
  const auto b = tammes_solve(7, cfg);
  CHECK(a.psi == b.psi);
  CHECK(a.best_restart == b.best_restart);
  for (std::size_t i = 0; i < a.code.size(); ++i) CHECK((a.code[i].coords() - b.code[i].coords()).norm() == 0.0);
}
