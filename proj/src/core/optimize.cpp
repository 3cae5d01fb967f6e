#include "sphx/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sphx/bounds.hpp"
#include "sphx/error.hpp"
#include "sphx/parallel.hpp"
#include "sphx/random.hpp"

namespace sphx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBarrier = 1e-4;
constexpr double kHemisphereSlack = 1e-8;

// Distance between representative a and sign * representative b.
struct Pair {
  int a;
  int b;
  double sign;
};

struct Problem {
  int reps = 0;
  std::vector<Pair> pairs;
  bool antipodal = false;
  bool hemisphere = false;
};

Problem make_problem(int reps, bool antipodal, bool hemisphere) {
  Problem p{reps, {}, antipodal, hemisphere};
  for (int i = 0; i < reps; ++i)
    for (int j = i + 1; j < reps; ++j) {
      p.pairs.push_back({i, j, 1.0});
      if (antipodal) p.pairs.push_back({i, j, -1.0});
    }
  return p;
}

using Config = std::vector<Vec3>;

double pair_distance(const Config& x, const Pair& p) {
  return std::atan2(x[p.a].cross(x[p.b]).norm(), p.sign * x[p.a].dot(x[p.b]));
}

double config_psi(const Problem& P, const Config& x) {
  double best = kPi;
  for (const auto& p : P.pairs) best = std::min(best, pair_distance(x, p));
  return best;
}

void restore(const Problem& P, Vec3& v) {
  if (P.hemisphere && v.z() < 0.0) v.z() = 0.0;
  const double n = v.norm();
  if (n > 0.0) v /= n;
}

Vec3 random_tangent(const Vec3& x, Rng& rng) {
  const Vec3 r = rng.unit3();
  Vec3 t = r - r.dot(x) * x;
  if (t.norm() < 1e-12) t = tangent_basis(x).first;
  return t.normalized();
}

// Unit tangent directions at x[a] and x[b] along which the pair distance grows.
void separation_directions(const Config& x, const Pair& p, Rng& rng, Vec3& ga, Vec3& gb) {
  const Vec3 yb = p.sign * x[p.b];
  const double c = x[p.a].dot(yb);
  Vec3 ua = yb - c * x[p.a];
  Vec3 ub = x[p.a] - c * yb;
  const double na = ua.norm();
  const double nb = ub.norm();
  ga = na > 1e-12 ? Vec3(-ua / na) : random_tangent(x[p.a], rng);
  gb = nb > 1e-12 ? Vec3(-p.sign * ub / nb) : random_tangent(x[p.b], rng);
}

Config random_start(const Problem& P, Rng& rng) {
  Config x(P.reps);
  for (auto& v : x) {
    v = rng.unit3();
    if (P.hemisphere) v.z() = std::abs(v.z());
  }
  return x;
}

void softmin_ascent(const Problem& P, Config& x, double beta, double step, int iterations, Rng& rng) {
  std::vector<double> d(P.pairs.size());
  std::vector<Vec3> g(P.reps);
  for (int it = 0; it < iterations; ++it) {
    double dmin = kPi;
    for (std::size_t k = 0; k < P.pairs.size(); ++k) {
      d[k] = pair_distance(x, P.pairs[k]);
      dmin = std::min(dmin, d[k]);
    }
    std::fill(g.begin(), g.end(), Vec3::Zero());
    for (std::size_t k = 0; k < P.pairs.size(); ++k) {
      double w = std::exp(-beta * (d[k] - dmin));
      if (d[k] < kBarrier) w += 10.0;
      if (w < 1e-300) continue;
      Vec3 ga, gb;
      separation_directions(x, P.pairs[k], rng, ga, gb);
      g[P.pairs[k].a] += w * ga;
      g[P.pairs[k].b] += w * gb;
    }
    double gmax = 0.0;
    for (const auto& v : g) gmax = std::max(gmax, v.norm());
    if (gmax == 0.0) return;
    for (int i = 0; i < P.reps; ++i) {
      x[i] += (step / gmax) * g[i];
      restore(P, x[i]);
    }
  }
}

// Subgradient ascent on the true minimum: only points in near-minimal pairs
// move, and a step is kept only when psi grows.
void active_ascent(const Problem& P, Config& x, double min_step, Rng& rng) {
  double psi = config_psi(P, x);
  double step = 1e-3;
  std::vector<Vec3> g(P.reps);
  for (int it = 0; it < 4000 && step > min_step; ++it) {
    std::fill(g.begin(), g.end(), Vec3::Zero());
    for (const auto& p : P.pairs) {
      if (pair_distance(x, p) > psi + 2.0 * step) continue;
      Vec3 ga, gb;
      separation_directions(x, p, rng, ga, gb);
      g[p.a] += ga;
      g[p.b] += gb;
    }
    double gmax = 0.0;
    for (const auto& v : g) gmax = std::max(gmax, v.norm());
    if (gmax == 0.0) return;
    Config trial = x;
    for (int i = 0; i < P.reps; ++i) {
      trial[i] += (step / gmax) * g[i];
      restore(P, trial[i]);
    }
    const double t = config_psi(P, trial);
    if (t > psi) {
      x = std::move(trial);
      psi = t;
      step *= 1.5;
    } else {
      step *= 0.5;
    }
  }
}

// Levenberg-Marquardt on  sign * x_a . x_b = c  for the given pairs,
// |x_i| = 1, and z_i = 0 on `boundary`. When `fixed_cos` is absent, c is an
// extra unknown. Returns true when the residual vanishes.
bool equalize(const Problem& P, Config& x, const std::vector<Pair>& active, std::optional<double> fixed_cos,
              const std::vector<int>& boundary) {
  const int nv = 3 * P.reps + (fixed_cos ? 0 : 1);
  const int nr = static_cast<int>(active.size()) + P.reps + static_cast<int>(boundary.size());
  Eigen::VectorXd u(nv);
  for (int i = 0; i < P.reps; ++i) u.segment<3>(3 * i) = x[i];
  if (!fixed_cos) {
    double c = 0.0;
    for (const auto& p : active) c += p.sign * x[p.a].dot(x[p.b]);
    u[nv - 1] = c / static_cast<double>(std::max<std::size_t>(1, active.size()));
  }

  auto residual = [&](const Eigen::VectorXd& v, Eigen::VectorXd& r, Eigen::MatrixXd* J) {
    r.setZero(nr);
    if (J) J->setZero(nr, nv);
    const double c = fixed_cos ? *fixed_cos : v[nv - 1];
    int row = 0;
    for (const auto& p : active) {
      const Vec3 xa = v.segment<3>(3 * p.a);
      const Vec3 xb = v.segment<3>(3 * p.b);
      r[row] = p.sign * xa.dot(xb) - c;
      if (J) {
        J->block<1, 3>(row, 3 * p.a) = p.sign * xb.transpose();
        J->block<1, 3>(row, 3 * p.b) = p.sign * xa.transpose();
        if (!fixed_cos) (*J)(row, nv - 1) = -1.0;
      }
      ++row;
    }
    for (int i = 0; i < P.reps; ++i) {
      const Vec3 xi = v.segment<3>(3 * i);
      r[row] = xi.squaredNorm() - 1.0;
      if (J) J->block<1, 3>(row, 3 * i) = 2.0 * xi.transpose();
      ++row;
    }
    for (int i : boundary) {
      r[row] = v[3 * i + 2];
      if (J) (*J)(row, 3 * i + 2) = 1.0;
      ++row;
    }
  };

  Eigen::VectorXd r, rt;
  Eigen::MatrixXd J;
  double lambda = 1e-8;
  residual(u, r, &J);
  double cost = r.squaredNorm();
  for (int it = 0; it < 200 && cost > 1e-30; ++it) {
    const Eigen::MatrixXd A = J.transpose() * J;
    const Eigen::VectorXd g = J.transpose() * r;
    bool improved = false;
    while (lambda < 1e12) {
      Eigen::MatrixXd M = A;
      M.diagonal().array() += lambda;
      const Eigen::VectorXd step = M.ldlt().solve(-g);
      const Eigen::VectorXd trial = u + step;
      residual(trial, rt, nullptr);
      const double tc = rt.squaredNorm();
      if (tc < cost) {
        u = trial;
        cost = tc;
        lambda = std::max(lambda / 4.0, 1e-15);
        improved = true;
        break;
      }
      lambda *= 8.0;
    }
    if (!improved) break;
    residual(u, r, &J);
  }
  if (cost > 1e-24) return false;
  for (int i = 0; i < P.reps; ++i) {
    x[i] = u.segment<3>(3 * i);
    restore(P, x[i]);
  }
  return true;
}

std::vector<int> boundary_points(const Problem& P, const Config& x, double delta) {
  std::vector<int> out;
  if (!P.hemisphere) return out;
  for (int i = 0; i < P.reps; ++i)
    if (x[i].z() < delta) out.push_back(i);
  return out;
}

const double kActiveBands[] = {1e-3, 3e-4, 1e-4, 3e-5, 1e-5, 3e-6, 1e-6};

void polish(const Problem& P, Config& x, double min_step, Rng& rng) {
  active_ascent(P, x, min_step, rng);
  double psi = config_psi(P, x);
  for (int round = 0; round < 3; ++round) {
    bool improved = false;
    for (double band : kActiveBands) {
      std::vector<Pair> active;
      for (const auto& p : P.pairs)
        if (pair_distance(x, p) < psi + band) active.push_back(p);
      Config trial = x;
      if (!equalize(P, trial, active, std::nullopt, boundary_points(P, x, band))) continue;
      const double t = config_psi(P, trial);
      if (t > psi) {
        x = std::move(trial);
        psi = t;
        improved = true;
      }
    }
    if (!improved) break;
  }
}

struct Outcome {
  Config x;
  double psi = 0.0;
  int contacts = 0;
  double distance = 0.0;
};

std::vector<Vec3> expand(const Problem& P, const Config& x) {
  std::vector<Vec3> out(x.begin(), x.end());
  if (P.antipodal)
    for (const auto& v : x) out.push_back(-v);
  return out;
}

template <class Better>
int pick_best(const std::vector<Outcome>& outcomes, Better better) {
  int best = 0;
  for (int r = 1; r < static_cast<int>(outcomes.size()); ++r)
    if (better(outcomes[r], outcomes[best])) best = r;
  return best;
}

TammesResult run_maxmin(const Problem& P, int points, const OptimizerConfig& cfg, TammesMode mode) {
  cfg.validate();
  std::vector<Outcome> outcomes(cfg.restarts);
  const int stages = static_cast<int>(cfg.softmin_beta_schedule.size());
  parallel_for(outcomes.size(), cfg.threads, [&](std::size_t r) {
    Rng rng(stream_seed(cfg.master_seed, r));
    Config x = random_start(P, rng);
    for (int s = 0; s < stages; ++s) {
      const int iters = cfg.iterations_per_restart / stages + (s < cfg.iterations_per_restart % stages ? 1 : 0);
      softmin_ascent(P, x, cfg.softmin_beta_schedule[s], cfg.step_schedule[s], iters, rng);
    }
    polish(P, x, cfg.convergence_tol, rng);
    outcomes[r] = {x, config_psi(P, x), 0, 0.0};
  });
  const int best = pick_best(outcomes, [](const Outcome& a, const Outcome& b) { return a.psi > b.psi; });
  TammesResult res;
  const std::vector<Vec3> pts = expand(P, outcomes[best].x);
  res.code = SphericalCode::from_vec3(pts);
  res.psi = res.code.psi();
  res.mode = mode;
  res.best_restart = best;
  if (mode != TammesMode::hemisphere) res.certificate = ft_tammes_ceiling(points);
  return res;
}

// Energy for the contact search at fixed d: overlap penalty plus a sigmoid
// reward for pairs within a few eps of d.
void contact_descent(const Problem& P, Config& x, double d, double eps, double step, int iterations, Rng& rng) {
  const double stiffness = 1.0 / (eps * eps);
  std::vector<Vec3> g(P.reps);
  for (int it = 0; it < iterations; ++it) {
    std::fill(g.begin(), g.end(), Vec3::Zero());
    for (const auto& p : P.pairs) {
      const double dist = pair_distance(x, p);
      const double z = (d + 2.0 * eps - dist) / eps;
      if (z < -30.0) continue;
      const double sig = 1.0 / (1.0 + std::exp(-z));
      // d(-sigmoid)/d(dist) = sig (1 - sig) / eps; pulls pairs together.
      double w = -sig * (1.0 - sig) / eps;
      if (dist < d) w += 1000.0 * stiffness * (d - dist);
      if (dist < kBarrier) w += 1e6;
      Vec3 ga, gb;
      separation_directions(x, p, rng, ga, gb);
      g[p.a] += w * ga;
      g[p.b] += w * gb;
    }
    double gmax = 0.0;
    for (const auto& v : g) gmax = std::max(gmax, v.norm());
    if (gmax == 0.0) return;
    for (int i = 0; i < P.reps; ++i) {
      x[i] += (step / gmax) * g[i];
      restore(P, x[i]);
    }
  }
}

std::optional<double> cos_of(std::optional<double> d) {
  if (d) return std::cos(*d);
  return std::nullopt;
}

struct ContactScorer {
  const Problem& P;
  std::optional<double> fixed_d;
  double floor;  // smallest admissible contact distance
  double tol;

  Outcome operator()(const Config& c) const {
    const double psi = config_psi(P, c);
    const double dist = fixed_d ? *fixed_d : psi;
    if (psi < dist - tol || dist < floor) return Outcome{c, psi, -1, dist};
    return Outcome{c, psi, count_contacts(c, dist, tol), dist};
  }
};

std::vector<Pair> contact_pairs(const Problem& P, const Config& x, double dist, double tol) {
  std::vector<Pair> out;
  for (const auto& p : P.pairs)
    if (std::abs(pair_distance(x, p) - dist) <= tol) out.push_back(p);
  return out;
}

// Pulls the nearest non-contact pairs into contact while the configuration
// still has freedom to move.
void grow_contacts(const Problem& P, Outcome& best, const ContactScorer& score) {
  for (int round = 0; round < static_cast<int>(P.pairs.size()); ++round) {
    std::vector<std::pair<double, int>> candidates;
    for (int k = 0; k < static_cast<int>(P.pairs.size()); ++k) {
      const double dist = pair_distance(best.x, P.pairs[k]);
      if (std::abs(dist - best.distance) > score.tol) candidates.emplace_back(dist, k);
    }
    std::sort(candidates.begin(), candidates.end());
    bool grown = false;
    for (std::size_t c = 0; c < std::min<std::size_t>(3, candidates.size()) && !grown; ++c) {
      std::vector<Pair> active = contact_pairs(P, best.x, best.distance, score.tol);
      active.push_back(P.pairs[candidates[c].second]);
      Config trial = best.x;
      if (!equalize(P, trial, active, cos_of(score.fixed_d), {})) continue;
      const Outcome o = score(trial);
      if (o.contacts > best.contacts) {
        best = o;
        grown = true;
      }
    }
    if (!grown) break;
  }
}

// Moves one weakly held point into the pocket beside two others where it
// gains the most contacts. Returns true on improvement.
bool relocate_point(const Problem& P, Outcome& best, const ContactScorer& score) {
  const int n = P.reps;
  const double d = best.distance;
  const double cd = std::cos(d);
  const Config& x = best.x;
  std::vector<int> degree(n, 0);
  for (const auto& p : contact_pairs(P, x, d, score.tol)) {
    ++degree[p.a];
    ++degree[p.b];
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return degree[i] < degree[j]; });
  for (int v : order) {
    int gain_best = degree[v];
    Vec3 where = x[v];
    for (int a = 0; a < n; ++a) {
      if (a == v) continue;
      for (int b = a + 1; b < n; ++b) {
        if (b == v) continue;
        const double ab = x[a].dot(x[b]);
        const Vec3 axb = x[a].cross(x[b]);
        const double s = axb.norm();
        if (s < 1e-9) continue;
        const double alpha = cd / (1.0 + ab);
        const double rest = 1.0 - alpha * alpha * (2.0 + 2.0 * ab);
        if (rest < 0.0) continue;
        for (double sgn : {-1.0, 1.0}) {
          const Vec3 y = (alpha * (x[a] + x[b]) + sgn * std::sqrt(rest) / s * axb).normalized();
          int touching = 0;
          bool ok = true;
          for (int k = 0; k < n && ok; ++k) {
            if (k == v) continue;
            const double dist = angular_distance(y, x[k]);
            if (dist < d - score.tol) ok = false;
            else if (dist <= d + score.tol) ++touching;
          }
          if (ok && touching > gain_best) {
            gain_best = touching;
            where = y;
          }
        }
      }
    }
    if (gain_best > degree[v]) {
      Config trial = x;
      trial[v] = where;
      Outcome o = score(trial);
      if (o.contacts > best.contacts) {
        best = std::move(o);
        return true;
      }
    }
  }
  return false;
}

// Snaps near-contacts of x onto exact contacts, then improves the contact
// count by local moves. With a fixed distance the contacts stay at it;
// otherwise the distance floats above score.floor.
Outcome snap_contacts(const Problem& P, const Config& x, const ContactScorer& score) {
  Outcome best = score(x);
  const double ref = score.fixed_d ? *score.fixed_d : best.psi;
  for (double band : {3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5}) {
    std::vector<Pair> active;
    for (const auto& p : P.pairs)
      if (pair_distance(x, p) < ref + band) active.push_back(p);
    if (active.empty()) continue;
    Config trial = x;
    if (!equalize(P, trial, active, cos_of(score.fixed_d), {})) continue;
    const Outcome o = score(trial);
    if (o.contacts > best.contacts || (o.contacts == best.contacts && o.psi > best.psi)) best = o;
  }
  if (best.contacts <= 0) return best;
  for (int round = 0; round < 4 * P.reps; ++round) {
    grow_contacts(P, best, score);
    if (!relocate_point(P, best, score)) break;
  }
  return best;
}

bool more_contacts(const Outcome& a, const Outcome& b) {
  if (a.contacts != b.contacts) return a.contacts > b.contacts;
  return a.distance > b.distance;
}

void contact_anneal(const Problem& P, Config& x, double d, const std::vector<double>& eps_schedule, int iterations,
                    double min_eps, Rng& rng) {
  const int stages = static_cast<int>(eps_schedule.size());
  for (int s = 0; s < stages; ++s) {
    const double eps = std::max(eps_schedule[s], min_eps);
    contact_descent(P, x, d, eps, 0.1 * eps, iterations / stages, rng);
  }
  // Short geometric step decay so near-contacts settle.
  for (double step = 1e-4; step > 1e-7; step *= 0.5) contact_descent(P, x, d, min_eps, step, 20, rng);
}

Outcome contact_restart(const Problem& P, double d, const ContactScorer& score, const OptimizerConfig& cfg,
                        int hops, std::uint64_t seed) {
  Rng rng(seed);
  Config x = random_start(P, rng);
  contact_anneal(P, x, d, {0.3, 0.1, 0.03, 0.01, 3e-3, 1e-3}, cfg.iterations_per_restart, cfg.search_contact_eps,
                 rng);
  Outcome best = snap_contacts(P, x, score);
  // Basin hopping: shake the best configuration and settle it again.
  for (int h = 0; h < hops; ++h) {
    Config y = best.x;
    for (auto& v : y) {
      v += 0.15 * d * random_tangent(v, rng) * rng.uniform();
      restore(P, v);
    }
    contact_anneal(P, y, d, {0.03, 0.01, 3e-3, 1e-3}, cfg.iterations_per_restart / 4, cfg.search_contact_eps, rng);
    Outcome o = snap_contacts(P, y, score);
    if (o.contacts >= best.contacts) best = std::move(o);
  }
  return best;
}

}  // namespace

const char* to_string(TammesMode mode) {
  switch (mode) {
    case TammesMode::free: return "free";
    case TammesMode::antipodal: return "antipodal";
    case TammesMode::hemisphere: return "hemisphere";
    case TammesMode::max_contacts: return "max_contacts";
  }
  return "unknown";
}

void OptimizerConfig::validate() const {
  require(restarts >= 1, ErrorCode::invalid_argument, "restarts must be >= 1");
  require(iterations_per_restart >= 0, ErrorCode::invalid_argument, "iterations must be >= 0");
  require(!softmin_beta_schedule.empty(), ErrorCode::invalid_argument, "beta schedule is empty");
  require(softmin_beta_schedule.size() == step_schedule.size(), ErrorCode::invalid_argument,
          "beta and step schedules must have equal length");
  for (std::size_t i = 0; i < softmin_beta_schedule.size(); ++i) {
    require(softmin_beta_schedule[i] > 0.0, ErrorCode::invalid_argument, "beta values must be positive");
    require(step_schedule[i] > 0.0, ErrorCode::invalid_argument, "steps must be positive");
    if (i > 0) {
      require(softmin_beta_schedule[i] > softmin_beta_schedule[i - 1], ErrorCode::invalid_argument,
              "beta schedule must increase");
      require(step_schedule[i] < step_schedule[i - 1], ErrorCode::invalid_argument, "step schedule must decrease");
    }
  }
  require(convergence_tol > 0.0, ErrorCode::invalid_argument, "convergence tolerance must be positive");
  require(contact_tol > 0.0, ErrorCode::invalid_argument, "contact tolerance must be positive");
  require(search_contact_eps > 0.0, ErrorCode::invalid_argument, "search eps must be positive");
  require(threads >= 1, ErrorCode::invalid_argument, "threads must be >= 1");
}

int count_contacts(const std::vector<Vec3>& points, double distance, double tol) {
  int count = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(angular_distance(points[i], points[j]) - distance) <= tol) ++count;
  return count;
}

TammesResult tammes_solve(int n, const OptimizerConfig& cfg) {
  require(n >= 2, ErrorCode::domain, "Tammes problem needs N >= 2");
  return run_maxmin(make_problem(n, false, false), n, cfg, TammesMode::free);
}

TammesResult antipodal_solve(int m, const OptimizerConfig& cfg) {
  require(m >= 2, ErrorCode::domain, "antipodal problem needs M >= 2");
  return run_maxmin(make_problem(m, true, false), 2 * m, cfg, TammesMode::antipodal);
}

TammesResult hemisphere_code_search(int count, double target, const OptimizerConfig& cfg) {
  require(count >= 2, ErrorCode::domain, "hemisphere search needs count >= 2");
  require(target > 0.0 && target < kPi, ErrorCode::domain, "target must lie in (0, pi)");
  TammesResult res = run_maxmin(make_problem(count, false, true), count, cfg, TammesMode::hemisphere);
  res.target = target;
  res.feasible = res.psi >= target - kHemisphereSlack;
  return res;
}

TammesResult max_contacts(int n, std::optional<double> d, const OptimizerConfig& cfg) {
  require(n >= 2, ErrorCode::domain, "contact maximization needs N >= 2");
  cfg.validate();
  const double ceiling = ft_tammes_ceiling(n);
  if (d) require(*d > 0.0 && *d <= ceiling + 1e-12, ErrorCode::domain,
                 "contact distance exceeds the Tammes ceiling for this N");
  const Problem P = make_problem(n, false, false);

  std::vector<double> grid;
  std::vector<Outcome> seeds;
  if (d) {
    grid.push_back(*d);
  } else {
    const TammesResult t = tammes_solve(n, cfg);
    Config x = t.code.vec3();
    Outcome base{x, t.psi, count_contacts(x, t.psi, cfg.contact_tol), t.psi};
    seeds.push_back(base);
    for (int k = 0; k < 20; ++k) grid.push_back(t.psi * (1.0 - 0.005 * k));
  }
  const ContactScorer score{P, d, d ? 0.0 : 0.9 * grid.back(), cfg.contact_tol};
  const int per_point = d ? cfg.restarts : std::max(1, cfg.restarts / 4);
  const std::size_t total = grid.size() * static_cast<std::size_t>(per_point);
  std::vector<Outcome> outcomes(total);
  parallel_for(total, cfg.threads, [&](std::size_t idx) {
    const double dk = grid[idx / per_point];
    outcomes[idx] = contact_restart(P, dk, score, cfg, 10, stream_seed(cfg.master_seed ^ 0x6d61786bULL, idx));
  });
  outcomes.insert(outcomes.begin(), seeds.begin(), seeds.end());
  const int best = pick_best(outcomes, more_contacts);
  require(outcomes[best].contacts >= 0, ErrorCode::numeric, "no configuration satisfied the packing condition");

  TammesResult res;
  res.code = SphericalCode::from_vec3(outcomes[best].x);
  res.psi = res.code.psi();
  res.mode = TammesMode::max_contacts;
  res.best_restart = best - static_cast<int>(seeds.size());
  res.certificate = ceiling;
  res.contact_distance = outcomes[best].distance;
  res.contacts = outcomes[best].contacts;
  return res;
}

}  // namespace sphx
