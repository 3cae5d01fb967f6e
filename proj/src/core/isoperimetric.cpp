#include "sphx/isoperimetric.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "sphx/bounds.hpp"
#include "sphx/error.hpp"
#include "sphx/parallel.hpp"
#include "sphx/random.hpp"

namespace sphx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long long kChunk = 1 << 16;
constexpr double kBoxRadius = 1e6;

// ---------------------------------------------------------------------------
// Dimension 3: polar dual of the hull of the tangency points.

CircumscribedPolyhedron circumscribe3(const SphericalCode& x) {
  const std::vector<Vec3> input = x.vec3();
  const ConvexHull3 hull = convex_hull(input);
  for (const auto& f : hull.facets)
    require(f.offset > 1e-12, ErrorCode::unbounded,
            "tangency points lie in a closed hemisphere; the circumscribed body is unbounded");

  CircumscribedPolyhedron P;
  P.dimension = 3;
  P.tangency_points = SphericalCode::from_vec3(hull.points);
  std::vector<Vec3> verts;
  for (const auto& f : hull.facets) {
    verts.push_back(f.normal / f.offset);
    P.vertices.emplace_back(verts.back());
  }

  const std::size_t n = hull.points.size();
  std::vector<std::vector<int>> incident(n);
  for (std::size_t f = 0; f < hull.facets.size(); ++f)
    for (int idx : hull.facets[f].cycle) incident[idx].push_back(static_cast<int>(f));

  Vec3 centroid = Vec3::Zero();
  for (const auto& v : verts) centroid += v;
  centroid /= static_cast<double>(verts.size());

  P.faces.resize(n);
  P.face_areas.resize(n);
  double volume = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& xi = hull.points[i];
    const auto [e1, e2] = tangent_basis(xi);
    std::vector<std::pair<double, int>> order;
    for (int f : incident[i]) order.emplace_back(std::atan2(verts[f].dot(e2), verts[f].dot(e1)), f);
    std::sort(order.begin(), order.end());
    Vec3 twice_area = Vec3::Zero();
    const std::size_t m = order.size();
    for (std::size_t k = 0; k < m; ++k) {
      P.faces[i].push_back(order[k].second);
      const Vec3& a = verts[order[k].second];
      const Vec3& b = verts[order[(k + 1) % m].second];
      twice_area += a.cross(b);
      if (k >= 1 && k + 1 < m) {
        const Vec3& p0 = verts[order[0].second];
        volume += (p0 - centroid).dot((a - centroid).cross(b - centroid)) / 6.0;
      }
    }
    P.face_areas[i] = 0.5 * xi.dot(twice_area);
    P.surface_area += P.face_areas[i];
    P.edge_count += static_cast<int>(m);
  }
  P.edge_count /= 2;
  P.volume = volume;
  P.volume_residual = std::abs(P.volume - P.surface_area / 3.0) / P.volume;
  require(P.volume_residual < 1e-9, ErrorCode::numeric, "volume and surface area disagree (V != F/3)");
  return P;
}

// ---------------------------------------------------------------------------
// Dimension >= 4: vertex enumeration plus Monte Carlo measures.

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double max_support(const std::vector<Eigen::VectorXd>& xs, const Eigen::VectorXd& u) {
  double best = -1e300;
  for (const auto& x : xs) best = std::max(best, x.dot(u));
  return best;
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Sums f over `samples` draws split into seeded chunks; the reduction runs in
// chunk order so the result does not depend on the thread count.
template <class Draw>
Moments chunked_moments(long long samples, std::uint64_t seed, int threads, Draw draw) {
  const long long chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Moments> partial(chunks);
  parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
    Rng rng(stream_seed(seed, c));
    const long long count = std::min<long long>(kChunk, samples - static_cast<long long>(c) * kChunk);
    Moments m;
    for (long long i = 0; i < count; ++i) {
      const double v = draw(rng);
      m.sum += v;
      m.sum_sq += v * v;
    }
    partial[c] = m;
  });
  Moments total;
  for (const auto& m : partial) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  return total;
}

std::pair<double, double> mean_and_error(const Moments& m, long long n) {
  const double mean = m.sum / static_cast<double>(n);
  const double var = std::max(0.0, m.sum_sq / static_cast<double>(n) - mean * mean);
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

CircumscribedPolyhedron circumscribe_general(const SphericalCode& x, const MonteCarloOptions& mc) {
  const int d = x.dim();
  std::vector<Eigen::VectorXd> xs;
  for (const auto& p : x.points()) {
    bool dup = false;
    for (const auto& q : xs) dup = dup || (q - p.coords()).norm() < 1e-10;
    if (!dup) xs.push_back(p.coords());
  }
  const int n = static_cast<int>(xs.size());
  require(n >= d + 1, ErrorCode::unbounded, "fewer than d + 1 halfspaces cannot bound a body");

  // Constraints a . p <= b: the tangent halfspaces, then a bounding box whose
  // faces may only carry vertices when the body is unbounded.
  std::vector<Eigen::VectorXd> normals = xs;
  std::vector<double> rhs(n, 1.0);
  for (int k = 0; k < d; ++k)
    for (double s : {1.0, -1.0}) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
      e[k] = s;
      normals.push_back(e);
      rhs.push_back(kBoxRadius);
    }
  const int total = static_cast<int>(normals.size());

  CircumscribedPolyhedron P;
  P.dimension = d;
  P.monte_carlo = true;
  std::vector<UnitVector> kept;
  for (const auto& v : xs) kept.emplace_back(v);
  P.tangency_points = SphericalCode(std::move(kept));

  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  Eigen::MatrixXd A(d, d);
  Eigen::VectorXd b(d);
  do {
    for (int r = 0; r < d; ++r) {
      A.row(r) = normals[comb[r]].transpose();
      b[r] = rhs[comb[r]];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.rank() < d) continue;
    const Eigen::VectorXd p = lu.solve(b);
    bool feasible = true;
    for (int c = 0; c < total && feasible; ++c) feasible = normals[c].dot(p) <= rhs[c] * (1.0 + 1e-9) + 1e-9;
    if (!feasible) continue;
    bool known = false;
    for (const auto& q : P.vertices) known = known || (q - p).norm() <= 1e-9 * std::max(1.0, p.norm());
    if (known) continue;
    require(p.cwiseAbs().maxCoeff() < kBoxRadius * (1.0 - 1e-9), ErrorCode::unbounded,
            "tangency points lie in a closed hemisphere; the circumscribed body is unbounded");
    P.vertices.push_back(p);
  } while (next_combination(comb, total));
  require(!P.vertices.empty(), ErrorCode::degenerate, "halfspace intersection has no vertices");

  P.faces.resize(n);
  for (int i = 0; i < n; ++i)
    for (int v = 0; v < static_cast<int>(P.vertices.size()); ++v)
      if (xs[i].dot(P.vertices[v]) >= 1.0 - 1e-9) P.faces[i].push_back(v);

  // F = integral over S^{d-1} of r(u)^d, r(u) = 1 / max_i u . x_i.
  const double omega = omega_sphere(d);
  const Moments fm = chunked_moments(mc.samples, stream_seed(mc.seed, 0x5f), mc.threads, [&](Rng& rng) {
    const Eigen::VectorXd u = rng.unit(d);
    return std::pow(1.0 / max_support(xs, u), d);
  });
  const auto [f_mean, f_err] = mean_and_error(fm, mc.samples);
  P.surface_area = omega * f_mean;
  P.surface_stderr = omega * f_err;

  // V by hit-or-miss in the vertex bounding box.
  Eigen::VectorXd lo = P.vertices.front(), hi = P.vertices.front();
  for (const auto& v : P.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  const double box = (hi - lo).prod();
  const Moments vm = chunked_moments(mc.samples, stream_seed(mc.seed, 0x76), mc.threads, [&](Rng& rng) {
    Eigen::VectorXd p(d);
    for (int k = 0; k < d; ++k) p[k] = rng.uniform(lo[k], hi[k]);
    return max_support(xs, p) <= 1.0 ? 1.0 : 0.0;
  });
  const auto [v_mean, v_err] = mean_and_error(vm, mc.samples);
  P.volume = box * v_mean;
  P.volume_stderr = box * v_err;
  P.volume_residual = std::abs(P.volume - P.surface_area / d) / P.volume;
  return P;
}

// ---------------------------------------------------------------------------
// Projection identities.

// Integral of sec^3 of the angle to x over the spherical image of the flat
// triangle (a, b, c): det(a, b, c) / (x . p)^3 over the parameter triangle.
double lifted_triangle_gauss(const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& c) {
  using boost::math::quadrature::gauss;
  const double det = a.dot(b.cross(c));
  const Vec3 ab = b - a, ac = c - a;
  // Duffy map u = s, v = (1 - s) w.
  auto outer = [&](double s) {
    auto inner = [&](double w) {
      const Vec3 p = a + s * ab + (1.0 - s) * w * ac;
      const double h = x.dot(p);
      return det / (h * h * h);
    };
    return (1.0 - s) * gauss<double, 10>::integrate(inner, 0.0, 1.0);
  };
  return gauss<double, 10>::integrate(outer, 0.0, 1.0);
}

double lifted_triangle_area(const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& c, double whole, int depth) {
  const Vec3 ab = 0.5 * (a + b), bc = 0.5 * (b + c), ca = 0.5 * (c + a);
  const double parts[4] = {lifted_triangle_gauss(x, a, ab, ca), lifted_triangle_gauss(x, ab, b, bc),
                           lifted_triangle_gauss(x, ca, bc, c), lifted_triangle_gauss(x, ab, bc, ca)};
  const double sum = parts[0] + parts[1] + parts[2] + parts[3];
  if (std::abs(sum - whole) <= 1e-14 * std::max(1.0, std::abs(sum)) || depth >= 8) return sum;
  return lifted_triangle_area(x, a, ab, ca, parts[0], depth + 1) +
         lifted_triangle_area(x, ab, b, bc, parts[1], depth + 1) +
         lifted_triangle_area(x, ca, bc, c, parts[2], depth + 1) +
         lifted_triangle_area(x, ab, bc, ca, parts[3], depth + 1);
}

// Keeps the part of a convex spherical polygon with n . y >= 0.
std::vector<Vec3> clip_polygon(const std::vector<Vec3>& poly, const Vec3& n) {
  std::vector<Vec3> out;
  const std::size_t m = poly.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Vec3& a = poly[k];
    const Vec3& b = poly[(k + 1) % m];
    const double sa = n.dot(a), sb = n.dot(b);
    if (sa >= 0.0) out.push_back(a);
    if ((sa >= 0.0) != (sb >= 0.0)) {
      const double t = sa / (sa - sb);
      out.push_back((a + t * (b - a)).normalized());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Regular spherical simplex for rho_d.

struct SimplexCone {
  Eigen::MatrixXd vertices;  // one vertex per column
  Eigen::MatrixXd inverse;
};

SimplexCone regular_simplex(int d, double c) {
  const Eigen::VectorXd w = Eigen::VectorXd::Constant(d, 1.0 / std::sqrt(double(d)));
  const double alpha = std::sqrt(std::max(0.0, ((d - 1) * c + 1.0) / d));
  const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  SimplexCone s;
  s.vertices.resize(d, d);
  for (int k = 0; k < d; ++k) {
    Eigen::VectorXd u = Eigen::VectorXd::Constant(d, -1.0 / d);
    u[k] += 1.0;
    u.normalize();
    s.vertices.col(k) = alpha * w + beta * u;
  }
  s.inverse = s.vertices.inverse();
  return s;
}

}  // namespace

CircumscribedPolyhedron circumscribe(const SphericalCode& x, const MonteCarloOptions& mc) {
  require(x.size() >= 1, ErrorCode::invalid_argument, "no tangency points");
  if (x.dim() == 3) return circumscribe3(x);
  require(x.dim() >= 4, ErrorCode::invalid_argument, "circumscribed bodies need dimension >= 3");
  require(mc.samples >= 1000, ErrorCode::invalid_argument, "Monte Carlo needs at least 1000 samples");
  return circumscribe_general(x, mc);
}

IqValue iq(const CircumscribedPolyhedron& p) {
  const int d = p.dimension;
  const double omega = omega_sphere(d);
  IqValue r;
  r.value = std::pow(d, d - 1) * omega * std::pow(p.volume, d - 1) / std::pow(p.surface_area, d);
  r.shortcut = omega / p.surface_area;
  if (p.monte_carlo) {
    const double rv = (d - 1) * p.volume_stderr / p.volume;
    const double rf = d * p.surface_stderr / p.surface_area;
    r.standard_error = r.value * std::sqrt(rv * rv + rf * rf);
  }
  return r;
}

ProjectionReport projection_report(const CircumscribedPolyhedron& p) {
  require(p.dimension == 3, ErrorCode::invalid_argument, "projection report is defined in dimension 3");
  const SphericalTessellation tess = tessellate(p.tangency_points);
  ProjectionReport r;
  r.voronoi_areas = tess.voronoi_areas;
  r.delaunay_areas = tess.delaunay_areas;
  double vsum = 0.0, dsum = 0.0;
  for (double a : r.voronoi_areas) vsum += a;
  for (double a : r.delaunay_areas) dsum += a;
  r.face_area_sum_check = std::abs(vsum - 4.0 * kPi);
  r.delaunay_area_sum_check = std::abs(dsum - 4.0 * kPi);

  std::vector<Vec3> projected;
  for (const auto& v : p.vertices) projected.push_back(Vec3(v).normalized());
  auto gap = [](const std::vector<Vec3>& from, const std::vector<Vec3>& to) {
    double worst = 0.0;
    for (const auto& a : from) {
      double best = kPi;
      for (const auto& b : to) best = std::min(best, angular_distance(a, b));
      worst = std::max(worst, best);
    }
    return worst;
  };
  r.projected_vertex_match = std::max(gap(projected, tess.circumcenters), gap(tess.circumcenters, projected));

  const std::vector<Vec3> sites = tess.sites.vec3();
  for (const auto& cell : tess.delaunay_cells) {
    double area = 0.0;
    const std::vector<Vec3> tri{sites[cell[0]], sites[cell[1]], sites[cell[2]]};
    for (std::size_t i = 0; i < sites.size(); ++i) {
      std::vector<Vec3> piece = tri;
      for (std::size_t j = 0; j < sites.size() && piece.size() >= 3; ++j)
        if (j != i) piece = clip_polygon(piece, sites[i] - sites[j]);
      if (piece.size() < 3) continue;
      for (std::size_t k = 1; k + 1 < piece.size(); ++k) {
        const double whole = lifted_triangle_gauss(sites[i], piece[0], piece[k], piece[k + 1]);
        area += lifted_triangle_area(sites[i], piece[0], piece[k], piece[k + 1], whole, 0);
      }
    }
    r.preimage_areas.push_back(area);
    r.preimage_area_sum += area;
  }
  r.preimage_relative_error = std::abs(r.preimage_area_sum - p.surface_area) / p.surface_area;
  return r;
}

double rho(double t) {
  require(t > 0.0 && t < 2.0 * kPi, ErrorCode::domain, "rho needs 0 < t < 2 pi");
  const double phi = regular_triangle_side(t);
  const double sin_r = std::sqrt(2.0 / 3.0 * (1.0 - std::cos(phi)));
  const double cos_r = std::sqrt(std::max(0.0, 1.0 - sin_r * sin_r));
  std::array<Vec3, 3> x;
  for (int k = 0; k < 3; ++k) {
    const double a = 2.0 * kPi * k / 3.0;
    x[k] = Vec3(sin_r * std::cos(a), sin_r * std::sin(a), cos_r);
  }
  const Vec3 q = Vec3::UnitZ();
  const Vec3 m12 = (x[0] + x[1]).normalized();
  const Vec3 m13 = (x[0] + x[2]).normalized();
  const Vec3 a = x[0];
  const Vec3 b = project_to_tangent(x[0], m12);
  const Vec3 c = project_to_tangent(x[0], q);
  const Vec3 d = project_to_tangent(x[0], m13);
  const double kite = 0.5 * (c - a).cross(d - b).norm();
  return 3.0 * kite;
}

double lifted_triangle_bound(int f) {
  require(f >= 4, ErrorCode::domain, "a convex polyhedron has at least four faces");
  const double tau = 2.0 * kPi / (f - 2);
  return tau / rho(tau);
}

double omega_sphere(int d) {
  require(d >= 2, ErrorCode::domain, "Omega_d needs d >= 2");
  return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

long long upper_bound_vertices(int d, int n) {
  require(d >= 2 && n >= d + 1, ErrorCode::domain, "h_d(n) needs n >= d + 1 >= 3");
  auto choose = [](long long a, long long b) -> long long {
    if (b < 0 || a < b) return 0;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  const int lo = d / 2, hi = (d + 1) / 2;
  return choose(n - hi, lo) + choose(n - lo - 1, hi - 1);
}

RhoEstimate rho_d(int d, double t, const MonteCarloOptions& mc) {
  require(d >= 3, ErrorCode::domain, "rho_d needs d >= 3");
  require(mc.samples >= 10'000, ErrorCode::invalid_argument, "rho_d needs at least 10^4 samples");
  const double omega = omega_sphere(d);
  require(t > 0.0 && t < 0.5 * omega, ErrorCode::domain,
          "t outside the realizable range (0, Omega_d / 2) of regular simplices");

  // Samples folded into the hemisphere around the simplex axis; reused for
  // every bisection step.
  const Eigen::VectorXd w = Eigen::VectorXd::Constant(d, 1.0 / std::sqrt(double(d)));
  const long long n = mc.samples;
  Eigen::MatrixXd ys(d, n);
  const long long chunks = (n + kChunk - 1) / kChunk;
  parallel_for(static_cast<std::size_t>(chunks), mc.threads, [&](std::size_t c) {
    Rng rng(stream_seed(mc.seed, c));
    const long long begin = static_cast<long long>(c) * kChunk;
    const long long end = std::min(n, begin + kChunk);
    for (long long i = begin; i < end; ++i) {
      Eigen::VectorXd y = rng.unit(d);
      const double h = y.dot(w);
      if (h < 0.0) y -= 2.0 * h * w;
      ys.col(i) = y;
    }
  });
  const double half = 0.5 * omega;

  struct Pass {
    double hits = 0.0;
    double lift = 0.0;
  };
  auto pass = [&](double c, const std::function<void(long long, double)>* visit) {
    const SimplexCone s = regular_simplex(d, c);
    const Eigen::MatrixXd bary = s.inverse * ys;
    const Eigen::MatrixXd cosines = s.vertices.transpose() * ys;
    Pass p;
    for (long long i = 0; i < n; ++i) {
      if (bary.col(i).minCoeff() < 0.0) continue;
      const double m = cosines.col(i).maxCoeff();
      const double sec_d = std::pow(1.0 / m, d);
      p.hits += 1.0;
      p.lift += sec_d;
      if (visit) (*visit)(i, sec_d);
    }
    return p;
  };

  // Area decreases in c on (-1/(d-1), 1).
  double lo = -1.0 / (d - 1), hi = 1.0;
  const double reachable = half * pass(lo + 1e-12, nullptr).hits / n;
  require(t <= reachable, ErrorCode::domain,
          "t exceeds the attained simplex area " + std::to_string(reachable) + " at this sample size");
  for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (half * pass(mid, nullptr).hits / n > t)
      lo = mid;
    else
      hi = mid;
  }
  const double c = 0.5 * (lo + hi);
  const Pass at = pass(c, nullptr);
  RhoEstimate r;
  r.inner_product = c;
  r.area = half * at.hits / n;
  require(std::abs(r.area - t) <= 1e-4 * std::max(1.0, t), ErrorCode::numeric,
          "simplex bisection did not reach the target area");
  r.value = half * at.lift / n;

  // Delta-method error: the inner product is itself estimated from the same
  // samples, so the lift at the simplex boundary enters the variance.
  const double dc = 1e-3 * (1.0 - c);
  const Pass wide = pass(c - dc, nullptr), narrow = pass(c + dc, nullptr);
  const double boundary =
      wide.hits > narrow.hits ? (wide.lift - narrow.lift) / (wide.hits - narrow.hits) : at.lift / std::max(1.0, at.hits);
  double sum = 0.0, sum_sq = 0.0;
  const std::function<void(long long, double)> visit = [&](long long, double s) {
    sum += s - boundary;
    sum_sq += (s - boundary) * (s - boundary);
  };
  pass(c, &visit);
  const double mean = sum / n;
  const double var = std::max(0.0, sum_sq / n - mean * mean);
  r.standard_error = half * std::sqrt(var / n);
  return r;
}

std::vector<ConjectureRecord> conjecture_report(const CircumscribedPolyhedron& p, const MonteCarloOptions& mc) {
  const int d = p.dimension;
  const double omega = omega_sphere(d);
  const IqValue q = iq(p);
  const int v = static_cast<int>(p.vertices.size());
  const int n = static_cast<int>(p.faces.size());
  std::vector<ConjectureRecord> out;

  auto lift_bound = [&](double tau, double& err) {
    if (d == 3) {
      err = 0.0;
      return tau / rho(tau);
    }
    const RhoEstimate e = rho_d(d, tau, mc);
    err = tau / e.value * e.standard_error / e.value;
    return tau / e.value;
  };
  auto add_iq_record = [&](const std::string& name, double rhs, double rhs_err, bool conjectured) {
    out.push_back({name, q.value, rhs, rhs - q.value, std::hypot(q.standard_error, rhs_err), conjectured});
  };

  double err = 0.0;
  const double by_vertices = lift_bound(omega / v, err);
  add_iq_record("vertex_lift_conj", by_vertices, err, true);
  const double by_facets = lift_bound(omega / static_cast<double>(upper_bound_vertices(d, n)), err);
  add_iq_record("facet_lift_conj", by_facets, err, true);

  if (d == 3) {
    add_iq_record("goldberg_ft", goldberg_ft_rhs(n).value, 0.0, false);
    const double ratio = std::pow(p.surface_area, 3) / (p.volume * p.volume);
    const double vc = ft_vertex_conjecture_rhs(v).value;
    out.push_back({"ft_vertex_conj", ratio, vc, ratio - vc, 0.0, true});
    const double ec = ft_edge_conjecture_rhs(n, v, p.edge_count).value;
    out.push_back({"ft_edge_conj", ratio, ec, ratio - ec, 0.0, true});
  }
  return out;
}

}  // namespace sphx
