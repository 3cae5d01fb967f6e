#include "sphx/geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <unordered_map>

namespace sphx {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double c) { return std::clamp(c, -1.0, 1.0); }

}  // namespace

UnitVector::UnitVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {
  require(coords_.size() >= 2, ErrorCode::invalid_argument, "unit vector needs dimension >= 2");
  require(coords_.allFinite(), ErrorCode::invalid_argument, "unit vector has non-finite coordinates");
  const double n = coords_.norm();
  require(n > 1e-300, ErrorCode::invalid_argument, "zero vector cannot be normalized");
  coords_ /= n;
}

UnitVector::UnitVector(double x, double y, double z) : UnitVector(Eigen::Vector3d(x, y, z)) {}

Vec3 UnitVector::vec3() const {
  require(dim() == 3, ErrorCode::invalid_argument, "expected a point of S^2");
  return {coords_[0], coords_[1], coords_[2]};
}

SphericalCode::SphericalCode(std::vector<UnitVector> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  dim_ = points_.front().dim();
  for (const auto& p : points_)
    require(p.dim() == dim_, ErrorCode::invalid_argument, "points of a code must share one dimension");
  if (points_.size() >= 2) psi_ = min_pairwise(points_);
}

SphericalCode SphericalCode::from_vec3(std::span<const Vec3> points) {
  std::vector<UnitVector> v;
  v.reserve(points.size());
  for (const auto& p : points) v.emplace_back(Eigen::VectorXd(p));
  return SphericalCode(std::move(v));
}

std::vector<Vec3> SphericalCode::vec3() const {
  std::vector<Vec3> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.vec3());
  return out;
}

double SphericalCode::psi() const {
  require(points_.size() >= 2, ErrorCode::domain, "psi needs at least two points");
  return psi_;
}

double angular_distance(const Vec3& u, const Vec3& v) {
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

double angular_distance(const UnitVector& u, const UnitVector& v) {
  require(u.dim() == v.dim(), ErrorCode::invalid_argument, "dimension mismatch");
  if (u.dim() == 3) return angular_distance(u.vec3(), v.vec3());
  return std::acos(clamp_unit(u.coords().dot(v.coords())));
}

double min_pairwise(std::span<const UnitVector> points) {
  require(points.size() >= 2, ErrorCode::domain, "min_pairwise needs at least two points");
  double best = kPi;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      best = std::min(best, angular_distance(points[i], points[j]));
  return best;
}

double regular_triangle_area(double phi) {
  require(phi > 0.0 && phi < 2.0 * kPi / 3.0, ErrorCode::domain,
          "regular triangle side must lie in (0, 2pi/3)");
  const double c = std::cos(phi);
  return 3.0 * std::acos(clamp_unit(c / (1.0 + c))) - kPi;
}

double regular_triangle_side(double area) {
  require(area > 0.0 && area < 2.0 * kPi, ErrorCode::domain,
          "regular triangle area must lie in (0, 2pi)");
  double lo = 0.0;
  double hi = 2.0 * kPi / 3.0;
  // Bisect until the bracket stops shrinking; Delta is strictly increasing.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (regular_triangle_area(mid) < area)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double signed_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double det = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(det, den);
}

double spherical_polygon_area(std::span<const Vec3> cycle) {
  const std::size_t n = cycle.size();
  require(n >= 3, ErrorCode::degenerate, "spherical polygon needs at least three vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = cycle[i];
    const Vec3& b = cycle[(i + 1) % n];
    require((a - b).norm() > 1e-10, ErrorCode::degenerate, "repeated polygon vertex");
    require((a + b).norm() > 1e-10, ErrorCode::degenerate,
            "antipodal consecutive vertices leave the edge undefined");
  }
  double angle_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& prev = cycle[(i + n - 1) % n];
    const Vec3& at = cycle[i];
    const Vec3& next = cycle[(i + 1) % n];
    const Vec3 to_prev = prev - prev.dot(at) * at;
    const Vec3 to_next = next - next.dot(at) * at;
    double angle = std::atan2(at.dot(to_next.cross(to_prev)), to_next.dot(to_prev));
    if (angle < 0.0) angle += 2.0 * kPi;
    angle_sum += angle;
  }
  return angle_sum - static_cast<double>(n - 2) * kPi;
}

Vec3 project_to_tangent(const Vec3& x, const Vec3& y) {
  const double c = x.dot(y);
  require(c > 1e-12, ErrorCode::domain,
          "point is at least pi/2 from the tangency point; its ray misses the tangent plane");
  return y / c;
}

std::pair<Vec3, Vec3> tangent_basis(const Vec3& x) {
  const Vec3 helper = std::abs(x.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  Vec3 e1 = helper - helper.dot(x) * x;
  e1.normalize();
  return {e1, x.cross(e1)};
}

namespace {

struct HullFace {
  std::array<int, 3> v;
  Vec3 normal;
  double offset;
  bool alive;
};

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

class IncrementalHull {
 public:
  IncrementalHull(const std::vector<Vec3>& pts, double eps) : pts_(pts), eps_(eps) {}

  void build() {
    seed_tetrahedron();
    for (int i = 0; i < static_cast<int>(pts_.size()); ++i)
      if (!used_[i]) insert(i);
  }

  std::vector<std::array<int, 3>> triangles() const {
    std::vector<std::array<int, 3>> out;
    for (const auto& f : faces_)
      if (f.alive) out.push_back(f.v);
    return out;
  }

 private:
  double height(const HullFace& f, const Vec3& p) const { return f.normal.dot(p) - f.offset; }

  void add_face(int a, int b, int c) {
    HullFace f{{a, b, c}, Vec3::Zero(), 0.0, true};
    Vec3 n = (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]);
    const double len = n.norm();
    if (len > 0.0) n /= len;
    f.normal = n;
    f.offset = n.dot(pts_[a]);
    const int id = static_cast<int>(faces_.size());
    faces_.push_back(f);
    edges_[edge_key(a, b)] = id;
    edges_[edge_key(b, c)] = id;
    edges_[edge_key(c, a)] = id;
  }

  void seed_tetrahedron() {
    const int n = static_cast<int>(pts_.size());
    used_.assign(n, false);
    auto argmax = [&](auto&& score) {
      int best = -1;
      double best_score = -1.0;
      for (int i = 0; i < n; ++i) {
        const double s = score(pts_[i]);
        if (s > best_score) {
          best_score = s;
          best = i;
        }
      }
      return std::pair{best, best_score};
    };
    const int i0 = 0;
    const auto [i1, d1] = argmax([&](const Vec3& p) { return (p - pts_[i0]).norm(); });
    require(d1 > eps_, ErrorCode::degenerate, "points span less than three dimensions");
    const Vec3 axis = (pts_[i1] - pts_[i0]).normalized();
    const auto [i2, d2] = argmax([&](const Vec3& p) { return (p - pts_[i0]).cross(axis).norm(); });
    require(d2 > eps_, ErrorCode::degenerate, "points span less than three dimensions");
    const Vec3 normal = (pts_[i1] - pts_[i0]).cross(pts_[i2] - pts_[i0]).normalized();
    const auto [i3, d3] = argmax([&](const Vec3& p) { return std::abs((p - pts_[i0]).dot(normal)); });
    require(d3 > eps_, ErrorCode::degenerate, "points span less than three dimensions");

    std::array<int, 4> t{i0, i1, i2, i3};
    const std::array<std::array<int, 4>, 4> layout{{{0, 1, 2, 3}, {0, 3, 1, 2}, {1, 3, 2, 0}, {0, 2, 3, 1}}};
    for (const auto& l : layout) {
      int a = t[l[0]], b = t[l[1]], c = t[l[2]];
      const Vec3 nrm = (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]);
      if (nrm.dot(pts_[t[l[3]]] - pts_[a]) > 0.0) std::swap(b, c);
      add_face(a, b, c);
    }
    for (int i : t) used_[i] = true;
  }

  void insert(int p) {
    used_[p] = true;
    const Vec3& q = pts_[p];
    std::vector<int> visible;
    int best = -1;
    double best_h = -1e300;
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
      if (!faces_[f].alive) continue;
      const double h = height(faces_[f], q);
      if (h > eps_) visible.push_back(f);
      if (h > best_h) {
        best_h = h;
        best = f;
      }
    }
    if (visible.empty()) {
      // Nearly coplanar with the current hull. A point of the sphere that is
      // not a duplicate is always a hull vertex, so attach it to the facet it
      // is closest to lying above.
      if (best_h < -1e-9) return;
      visible.push_back(best);
    }
    std::vector<char> is_visible(faces_.size(), 0);
    for (int f : visible) is_visible[f] = 1;

    std::vector<std::pair<int, int>> horizon;
    for (int f : visible) {
      const auto& v = faces_[f].v;
      for (int k = 0; k < 3; ++k) {
        const int a = v[k], b = v[(k + 1) % 3];
        const auto twin = edges_.find(edge_key(b, a));
        if (twin == edges_.end() || !is_visible[twin->second]) horizon.emplace_back(a, b);
      }
    }
    for (int f : visible) {
      faces_[f].alive = false;
      const auto& v = faces_[f].v;
      for (int k = 0; k < 3; ++k) {
        const auto it = edges_.find(edge_key(v[k], v[(k + 1) % 3]));
        if (it != edges_.end() && it->second == f) edges_.erase(it);
      }
    }
    for (const auto& [a, b] : horizon) add_face(a, b, p);
  }

  const std::vector<Vec3>& pts_;
  double eps_;
  std::vector<HullFace> faces_;
  std::vector<bool> used_;
  std::unordered_map<std::uint64_t, int> edges_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ConvexHull3 convex_hull(std::span<const Vec3> input, const GeomTolerances& tol) {
  ConvexHull3 hull;
  hull.representative.assign(input.size(), -1);
  for (std::size_t i = 0; i < input.size(); ++i) {
    int rep = -1;
    for (std::size_t k = 0; k < hull.points.size(); ++k) {
      if ((hull.points[k] - input[i]).norm() < tol.duplicate) {
        rep = static_cast<int>(k);
        break;
      }
    }
    if (rep < 0) {
      rep = static_cast<int>(hull.points.size());
      hull.points.push_back(input[i]);
      hull.source_index.push_back(static_cast<int>(i));
    }
    hull.representative[i] = rep;
  }
  require(hull.points.size() >= 4, ErrorCode::degenerate, "convex hull needs at least four distinct points");

  IncrementalHull builder(hull.points, tol.orientation);
  builder.build();
  hull.triangles = builder.triangles();

  const int nt = static_cast<int>(hull.triangles.size());
  std::vector<Vec3> normals(nt);
  std::vector<double> offsets(nt);
  std::unordered_map<std::uint64_t, int> owner;
  for (int t = 0; t < nt; ++t) {
    const auto& v = hull.triangles[t];
    normals[t] = (hull.points[v[1]] - hull.points[v[0]]).cross(hull.points[v[2]] - hull.points[v[0]]).normalized();
    offsets[t] = normals[t].dot(hull.points[v[0]]);
    for (int k = 0; k < 3; ++k) owner[edge_key(v[k], v[(k + 1) % 3])] = t;
  }

  std::vector<int> parent(nt);
  std::iota(parent.begin(), parent.end(), 0);
  for (int t = 0; t < nt; ++t) {
    const auto& v = hull.triangles[t];
    for (int k = 0; k < 3; ++k) {
      const auto it = owner.find(edge_key(v[(k + 1) % 3], v[k]));
      require(it != owner.end(), ErrorCode::numeric, "convex hull is not closed");
      const int u = it->second;
      if ((normals[t] - normals[u]).norm() < tol.coplanar && std::abs(offsets[t] - offsets[u]) < tol.coplanar)
        parent[find_root(parent, t)] = find_root(parent, u);
    }
  }

  std::unordered_map<int, int> group_of_root;
  hull.triangle_facet.assign(nt, -1);
  for (int t = 0; t < nt; ++t) {
    const int r = find_root(parent, t);
    auto [it, inserted] = group_of_root.try_emplace(r, static_cast<int>(group_of_root.size()));
    hull.triangle_facet[t] = it->second;
  }

  const int nf = static_cast<int>(group_of_root.size());
  std::vector<std::unordered_map<int, int>> next(nf);
  for (int t = 0; t < nt; ++t) {
    const auto& v = hull.triangles[t];
    const int g = hull.triangle_facet[t];
    for (int k = 0; k < 3; ++k) {
      const int a = v[k], b = v[(k + 1) % 3];
      if (hull.triangle_facet[owner.at(edge_key(b, a))] != g) next[g][a] = b;
    }
  }
  hull.facets.resize(nf);
  for (int g = 0; g < nf; ++g) {
    auto& facet = hull.facets[g];
    require(!next[g].empty(), ErrorCode::numeric, "hull facet has no boundary");
    const int start = next[g].begin()->first;
    int cur = start;
    do {
      facet.cycle.push_back(cur);
      cur = next[g].at(cur);
    } while (cur != start && facet.cycle.size() <= next[g].size());
    require(facet.cycle.size() == next[g].size(), ErrorCode::numeric, "hull facet boundary is not a single cycle");
    // Newell normal of the polygon.
    Vec3 n = Vec3::Zero();
    const std::size_t m = facet.cycle.size();
    for (std::size_t k = 0; k < m; ++k) n += hull.points[facet.cycle[k]].cross(hull.points[facet.cycle[(k + 1) % m]]);
    facet.normal = n.normalized();
    double off = 0.0;
    for (int idx : facet.cycle) off += facet.normal.dot(hull.points[idx]);
    facet.offset = off / static_cast<double>(m);
  }
  return hull;
}

SphericalTessellation tessellate(const SphericalCode& code, const GeomTolerances& tol) {
  require(code.dim() == 3, ErrorCode::invalid_argument, "tessellation is defined on S^2");
  require(code.size() >= 4, ErrorCode::degenerate, "tessellation needs at least four points");
  const std::vector<Vec3> input = code.vec3();
  const ConvexHull3 hull = convex_hull(input, tol);
  for (const auto& f : hull.facets)
    require(f.offset > tol.orientation, ErrorCode::unbounded,
            "points lie in a closed hemisphere; Voronoi cells are unbounded");

  SphericalTessellation out;
  out.sites = SphericalCode::from_vec3(hull.points);
  for (std::size_t i = 0; i < input.size(); ++i)
    if (hull.source_index[hull.representative[i]] != static_cast<int>(i)) out.collapsed.push_back(static_cast<int>(i));

  for (std::size_t t = 0; t < hull.triangles.size(); ++t) {
    const auto& v = hull.triangles[t];
    out.delaunay_cells.push_back(v);
    out.circumcenters.push_back(hull.facets[hull.triangle_facet[t]].normal);
    out.delaunay_areas.push_back(signed_triangle_area(hull.points[v[0]], hull.points[v[1]], hull.points[v[2]]));
  }

  const std::size_t n = hull.points.size();
  std::vector<std::vector<int>> incident(n);
  for (std::size_t f = 0; f < hull.facets.size(); ++f)
    for (int idx : hull.facets[f].cycle) incident[idx].push_back(static_cast<int>(f));

  out.voronoi_cells.resize(n);
  out.voronoi_areas.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& site = hull.points[i];
    const auto [e1, e2] = tangent_basis(site);
    std::vector<std::pair<double, Vec3>> ordered;
    for (int f : incident[i]) {
      const Vec3& c = hull.facets[f].normal;
      ordered.emplace_back(std::atan2(c.dot(e2), c.dot(e1)), c);
    }
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    double area = 0.0;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      out.voronoi_cells[i].push_back(ordered[k].second);
      area += signed_triangle_area(site, ordered[k].second, ordered[(k + 1) % ordered.size()].second);
    }
    out.voronoi_areas[i] = area;
  }
  return out;
}

}  // namespace sphx
