#include "sphx/contacts.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "sphx/bounds.hpp"
#include "sphx/error.hpp"

namespace sphx {

namespace {

constexpr int kMaximalSizes[] = {2, 3, 4, 6, 8, 9, 12, 24, 48, 60, 120};

bool is_connected(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

// Faces of the embedding, each traced with the face on its left, i.e.
// counterclockwise seen from outside the sphere.
std::vector<std::vector<int>> trace_faces(const std::vector<Vec3>& pts, std::vector<std::vector<int>> adj) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    const auto [e1, e2] = tangent_basis(pts[v]);
    std::vector<std::pair<double, int>> order;
    for (int w : adj[v]) order.emplace_back(std::atan2(pts[w].dot(e2), pts[w].dot(e1)), w);
    std::sort(order.begin(), order.end());
    adj[v].clear();
    for (const auto& [angle, w] : order) {
      pos[v][w] = static_cast<int>(adj[v].size());
      adj[v].push_back(w);
    }
  }
  std::map<std::pair<int, int>, bool> used;
  std::vector<std::vector<int>> faces;
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      if (used[{u, v}]) continue;
      std::vector<int> face;
      int a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        const int deg = static_cast<int>(adj[b].size());
        const int w = adj[b][(pos[b].at(a) - 1 + deg) % deg];
        a = b;
        b = w;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace

ContactGraph build_contact_graph(const SphericalCode& code, double tol) {
  require(code.size() >= 2, ErrorCode::domain, "contact graph needs at least two points");
  require(tol > 0.0, ErrorCode::invalid_argument, "contact tolerance must be positive");
  require(code.dim() == 3, ErrorCode::invalid_argument, "contact graphs are built on S^2");
  ContactGraph g;
  g.vertices = code;
  g.tolerance = tol;
  g.contact_distance = code.psi();
  const std::vector<Vec3> pts = code.vec3();
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> adj(n);
  g.min_edge_length = g.max_edge_length = g.contact_distance;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = angular_distance(pts[i], pts[j]);
      require(d >= g.contact_distance - tol, ErrorCode::numeric, "packing condition violated");
      if (d - g.contact_distance > tol) continue;
      g.edges.emplace_back(i, j);
      adj[i].push_back(j);
      adj[j].push_back(i);
      g.min_edge_length = std::min(g.min_edge_length, d);
      g.max_edge_length = std::max(g.max_edge_length, d);
    }
  const int e = static_cast<int>(g.edges.size());
  if (n >= 3)
    require(e <= 3 * n - 6, ErrorCode::numeric,
            "contact graph has more than 3N - 6 edges; tolerance too loose for a planar graph");
  g.connected = is_connected(n, adj);
  if (g.connected) {
    auto faces = trace_faces(pts, adj);
    require(n - e + static_cast<int>(faces.size()) == 2, ErrorCode::numeric,
            "contact graph embedding violates Euler's relation");
    g.faces = std::move(faces);
  }
  return g;
}

int edge_count(const ContactGraph& g) { return static_cast<int>(g.edges.size()); }

MaximalityReport is_maximal_packing(const ContactGraph& g) {
  MaximalityReport r;
  const int n = static_cast<int>(g.vertices.size());
  const int e = edge_count(g);
  if (n == 2) {
    r.maximal = e == 1;
  } else {
    r.kappa = kappa(g.contact_distance);
    r.maximal = 2 * e == n * r.kappa;
  }
  if (r.maximal && std::find(std::begin(kMaximalSizes), std::end(kMaximalSizes), n) == std::end(kMaximalSizes))
    r.warning = "maximal packing reported for N = " + std::to_string(n) +
                ", which admits none; the contact tolerance is probably too loose";
  return r;
}

bool irreducible_by_faces(const ContactGraph& g) {
  require(g.faces.has_value(), ErrorCode::domain, "face structure unavailable: contact graph is disconnected");
  return std::all_of(g.faces->begin(), g.faces->end(), [](const auto& f) { return f.size() == 3 || f.size() == 4; });
}

bool irreducible_by_count(const ContactGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  return n > 6 && edge_count(g) >= 3 * n - 8;
}

}  // namespace sphx
