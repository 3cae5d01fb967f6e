#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphx/geom.hpp"

namespace sphx {

/// Contact graph of a spherical code: edges join pairs at distance psi(X)
/// within `tolerance`. Faces come from the embedding on S^2 and are only
/// available when the graph is connected.
struct ContactGraph {
  SphericalCode vertices;
  std::vector<std::pair<int, int>> edges;
  double contact_distance = 0.0;
  double tolerance = 0.0;
  bool connected = false;
  std::optional<std::vector<std::vector<int>>> faces;
  double min_edge_length = 0.0;
  double max_edge_length = 0.0;
};

ContactGraph build_contact_graph(const SphericalCode& code, double tol = 1e-6);

int edge_count(const ContactGraph& g);

struct MaximalityReport {
  bool maximal = false;
  int kappa = 0;  // 0 for the N = 2 special case
  // Set when maximal but N is not one of 2, 3, 4, 6, 8, 9, 12, 24, 48, 60, 120.
  std::optional<std::string> warning;
};

// 2 e(X) = N kappa(contact distance).
MaximalityReport is_maximal_packing(const ContactGraph& g);

// Every face is a triangle or a quadrilateral. Sufficient condition only;
// throws domain when the face structure is unavailable.
bool irreducible_by_faces(const ContactGraph& g);

// N > 6 and e(X) >= 3N - 8. Sufficient condition only.
bool irreducible_by_count(const ContactGraph& g);

}  // namespace sphx
