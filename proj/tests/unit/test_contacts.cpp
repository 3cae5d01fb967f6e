#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sphx/contacts.hpp"
#include "sphx/error.hpp"
#include "sphx/solids.hpp"

using namespace sphx;
using std::numbers::pi;

namespace {

ContactGraph graph_of(Solid s) { return build_contact_graph(SphericalCode::from_vec3(solid_vertices(s))); }

}  // namespace

TEST_CASE("octahedron contact graph") {
  const auto g = graph_of(Solid::octahedron);
  CHECK(edge_count(g) == 12);
  REQUIRE(g.faces.has_value());
  CHECK(g.faces->size() == 8);
  for (const auto& f : *g.faces) CHECK(f.size() == 3);
  CHECK(g.connected);
}

TEST_CASE("icosahedron contact graph is maximal and irreducible") {
  const auto g = graph_of(Solid::icosahedron);
  CHECK(edge_count(g) == 30);
  CHECK(g.faces->size() == 20);
  const auto m = is_maximal_packing(g);
  CHECK(m.maximal);
  CHECK(m.kappa == 5);
  CHECK_FALSE(m.warning.has_value());
  CHECK(irreducible_by_faces(g));
  CHECK(irreducible_by_count(g));
}

TEST_CASE("icosahedron minus two adjacent vertices") {
  auto pts = solid_vertices(Solid::icosahedron);
  const Vec3 a = pts[0];
  int adjacent = -1;
  for (int i = 1; i < static_cast<int>(pts.size()) && adjacent < 0; ++i)
    if (std::abs(a.dot(pts[i]) - 1 / std::sqrt(5.0)) < 1e-9) adjacent = i;
  REQUIRE(adjacent > 0);
  pts.erase(pts.begin() + adjacent);
  pts.erase(pts.begin());
  const auto g = build_contact_graph(SphericalCode::from_vec3(pts));
  CHECK(edge_count(g) == 21);
  CHECK_FALSE(irreducible_by_count(g));
}

TEST_CASE("cube contact graph") {
  const auto g = graph_of(Solid::cube);
  CHECK(edge_count(g) == 12);
  CHECK(g.faces->size() == 6);
  CHECK(irreducible_by_faces(g));
  CHECK_FALSE(irreducible_by_count(g));
  CHECK_FALSE(is_maximal_packing(g).maximal);
}

TEST_CASE("dodecahedron faces are pentagons") {
  const auto g = graph_of(Solid::dodecahedron);
  CHECK(edge_count(g) == 30);
  CHECK(g.faces->size() == 12);
  CHECK_FALSE(irreducible_by_faces(g));
}

TEST_CASE("square pyramid has eight contacts") {
  const std::vector<Vec3> pts{Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(-1, 0, 0), Vec3(0, -1, 0)};
  CHECK(edge_count(build_contact_graph(SphericalCode::from_vec3(pts))) == 8);
}

TEST_CASE("two points") {
  const std::vector<Vec3> pts{Vec3(0, 0, 1), Vec3(0, 0, -1)};
  const auto g = build_contact_graph(SphericalCode::from_vec3(pts));
  CHECK(edge_count(g) == 1);
  CHECK(is_maximal_packing(g).maximal);
}

TEST_CASE("the count criterion needs more than six points") {
  CHECK_FALSE(irreducible_by_count(graph_of(Solid::octahedron)));
}

TEST_CASE("disconnected graphs have no faces") {
  const std::vector<Vec3> pts{Vec3(1, 0, 0), Vec3(std::cos(0.5), std::sin(0.5), 0), Vec3(-1, 0, 0),
                              Vec3(-std::cos(0.5), 0, std::sin(0.5))};
  const auto g = build_contact_graph(SphericalCode::from_vec3(pts));
  CHECK_FALSE(g.connected);
  CHECK_FALSE(g.faces.has_value());
  CHECK_THROWS_AS(irreducible_by_faces(g), Error);
}

TEST_CASE("a loose tolerance that breaks planarity is rejected") {
  CHECK_THROWS_AS(build_contact_graph(SphericalCode::from_vec3(solid_vertices(Solid::icosahedron)), 2.0), Error);
  CHECK_THROWS_AS(build_contact_graph(SphericalCode::from_vec3(solid_vertices(Solid::cube)), 0.0), Error);
}
