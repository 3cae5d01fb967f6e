#include "sphx/solids.hpp"

#include <cmath>
#include <string>

#include "sphx/error.hpp"

namespace sphx {

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

std::vector<Vec3> normalized(std::vector<Vec3> v) {
  for (auto& p : v) p.normalize();
  return v;
}

// (0, +-a, +-b) and its two cyclic shifts.
void add_cyclic(std::vector<Vec3>& out, double a, double b) {
  for (double sa : {-1.0, 1.0})
    for (double sb : {-1.0, 1.0}) {
      out.emplace_back(0.0, sa * a, sb * b);
      out.emplace_back(sa * a, sb * b, 0.0);
      out.emplace_back(sb * b, 0.0, sa * a);
    }
}

Solid dual(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return Solid::tetrahedron;
    case Solid::cube: return Solid::octahedron;
    case Solid::octahedron: return Solid::cube;
    case Solid::dodecahedron: return Solid::icosahedron;
    case Solid::icosahedron: return Solid::dodecahedron;
  }
  return s;
}

}  // namespace

const char* to_string(Solid s) {
  switch (s) {
    case Solid::tetrahedron: return "tetrahedron";
    case Solid::cube: return "cube";
    case Solid::octahedron: return "octahedron";
    case Solid::dodecahedron: return "dodecahedron";
    case Solid::icosahedron: return "icosahedron";
  }
  return "unknown";
}

Solid parse_solid(std::string_view name) {
  for (Solid s : {Solid::tetrahedron, Solid::cube, Solid::octahedron, Solid::dodecahedron, Solid::icosahedron})
    if (name == to_string(s)) return s;
  fail(ErrorCode::parse, "unknown solid '" + std::string(name) +
                             "' (expected tetrahedron, cube, octahedron, dodecahedron or icosahedron)");
}

std::vector<Vec3> solid_vertices(Solid s) {
  std::vector<Vec3> v;
  switch (s) {
    case Solid::tetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case Solid::cube:
      for (double x : {-1.0, 1.0})
        for (double y : {-1.0, 1.0})
          for (double z : {-1.0, 1.0}) v.emplace_back(x, y, z);
      break;
    case Solid::octahedron:
      for (int k = 0; k < 3; ++k)
        for (double sg : {1.0, -1.0}) {
          Vec3 p = Vec3::Zero();
          p[k] = sg;
          v.push_back(p);
        }
      break;
    case Solid::dodecahedron:
      v = solid_vertices(Solid::cube);
      add_cyclic(v, 1.0 / kGolden, kGolden);
      break;
    case Solid::icosahedron:
      add_cyclic(v, 1.0, kGolden);
      break;
  }
  return normalized(std::move(v));
}

std::vector<Vec3> tangency_points(Solid s) {
  // The tetrahedron is self-dual; its face normals are the negated vertices.
  if (s == Solid::tetrahedron) {
    auto v = solid_vertices(s);
    for (auto& p : v) p = -p;
    return v;
  }
  return solid_vertices(dual(s));
}

}  // namespace sphx
