#pragma once

#include <string_view>
#include <vector>

#include "sphx/geom.hpp"

namespace sphx {

enum class Solid { tetrahedron, cube, octahedron, dodecahedron, icosahedron };

const char* to_string(Solid s);
// Throws parse on an unknown name.
Solid parse_solid(std::string_view name);

// Vertex directions of the Platonic solid, normalized onto S^2.
std::vector<Vec3> solid_vertices(Solid s);

// Face normals of the solid, i.e. tangency points of its copy circumscribed
// about the unit sphere (vertex directions of the dual).
std::vector<Vec3> tangency_points(Solid s);

}  // namespace sphx
