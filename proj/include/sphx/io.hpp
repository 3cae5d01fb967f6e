#pragma once

#include <string>
#include <string_view>

#include "sphx/bounds.hpp"
#include "sphx/contacts.hpp"
#include "sphx/geom.hpp"
#include "sphx/isoperimetric.hpp"

namespace sphx::io {

// Read and write whole files; failures throw ErrorCode::io.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// Nearest double to x printed with `digits` significant digits.
double round_significant(double x, int digits = 12);

/// Point-set document: {"dimension": d, "points": [[...], ...]}.
/// Rows are normalized on load; zero rows and ragged rows are rejected.
SphericalCode parse_point_set(std::string_view text);
std::string format_point_set(const SphericalCode& code);
SphericalCode load_point_set(const std::string& path);
void save_point_set(const std::string& path, const SphericalCode& code);

/// Kissing-table document: [{"n": 5, "k": 40, "provenance": "bound"}, ...].
/// Entries are applied on top of the built-in exact values.
KissingTable parse_kissing_table(std::string_view text);
KissingTable load_kissing_table(const std::string& path);

std::string format_graph(const ContactGraph& g);
std::string format_polyhedron(const CircumscribedPolyhedron& p);

}  // namespace sphx::io
