#include "sphx/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sphx/error.hpp"

namespace sphx::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse, std::string(what) + ": " + e.what());
  }
}

json rounded(const Eigen::VectorXd& v, bool exact = false) {
  json row = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(exact ? v[i] : round_significant(v[i]));
  return row;
}

// Point files keep full precision so reloading reproduces psi exactly.
json points_json(const SphericalCode& code, bool exact = false) {
  json pts = json::array();
  for (const auto& p : code.points()) pts.push_back(rounded(p.coords(), exact));
  return pts;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::io, "cannot open '" + path + "': " + std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), ErrorCode::io, "cannot write '" + path + "': " + std::strerror(errno));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  require(out.good(), ErrorCode::io, "write failed for '" + path + "'");
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero in records
}

SphericalCode parse_point_set(std::string_view text) {
  const json doc = parse_json(text, "point set");
  require(doc.is_object() && doc.contains("dimension") && doc.contains("points"), ErrorCode::parse,
          "point set needs fields 'dimension' and 'points'");
  require(doc["dimension"].is_number_integer(), ErrorCode::parse, "'dimension' must be an integer");
  const int dim = doc["dimension"].get<int>();
  require(dim >= 2, ErrorCode::parse, "'dimension' must be at least 2");
  require(doc["points"].is_array(), ErrorCode::parse, "'points' must be an array");
  std::vector<UnitVector> pts;
  int row_index = 0;
  for (const auto& row : doc["points"]) {
    require(row.is_array() && static_cast<int>(row.size()) == dim, ErrorCode::parse,
            "row " + std::to_string(row_index) + " does not have " + std::to_string(dim) + " coordinates");
    Eigen::VectorXd v(dim);
    for (int k = 0; k < dim; ++k) {
      require(row[k].is_number(), ErrorCode::parse, "row " + std::to_string(row_index) + " has a non-numeric entry");
      v[k] = row[k].get<double>();
    }
    require(v.norm() > 0.0, ErrorCode::parse, "row " + std::to_string(row_index) + " is the zero vector");
    pts.emplace_back(v);
    ++row_index;
  }
  require(!pts.empty(), ErrorCode::parse, "point set is empty");
  return SphericalCode(std::move(pts));
}

std::string format_point_set(const SphericalCode& code) {
  json doc;
  doc["dimension"] = code.dim();
  doc["points"] = points_json(code, true);
  return doc.dump(2) + "\n";
}

SphericalCode load_point_set(const std::string& path) { return parse_point_set(read_text_file(path)); }

void save_point_set(const std::string& path, const SphericalCode& code) {
  write_text_file(path, format_point_set(code));
}

KissingTable parse_kissing_table(std::string_view text) {
  const json doc = parse_json(text, "kissing table");
  require(doc.is_array(), ErrorCode::parse, "kissing table must be an array of records");
  KissingTable table = KissingTable::with_defaults();
  for (const auto& rec : doc) {
    require(rec.is_object() && rec.contains("n") && rec.contains("k"), ErrorCode::parse,
            "kissing record needs fields 'n' and 'k'");
    require(rec["n"].is_number_integer() && rec["k"].is_number_integer(), ErrorCode::parse,
            "kissing record fields 'n' and 'k' must be integers");
    Provenance prov = Provenance::bound;
    if (rec.contains("provenance")) {
      const std::string p = rec["provenance"].get<std::string>();
      if (p == "exact")
        prov = Provenance::exact;
      else
        require(p == "bound", ErrorCode::parse, "provenance must be 'exact' or 'bound', got '" + p + "'");
    }
    table.set(rec["n"].get<int>(), rec["k"].get<long long>(), prov);
  }
  return table;
}

KissingTable load_kissing_table(const std::string& path) { return parse_kissing_table(read_text_file(path)); }

std::string format_graph(const ContactGraph& g) {
  json doc;
  doc["dimension"] = g.vertices.dim();
  doc["vertices"] = points_json(g.vertices);
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  doc["edges"] = edges;
  doc["faces"] = g.faces ? json(*g.faces) : json(nullptr);
  doc["contact_distance"] = round_significant(g.contact_distance);
  doc["tolerance"] = g.tolerance;
  doc["connected"] = g.connected;
  return doc.dump(2) + "\n";
}

std::string format_polyhedron(const CircumscribedPolyhedron& p) {
  json doc;
  doc["dimension"] = p.dimension;
  doc["tangency_points"] = points_json(p.tangency_points);
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back(rounded(v));
  doc["vertices"] = verts;
  doc["faces"] = p.faces;
  doc["surface_area"] = round_significant(p.surface_area);
  doc["volume"] = round_significant(p.volume);
  doc["iq"] = round_significant(iq(p).value);
  if (p.monte_carlo) {
    doc["surface_area_stderr"] = round_significant(p.surface_stderr);
    doc["volume_stderr"] = round_significant(p.volume_stderr);
  }
  return doc.dump(2) + "\n";
}

}  // namespace sphx::io
