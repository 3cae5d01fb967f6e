#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "sphx/error.hpp"
#include "sphx/io.hpp"
#include "sphx/solids.hpp"

using namespace sphx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::invalid_argument;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("point sets normalize on load") {
  const auto code = io::parse_point_set(R"({"dimension": 3, "points": [[2, 0, 0], [0, 0, -5]]})");
  CHECK(code.size() == 2);
  CHECK(code[0][0] == 1.0);
  CHECK(code[1][2] == -1.0);
}

TEST_CASE("malformed point sets") {
  CHECK(code_of([] { io::parse_point_set(R"({"dimension": 3, "points": [[0, 0, 0]]})"); }) == ErrorCode::parse);
  CHECK(code_of([] { io::parse_point_set(R"({"dimension": 3, "points": [[1, 0]]})"); }) == ErrorCode::parse);
  CHECK(code_of([] { io::parse_point_set(R"({"points": [[1, 0, 0]]})"); }) == ErrorCode::parse);
  CHECK(code_of([] { io::parse_point_set("{not json"); }) == ErrorCode::parse);
  CHECK(code_of([] { io::parse_point_set(R"({"dimension": 3, "points": [["a", 0, 0]]})"); }) == ErrorCode::parse);
  CHECK(code_of([] { io::load_point_set("/nonexistent/dir/points.json"); }) == ErrorCode::io);
}

TEST_CASE("point sets round trip at full precision") {
  const auto code = SphericalCode::from_vec3(solid_vertices(Solid::icosahedron));
  const std::string path = temp_path("sphx_io_roundtrip.json");
  io::save_point_set(path, code);
  const auto back = io::load_point_set(path);
  std::remove(path.c_str());
  REQUIRE(back.size() == code.size());
  for (std::size_t i = 0; i < code.size(); ++i) CHECK((back[i].coords() - code[i].coords()).norm() == 0.0);
  CHECK(back.psi() == code.psi());
}

TEST_CASE("kissing table documents") {
  const auto t = io::parse_kissing_table(R"([{"n": 5, "k": 40, "provenance": "bound"}, {"n": 8, "k": 240, "provenance": "exact"}])");
  CHECK(t.at(3).k == 12);
  CHECK(t.at(5).k == 40);
  CHECK(t.at(5).provenance == Provenance::bound);
  CHECK(t.at(8).provenance == Provenance::exact);
  CHECK(code_of([] { io::parse_kissing_table(R"([{"n": 5, "k": 40, "provenance": "guess"}])"); }) == ErrorCode::parse);
  CHECK(code_of([] { io::parse_kissing_table(R"({"n": 5})"); }) == ErrorCode::parse);
}

TEST_CASE("significant digit rounding") {
  CHECK(io::round_significant(1.0 / 3) == 0.333333333333);
  CHECK(io::round_significant(123456789.123456789) == 123456789.123);
  CHECK(io::round_significant(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(io::round_significant(-1e-300 * 1e-300)));
}

TEST_CASE("exports are valid documents") {
  const auto text = io::format_point_set(SphericalCode::from_vec3(solid_vertices(Solid::cube)));
  CHECK(io::parse_point_set(text).size() == 8);
  CHECK(code_of([] { io::write_text_file("/nonexistent/dir/out.json", "x"); }) == ErrorCode::io);
}
