#include <string>

#include "bubblering/errors.hpp"
#include "bubblering/io/serialize.hpp"
#include "doctest.h"

using namespace bubblering;
using io::Json;

namespace {

std::string invariant_of(const std::string& text) {
  try {
    io::shape_from_json(io::parse_json(text, "test"));
  } catch (const ShapeError& e) {
    return e.invariant();
  }
  return "";
}

}  // namespace

TEST_CASE("shapes round-trip through JSON") {
  const char* inputs[] = {
      R"({"kind":"ellipse","params":{"R0":3,"m":2,"n":1},"resolution":256})",
      R"({"kind":"disk","params":{"R0":2,"rho0":1}})",
      R"({"kind":"fourier-star","params":{"R0":3,"base_radius":1,"coeffs":[0.05,0.01]}})",
      R"({"kind":"polygon","params":{"vertices":[[1,-1],[2,0],[1,1]]}})",
  };
  for (const char* text : inputs) {
    CAPTURE(text);
    const auto s = io::shape_from_json(io::parse_json(text, "test"));
    const Json j = io::shape_to_json(s);
    const auto back = io::shape_from_json(j);
    CHECK(io::shape_to_json(back) == j);
    CHECK(back.resolution() == s.resolution());
    CHECK(back.kind_name() == s.kind_name());
  }
}

TEST_CASE("malformed input names the failing invariant") {
  CHECK(invariant_of("{") == "schema");
  CHECK(invariant_of("[]") == "schema");
  CHECK(invariant_of(R"({"kind":"torus","params":{}})") == "schema");
  CHECK(invariant_of(R"({"kind":"ellipse","params":{"R0":"3","m":2,"n":1}})") == "schema");
  CHECK(invariant_of(R"({"kind":"ellipse","params":{"R0":3,"m":2,"n":1},"resolution":1.5})") ==
        "schema");
  CHECK(invariant_of(R"({"kind":"polygon","params":{"vertices":[[1,2,3]]}})") == "schema");
  CHECK(invariant_of(R"({"kind":"disk","params":{"R0":1,"rho0":1}})") == "axis-clearance");
  CHECK(invariant_of(R"({"kind":"polygon","params":{"vertices":[[1,-1],[3,-1],[1.5,0],[3,1],[1,1]]}})") ==
        "convex");
}

TEST_CASE("family descriptions") {
  auto f = io::family_from_json(io::parse_json(R"({"family":"thick-disk"})", "test"));
  CHECK(f.initial == std::vector<double>{1.5});
  CHECK(f.resolution == 128);
  f = io::family_from_json(io::parse_json(R"({"family":"ellipse","initial":[2.5,0.1],"resolution":64})", "test"));
  CHECK(f.resolution == 64);
  CHECK(f.initial.size() == 2);
  CHECK(io::family_to_json(f)["family"] == f.name());
  CHECK_THROWS_AS(io::family_from_json(io::parse_json(R"({"family":"thick-disk","initial":[1,2]})", "t")),
                  ShapeError);
  CHECK_THROWS_AS(io::family_from_json(io::parse_json(R"({"family":"blob"})", "t")), ShapeError);
}

TEST_CASE("flat CSV skips arrays and flattens objects") {
  const Json j = Json::parse(R"({"a":1,"b":{"c":"x","d":[1,2]},"e":true})");
  CHECK(io::flat_csv(j) == "key,value\na,1\nb.c,x\ne,true\n");
}
