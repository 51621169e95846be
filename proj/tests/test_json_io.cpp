#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foldtri/builders.hpp"
#include "foldtri/cube.hpp"
#include "foldtri/error.hpp"
#include "foldtri/json_io.hpp"
#include "foldtri/lifting.hpp"
#include "foldtri/staircase.hpp"

using namespace foldtri;

namespace {

void check_equal(const Triangulation& a, const Triangulation& b) {
  CHECK(a.config.dim == b.config.dim);
  CHECK(a.config.points == b.config.points);
  REQUIRE(a.facets.size() == b.facets.size());
  for (std::size_t i = 0; i < a.facets.size(); ++i)
    CHECK(a.facets[i].vertices == b.facets[i].vertices);
  CHECK(a.coloring == b.coloring);
  CHECK(a.lifting.has_value() == b.lifting.has_value());
  if (a.lifting) {
    for (std::size_t i = 0; i < a.lifting->values.size(); ++i) {
      CHECK(a.lifting->values[i].base == b.lifting->values[i].base);
      CHECK(a.lifting->values[i].eps == b.lifting->values[i].eps);
    }
  }
  CHECK(a.config.hull_volume == b.config.hull_volume);
}

}  // namespace

TEST_CASE("canonical serialization round-trips byte-identically") {
  for (const Triangulation& k :
       {staircase(2, 3), c4_table(), unit_square_triangulation(), sharp_dense_triangulation(2)}) {
    std::string once = triangulation_to_json(k);
    Triangulation parsed = triangulation_from_json(once);
    std::string twice = triangulation_to_json(parsed);
    CHECK(once == twice);
    check_equal(k, parsed);
  }
}

TEST_CASE("two-level liftings survive the round trip") {
  Triangulation seg = unit_segment_triangulation();
  VertexOrdering o = make_ordering(seg, OrderingKind::color_consecutive);
  Triangulation square = simplicial_product(seg, o, seg, o);
  square.lifting = product_lifting(seg, o, seg, o, LiftingMode::lexrev);
  std::string text = triangulation_to_json(square);
  Triangulation parsed = triangulation_from_json(text);
  check_equal(square, parsed);
  CHECK(text == triangulation_to_json(parsed));
  CHECK(induces_triangulation(parsed).certified);
}

TEST_CASE("rationals are written as p/q strings") {
  Triangulation seg = unit_segment_triangulation();
  TwoLevelLifting lifting;
  lifting.values = {TwoLevel{Rat(1, 3), Rat(0)}, TwoLevel{Rat(-5, 2), Rat(7)}};
  seg.lifting = lifting;
  std::string text = triangulation_to_json(seg);
  CHECK(text.find("\"1/3\"") != std::string::npos);
  CHECK(text.find("\"-5/2\"") != std::string::npos);
  Triangulation parsed = triangulation_from_json(text);
  CHECK(parsed.lifting->values[0].base == Rat(1, 3));
  CHECK(parsed.lifting->values[1].eps == Rat(7));
}

TEST_CASE("parse errors name the failing field") {
  auto message_of = [](const std::string& text) {
    try {
      triangulation_from_json(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message_of("{") != "no error");
  CHECK(message_of(R"({"vertices": [], "facets": []})").find("dim") != std::string::npos);
  CHECK(message_of(R"({"dim": 1, "facets": [[0]]})").find("vertices") != std::string::npos);
  CHECK(message_of(R"({"dim": 1, "vertices": [[0],[1]], "facets": [[0, "x"]]})")
            .find("facets") != std::string::npos);
  CHECK(message_of(R"({"dim": 1, "vertices": [[0],[1]], "facets": [[0,1]],
                      "coloring": [0]})")
            .find("coloring") != std::string::npos);
  CHECK(message_of(R"({"dim": 1, "vertices": [[0],[1]], "facets": [[0,1]],
                      "lifting": {"base": ["1/0", "0"]}})")
            .find("denominator") != std::string::npos);
}

TEST_CASE("invalid triangulations are rejected as parse errors") {
  // Facet index out of range.
  CHECK_THROWS_AS(
      triangulation_from_json(R"({"dim": 1, "vertices": [[0],[1]], "facets": [[0,2]]})"), Error);
  // Repeated color inside a facet.
  CHECK_THROWS_AS(triangulation_from_json(
                      R"({"dim": 1, "vertices": [[0],[1]], "facets": [[0,1]],
                          "coloring": [0,0]})"),
                  Error);
}

TEST_CASE("template files carry an optional matching") {
  std::string text = R"({
    "dim": 1,
    "vertices": [[0],[1]],
    "facets": [[0,1]],
    "matching": [[0,1],[1,0]]
  })";
  TemplateFile tf = template_from_json(text);
  REQUIRE(tf.matching.has_value());
  CHECK(tf.matching->size() == 2);
  CHECK((*tf.matching)[1] == std::vector<int>{1, 0});
}

TEST_CASE("facet descriptions and hull volumes round-trip") {
  Triangulation st = staircase(1, 2);
  std::string text = triangulation_to_json(st);
  Triangulation parsed = triangulation_from_json(text);
  REQUIRE(parsed.config.facets.has_value());
  CHECK(parsed.config.facets->size() == st.config.facets->size());
  CHECK(*parsed.config.hull_volume == 3);
}
