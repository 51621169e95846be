#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "foldtri/error.hpp"
#include "foldtri/staircase.hpp"

using namespace foldtri;

TEST_CASE("facet counts and volumes") {
  CHECK(staircase(2, 3).facets.size() == 10);
  CHECK(staircase(1, 1).facets.size() == 2);
  Triangulation st = staircase(3, 3);
  CHECK(st.facets.size() == 20);
  for (const Int& v : facet_volumes(st)) CHECK(v == 1);
  CHECK(staircase(0, 4).facets.size() == 1);
}

TEST_CASE("shuffle to shift-vector") {
  Shuffle s{{0, 1, 0, 0, 1}};
  SVector v = shuffle_to_svector(s, 2, 3);
  CHECK(v.s == std::vector<int>{1, 3});

  Shuffle origin{{1, 1, 1, 0, 0}};
  CHECK(shuffle_to_svector(origin, 3, 2).s == std::vector<int>{0, 0, 0});

  Shuffle maximal{{0, 0, 1, 1, 1}};
  CHECK(shuffle_to_svector(maximal, 3, 2).s == std::vector<int>{2, 2, 2});

  CHECK_THROWS_AS(shuffle_to_svector(Shuffle{{1, 1}}, 1, 2), Error);
  CHECK_THROWS_AS(shuffle_to_svector(Shuffle{{1, 2, 0}}, 1, 2), Error);
}

TEST_CASE("shuffles come in lexicographic order and hit every shift vector") {
  auto shuffles = all_shuffles(2, 2);
  REQUIRE(shuffles.size() == 6);
  CHECK(shuffles.front().bits == std::vector<std::uint8_t>{0, 0, 1, 1});
  CHECK(shuffles.back().bits == std::vector<std::uint8_t>{1, 1, 0, 0});
  std::map<std::vector<int>, int> seen;
  for (const Shuffle& s : shuffles) ++seen[shuffle_to_svector(s, 2, 2).s];
  CHECK(seen.size() == 6);
  for (const auto& [vec, count] : seen) {
    CHECK(count == 1);
    CHECK(0 <= vec[0]);
    CHECK(vec[0] <= vec[1]);
    CHECK(vec[1] <= 2);
  }
}

TEST_CASE("facets realize their shuffles: entry rows equal the shift vector") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      auto shuffles = all_shuffles(m, n);
      for (const Shuffle& shuffle : shuffles) {
        // Walk the path like the constructor does.
        std::vector<int> entry_row(m + 1, n + 1);
        int i = 0, j = 0;
        entry_row[0] = 0;
        for (std::uint8_t b : shuffle.bits) {
          if (b == 1)
            ++i;
          else
            ++j;
          entry_row[i] = std::min(entry_row[i], j);
        }
        std::vector<int> from_path(entry_row.begin() + 1, entry_row.end());
        CHECK(from_path == shuffle_to_svector(shuffle, m, n).s);
      }
    }
  }
}

TEST_CASE("closed-form signature") {
  CHECK(staircase_signature(2, 2) == 2);
  CHECK(staircase_signature(2, 3) == 2);
  CHECK(staircase_signature(1, 1) == 0);
  CHECK(staircase_signature(4, 4) == 6);
  CHECK(staircase_signature(3, 2) == 2);
  CHECK(staircase_signature(6, 0) == 1);
  CHECK(staircase_signature(0, 6) == 1);
}

TEST_CASE("recursion agrees with the closed form") {
  CHECK(staircase_signature_recursive(2, 2) == 2);
  CHECK(staircase_signature_recursive(0, 5) == 1);
  CHECK(staircase_signature_recursive(3, 5) == 0);
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n)
      CHECK(staircase_signature_recursive(m, n) == staircase_signature(m, n));
}

TEST_CASE("staircase carries the sum coloring and the lexrev lifting") {
  Triangulation st = staircase(2, 2);
  REQUIRE(st.coloring.has_value());
  REQUIRE(st.lifting.has_value());
  // Vertex (e_i, e_j) sits at index 3i + j; its color is i + j and its height
  // 2^(3i + (2 - j)).
  CHECK((*st.coloring)[3 * 1 + 2] == 3);
  CHECK(st.lifting->values[0].base == Rat(4));       // (0,0) -> 2^2
  CHECK(st.lifting->values[3 * 2 + 2].base == Rat(64));  // (2,2) -> 2^6
  CHECK(st.lifting->single_level());
}

TEST_CASE("computed signature matches the formulas on small cases") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      SignatureResult sig = signature(staircase(m, n));
      REQUIRE(sig.ok());
      CHECK(sig.report->value == staircase_signature(m, n));
    }
  }
}
