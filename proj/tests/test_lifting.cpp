#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foldtri/builders.hpp"
#include "foldtri/cube.hpp"
#include "foldtri/error.hpp"
#include "foldtri/lifting.hpp"
#include "foldtri/linalg.hpp"
#include "foldtri/staircase.hpp"

using namespace foldtri;

namespace {

std::vector<LatticePoint> simplex_points_2d() {
  return {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}};
}

TwoLevel level(long long base, long long eps = 0) { return TwoLevel{Rat(base), Rat(eps)}; }

// A fixed triangulation of the [0,2] x [0,1] grid with both diagonals tilted
// the same way; point index is 2*x + y.
Triangulation staircase_like_reference() {
  PointConfiguration grid = product_configuration(segment_config(0, 2), segment_config(0, 1));
  return make_triangulation(std::move(grid), {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("hyperplane sign over flat simplices") {
  auto simplex = simplex_points_2d();
  std::vector<TwoLevel> lifts(3, level(0));
  LatticePoint p{Int(1), Int(1)};

  CHECK(lifted_hyperplane_sign(p, level(1), simplex, lifts) == LiftSign::above);
  CHECK(lifted_hyperplane_sign(p, level(0), simplex, lifts) == LiftSign::on);
  CHECK(lifted_hyperplane_sign(p, level(-2), simplex, lifts) == LiftSign::below);

  // The eps channel breaks base-level ties in either direction.
  CHECK(lifted_hyperplane_sign(p, level(0, 1), simplex, lifts) == LiftSign::above);
  CHECK(lifted_hyperplane_sign(p, level(0, -1), simplex, lifts) == LiftSign::below);

  std::vector<LatticePoint> degenerate{{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(2), Int(0)}};
  CHECK_THROWS_AS(lifted_hyperplane_sign(p, level(0), degenerate, lifts), Error);
}

TEST_CASE("scaling the eps channel by a positive rational keeps every sign") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> val(-5, 5);
  auto simplex = simplex_points_2d();
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<TwoLevel> lifts = {level(val(rng), val(rng)), level(val(rng), val(rng)),
                                   level(val(rng), val(rng))};
    TwoLevel lp = level(val(rng), val(rng));
    LatticePoint p{Int(val(rng)), Int(val(rng))};
    if (p == simplex[0] || p == simplex[1] || p == simplex[2]) continue;
    LiftSign before = lifted_hyperplane_sign(p, lp, simplex, lifts);
    Rat factor(3 + trial % 5, 7);
    std::vector<TwoLevel> scaled = lifts;
    for (TwoLevel& t : scaled) t.eps *= factor;
    TwoLevel lp_scaled{lp.base, lp.eps * factor};
    CHECK(lifted_hyperplane_sign(p, lp_scaled, simplex, scaled) == before);
  }
}

TEST_CASE("staircase liftings certify the staircase triangulation") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      Triangulation st = staircase(m, n);
      RegularityCertificate cert = induces_triangulation(st);
      CHECK(cert.certified);
      CHECK(!cert.degenerate);
    }
  }
}

TEST_CASE("wrong facets fail certification") {
  // The anti-diagonal square triangulation does not match the lexrev lifting
  // of interval x interval.
  Triangulation good = staircase(1, 1);
  std::vector<std::vector<int>> wrong{{0, 1, 2}, {1, 2, 3}};
  Triangulation flipped = make_triangulation(good.config, wrong, std::nullopt, good.lifting);
  RegularityCertificate cert = induces_triangulation(flipped);
  CHECK(!cert.certified);
  CHECK(cert.failure.has_value());
}

TEST_CASE("flat liftings are degenerate") {
  Triangulation st = staircase(1, 1);
  TwoLevelLifting flat;
  flat.values.assign(st.config.points.size(), level(0));
  st.lifting = flat;
  RegularityCertificate cert = induces_triangulation(st);
  CHECK(!cert.certified);
  CHECK(cert.degenerate);
}

TEST_CASE("certificates record the checks when asked") {
  Triangulation st = staircase(2, 2);
  RegularityCertificate cert = induces_triangulation(st, true);
  CHECK(cert.certified);
  CHECK(cert.checks > 0);
  CHECK(static_cast<long long>(cert.all_checks.size()) == cert.checks);
  for (const RidgeCheck& check : cert.all_checks) CHECK(check.sign == LiftSign::above);
}

TEST_CASE("table lifting certifies the 4-cube triangulation") {
  RegularityCertificate cert = induces_triangulation(c4_table());
  CHECK(cert.certified);
}

TEST_CASE("missing liftings are reported") {
  Triangulation square = unit_square_triangulation();
  square.lifting.reset();
  CHECK_THROWS_AS(induces_triangulation(square), Error);
}

TEST_CASE("lexrev product lifting on the unit square") {
  Triangulation seg = unit_segment_triangulation();
  VertexOrdering o = make_ordering(seg, OrderingKind::color_consecutive);
  TwoLevelLifting lifted = product_lifting(seg, o, seg, o, LiftingMode::lexrev);
  REQUIRE(lifted.values.size() == 4);
  // Vertex (v, w) at index 2v + w has perturbation 2^(2v + 1 - w).
  CHECK(lifted.values[0].eps == Rat(2));
  CHECK(lifted.values[1].eps == Rat(1));
  CHECK(lifted.values[2].eps == Rat(8));
  CHECK(lifted.values[3].eps == Rat(4));
  for (const TwoLevel& v : lifted.values) CHECK(v.base == Rat(0));

  Triangulation square = simplicial_product(seg, o, seg, o);
  square.lifting = lifted;
  RegularityCertificate cert = induces_triangulation(square);
  CHECK(cert.certified);
}

TEST_CASE("paths of length three compose like the labeled grid") {
  Triangulation path = segment_path_triangulation(0, 3);
  VertexOrdering natural =
      make_ordering(path, OrderingKind::explicit_order, {}, {0, 1, 2, 3});
  Triangulation grid = simplicial_product(path, natural, path, natural);
  TwoLevelLifting lifted = product_lifting(path, natural, path, natural, LiftingMode::lexrev);
  // Lexrev labels run 4i + (3 - j); spot-check the corners.
  CHECK(lifted.values[0 * 4 + 3].eps == Rat(1));        // label 0
  CHECK(lifted.values[3 * 4 + 3].eps == Rat(pow2(12)));  // label 12
  CHECK(lifted.values[3 * 4 + 0].eps == Rat(pow2(15)));  // label 15
  grid.lifting = lifted;
  CHECK(induces_triangulation(grid).certified);
}

TEST_CASE("color-mode product lifting certifies products and flattens exactly") {
  Triangulation c4 = c4_table();
  Triangulation square = unit_square_triangulation();
  VertexOrdering oc4 = make_ordering(c4, OrderingKind::color_consecutive);
  VertexOrdering osq = make_ordering(square, OrderingKind::color_consecutive);
  Triangulation prod = simplicial_product(c4, oc4, square, osq);
  prod.lifting = product_lifting(c4, oc4, square, osq, LiftingMode::color);
  RegularityCertificate cert = induces_triangulation(prod);
  CHECK(cert.certified);
  REQUIRE(cert.epsilon_bound.has_value());
  CHECK(*cert.epsilon_bound > 0);

  TwoLevelLifting flat = flatten_lifting(prod);
  CHECK(flat.single_level());
  prod.lifting = flat;
  CHECK(induces_triangulation(prod).certified);
}

TEST_CASE("two-level factors are rejected by product_lifting") {
  Triangulation seg = unit_segment_triangulation();
  VertexOrdering o = make_ordering(seg, OrderingKind::color_consecutive);
  Triangulation square = simplicial_product(seg, o, seg, o);
  square.lifting = product_lifting(seg, o, seg, o, LiftingMode::lexrev);
  VertexOrdering osq = make_ordering(square, OrderingKind::color_consecutive);
  CHECK_THROWS_AS(product_lifting(square, osq, seg, o, LiftingMode::lexrev), Error);
}

TEST_CASE("certificates agree with a brute-force lower hull on random liftings") {
  // Oracle: a simplex belongs to the lower hull iff every other lifted point
  // lies strictly above its hyperplane; for a generic lifting those simplices
  // triangulate the hull and must be exactly what the certificate accepts.
  PointConfiguration grid =
      product_configuration(segment_config(0, 2), segment_config(0, 1));
  const int npoints = static_cast<int>(grid.points.size());
  std::mt19937 rng(1317);
  std::uniform_int_distribution<int> height(0, 6);
  int generic_draws = 0;
  for (int trial = 0; trial < 120 && generic_draws < 40; ++trial) {
    std::vector<TwoLevel> lifts;
    for (int v = 0; v < npoints; ++v) lifts.push_back(level(height(rng)));

    std::vector<std::vector<int>> hull;
    for (int a = 0; a < npoints; ++a)
      for (int b = a + 1; b < npoints; ++b)
        for (int c = b + 1; c < npoints; ++c) {
          std::vector<LatticePoint> pts{grid.points[a], grid.points[b], grid.points[c]};
          std::vector<TwoLevel> plane{lifts[a], lifts[b], lifts[c]};
          IntMatrix edges{{pts[1][0] - pts[0][0], pts[1][1] - pts[0][1]},
                          {pts[2][0] - pts[0][0], pts[2][1] - pts[0][1]}};
          if (det(edges) == 0) continue;
          bool all_above = true;
          for (int p = 0; p < npoints && all_above; ++p) {
            if (p == a || p == b || p == c) continue;
            all_above = lifted_hyperplane_sign(grid.points[p], lifts[p], pts, plane) ==
                        LiftSign::above;
          }
          if (all_above) hull.push_back({a, b, c});
        }
    if (hull.empty()) continue;
    Triangulation candidate = make_triangulation(grid, hull);
    Int total = 0;
    for (const Int& v : facet_volumes(candidate)) total += v;
    if (total != *grid.hull_volume) continue;  // non-generic draw with ties
    ++generic_draws;
    TwoLevelLifting lifting;
    lifting.values = lifts;
    candidate.lifting = lifting;
    CHECK(induces_triangulation(candidate).certified);

    // The same lifting must reject a different triangulation of the grid.
    Triangulation wrong = staircase_like_reference();
    wrong.lifting = lifting;
    if (facet_volumes(wrong).size() == hull.size()) {
      bool same = true;
      for (std::size_t i = 0; i < hull.size(); ++i)
        same = same && wrong.facets[i].vertices == candidate.facets[i].vertices;
      if (!same) CHECK(!induces_triangulation(wrong).certified);
    }
  }
  CHECK(generic_draws >= 20);
}

TEST_CASE("color mode needs colorings and color-consecutive orderings") {
  Triangulation seg = unit_segment_triangulation();
  Triangulation square = unit_square_triangulation();
  VertexOrdering oseg = make_ordering(seg, OrderingKind::color_consecutive);
  VertexOrdering osym = make_ordering(square, OrderingKind::symmetric);
  CHECK_THROWS_AS(product_lifting(seg, oseg, square, osym, LiftingMode::color), Error);
}
