#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "foldtri/error.hpp"
#include "foldtri/lattice.hpp"
#include "foldtri/linalg.hpp"

using namespace foldtri;

namespace {

LatticeSimplex full_simplex(int npoints) {
  LatticeSimplex s;
  for (int i = 0; i < npoints; ++i) s.vertices.push_back(i);
  return s;
}

// Random unimodular matrix as a product of elementary integer operations.
IntMatrix random_unimodular(std::mt19937& rng, int n) {
  IntMatrix u(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    int r = pick(rng), s = pick(rng);
    if (r == s) continue;
    Int c = coeff(rng);
    for (int j = 0; j < n; ++j) u[r][j] += c * u[s][j];
  }
  return u;
}

}  // namespace

TEST_CASE("standard simplex has normalized volume one") {
  for (int m = 1; m <= 6; ++m) {
    PointConfiguration config = simplex_config(m);
    CHECK(normalized_volume(config, full_simplex(m + 1)) == 1);
  }
}

TEST_CASE("sharp triangle has normalized volume 2k+1") {
  // conv{(0,1),(1,0),(2k,2)} for k = 1.
  PointConfiguration config;
  config.dim = 2;
  config.points = {{Int(0), Int(1)}, {Int(1), Int(0)}, {Int(2), Int(2)}};
  CHECK(normalized_volume(config, full_simplex(3)) == 3);
}

TEST_CASE("degenerate simplices are rejected") {
  PointConfiguration config;
  config.dim = 2;
  config.points = {{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(2), Int(0)}};
  CHECK_THROWS_AS(normalized_volume(config, full_simplex(3)), Error);
}

TEST_CASE("volume is invariant under vertex permutations and unimodular maps") {
  std::mt19937 rng(77001);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + trial % 3;
    PointConfiguration config;
    config.dim = m;
    for (int i = 0; i <= m; ++i) {
      LatticePoint p(m);
      for (int c = 0; c < m; ++c) p[c] = coord(rng);
      config.points.push_back(std::move(p));
    }
    Int volume;
    try {
      volume = normalized_volume(config, full_simplex(m + 1));
    } catch (const Error&) {
      continue;  // degenerate draw
    }

    // Permuted vertex order.
    PointConfiguration shuffled = config;
    std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
    std::map<LatticePoint, int> index;
    CHECK(normalized_volume(shuffled, full_simplex(m + 1)) == volume);

    // Unimodular image.
    IntMatrix u = random_unimodular(rng, m);
    PointConfiguration mapped;
    mapped.dim = m;
    for (const LatticePoint& p : config.points) {
      LatticePoint q(m, Int(0));
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) q[r] += u[r][c] * p[c];
      mapped.points.push_back(std::move(q));
    }
    CHECK(normalized_volume(mapped, full_simplex(m + 1)) == volume);
  }
}

TEST_CASE("product configuration composes points, facets, volume") {
  PointConfiguration square = product_configuration(simplex_config(1), simplex_config(1));
  CHECK(square.points.size() == 4);
  CHECK(square.dim == 2);

  PointConfiguration p23 = product_configuration(simplex_config(2), simplex_config(3));
  CHECK(p23.points.size() == 12);
  REQUIRE(p23.facets.has_value());
  CHECK(p23.facets->size() == 7);
  CHECK(*p23.hull_volume == 10);  // binom(5,2)
  validate_configuration(p23);

  PointConfiguration c4 = product_configuration(cube_config(2), cube_config(2));
  CHECK(c4.points.size() == 16);
  CHECK(*c4.hull_volume == 24);
  // Same point set as the 4-cube, possibly in another order.
  auto sorted_points = [](PointConfiguration c) {
    std::sort(c.points.begin(), c.points.end());
    return c.points;
  };
  CHECK(sorted_points(c4) == sorted_points(cube_config(4)));

  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      PointConfiguration prod = product_configuration(simplex_config(m), simplex_config(n));
      CHECK(prod.points.size() == simplex_config(m).points.size() * simplex_config(n).points.size());
    }
  }
}

TEST_CASE("standard shapes") {
  PointConfiguration c3 = cube_config(3);
  CHECK(c3.points.size() == 8);
  CHECK(c3.facets->size() == 6);
  CHECK(*c3.hull_volume == 6);
  validate_configuration(c3);

  PointConfiguration sharp = sharp_simplex_config(2, 1);
  CHECK(sharp.points.size() == 4);
  bool has_interior = false;
  for (const LatticePoint& p : sharp.points)
    if (p[0] == 1 && p[1] == 1) has_interior = true;
  CHECK(has_interior);
  CHECK(*sharp.hull_volume == 3);

  PointConfiguration seg = segment_config(0, 2);
  REQUIRE(seg.points.size() == 3);
  CHECK(seg.points[0][0] == 0);
  CHECK(seg.points[1][0] == 1);
  CHECK(seg.points[2][0] == 2);
  validate_configuration(seg);

  PointConfiguration cone = sharp_simplex_config(3, 2);
  CHECK(cone.dim == 3);
  CHECK(cone.points.size() == 6);  // 5 base points + apex
  CHECK(*cone.hull_volume == 5);

  CHECK(standard_shape("cube", {3}).points.size() == 8);
  CHECK_THROWS_AS(standard_shape("orb", {1}), Error);
  CHECK_THROWS_AS(standard_shape("cube", {1, 2}), Error);
}

TEST_CASE("configuration validation catches duplicates and facet violations") {
  PointConfiguration bad;
  bad.dim = 1;
  bad.points = {{Int(0)}, {Int(0)}};
  CHECK_THROWS_AS(validate_configuration(bad), Error);

  PointConfiguration nonprimitive = segment_config(0, 1);
  (*nonprimitive.facets)[0].normal[0] = 2;
  CHECK_THROWS_AS(validate_configuration(nonprimitive), Error);
}
