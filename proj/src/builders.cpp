#include "foldtri/builders.hpp"

#include "foldtri/error.hpp"

namespace foldtri {

Triangulation simplex_triangulation(int m) {
  PointConfiguration config = simplex_config(m);
  std::vector<int> facet(m + 1);
  for (int i = 0; i <= m; ++i) facet[i] = i;
  std::vector<int> coloring(m + 1);
  for (int i = 0; i <= m; ++i) coloring[i] = i;
  TwoLevelLifting lifting;
  lifting.values.assign(m + 1, TwoLevel{Rat(0), Rat(0)});
  return make_triangulation(std::move(config), {facet}, std::move(coloring), std::move(lifting));
}

Triangulation segment_path_triangulation(long long k, long long l) {
  PointConfiguration config = segment_config(k, l);
  std::vector<std::vector<int>> facets;
  for (long long i = 0; i < l - k; ++i)
    facets.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  std::vector<int> coloring;
  TwoLevelLifting lifting;
  for (long long x = k; x <= l; ++x) {
    coloring.push_back(static_cast<int>(((x % 2) + 2) % 2));
    lifting.values.push_back(TwoLevel{Rat(Int(x) * Int(x)), Rat(0)});
  }
  return make_triangulation(std::move(config), std::move(facets), std::move(coloring),
                            std::move(lifting));
}

Triangulation unit_segment_triangulation() {
  PointConfiguration config = segment_config(0, 1);
  TwoLevelLifting lifting;
  lifting.values.assign(2, TwoLevel{Rat(0), Rat(0)});
  return make_triangulation(std::move(config), {{0, 1}}, std::vector<int>{0, 1},
                            std::move(lifting));
}

Triangulation unit_square_triangulation() {
  PointConfiguration config = cube_config(2);
  // Vertices 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1); split along the 1-2 diagonal.
  std::vector<std::vector<int>> facets{{0, 1, 2}, {1, 2, 3}};
  std::vector<int> coloring{0, 1, 2, 0};
  TwoLevelLifting lifting;
  lifting.values = {TwoLevel{Rat(1), Rat(0)}, TwoLevel{Rat(0), Rat(0)}, TwoLevel{Rat(0), Rat(0)},
                    TwoLevel{Rat(1), Rat(0)}};
  return make_triangulation(std::move(config), std::move(facets), std::move(coloring),
                            std::move(lifting));
}

Triangulation sharp_dense_triangulation(long long k) {
  PointConfiguration config = sharp_simplex_config(2, k);
  auto index_of = [&](long long x, long long y) {
    for (std::size_t i = 0; i < config.points.size(); ++i)
      if (config.points[i][0] == x && config.points[i][1] == y) return static_cast<int>(i);
    fail(Errc::invalid_argument, "sharp simplex point lookup failed");
  };
  const int a = index_of(0, 1);
  const int b = index_of(1, 0);
  const int c = index_of(2 * k, 2);
  std::vector<int> inner;
  for (long long i = 1; i <= k; ++i) inner.push_back(index_of(i, 1));

  std::vector<std::vector<int>> facets;
  facets.push_back({a, b, inner[0]});
  for (std::size_t i = 0; i + 1 < inner.size(); ++i)
    facets.push_back({b, inner[i], inner[i + 1]});
  facets.push_back({b, inner.back(), c});
  facets.push_back({a, inner[0], c});
  for (std::size_t i = 0; i + 1 < inner.size(); ++i)
    facets.push_back({inner[i], inner[i + 1], c});
  return make_triangulation(std::move(config), std::move(facets));
}

}  // namespace foldtri
