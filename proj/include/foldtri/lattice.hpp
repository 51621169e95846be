#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "foldtri/numeric.hpp"

namespace foldtri {

using LatticePoint = std::vector<Int>;

// Inward-pointing primitive normal with offset: normal . x + offset >= 0.
struct FacetInequality {
  std::vector<Int> normal;
  Int offset;
};

// An ordered list of distinct lattice points, optionally with an exact facet
// description of their convex hull and the hull's normalized volume when the
// shape makes it known (standard shapes and products of such).
struct PointConfiguration {
  int dim = 0;
  std::vector<LatticePoint> points;
  std::optional<std::vector<FacetInequality>> facets;
  std::optional<Int> hull_volume;
};

// Vertex indices into a PointConfiguration, strictly increasing, size dim+1
// for a full-dimensional simplex.
struct LatticeSimplex {
  std::vector<int> vertices;
};

// Checks distinctness, facet consistency (every point satisfies every
// inequality, normals primitive). Throws Error(invalid_argument).
void validate_configuration(const PointConfiguration& config);

// |det(v_1 - v_0, ..., v_m - v_0)|; throws degenerate_simplex when zero and
// invalid_argument on malformed indices.
Int normalized_volume(const PointConfiguration& config, const LatticeSimplex& simplex);

// Points are all pairs (v, w) ordered by (index of v, index of w); facet
// descriptions and hull volumes compose when both factors carry them.
PointConfiguration product_configuration(const PointConfiguration& p,
                                         const PointConfiguration& q);

PointConfiguration simplex_config(int m);
PointConfiguration cube_config(int d);
PointConfiguration segment_config(long long k, long long l);

// The sharp simplex family: for m == 2 the triangle conv{(0,1),(1,0),(2k,2)}
// with its k interior lattice points (i,1); for m > 2 the iterated cone with
// unit-vector apices. Dense point set, no facet description.
PointConfiguration sharp_simplex_config(int m, long long k);

// Dispatcher over {"simplex","cube","segment","sharp_simplex"}; throws
// unsupported_shape for anything else or bad parameter counts.
PointConfiguration standard_shape(std::string_view kind, const std::vector<long long>& params);

}  // namespace foldtri
