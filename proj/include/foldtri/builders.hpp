#pragma once

#include "foldtri/complex.hpp"

namespace foldtri {

// Ready-made small triangulations used as building blocks and test fixtures.

// The m-simplex as a one-facet complex, colored by vertex index, flat lifting.
Triangulation simplex_triangulation(int m);

// Dense path triangulation of [k, l] with parity coloring and the strictly
// convex lifting x^2.
Triangulation segment_path_triangulation(long long k, long long l);

// [0,1] as a single segment; coloring (0, 1), flat lifting.
Triangulation unit_segment_triangulation();

// The unit square split along the (1,0)-(0,1) diagonal into {0,1,2},{1,2,3};
// apices 0 and 3 share a color and are lifted to height 1.
Triangulation unit_square_triangulation();

// The unique dense triangulation of sharp_simplex_config(2, k): every interior
// point (i,1) ends up with dual-graph degree 3. Not foldable for any k >= 1.
Triangulation sharp_dense_triangulation(long long k);

}  // namespace foldtri
