#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foldtri/complex.hpp"

namespace foldtri {

enum class OrderingKind {
  color_consecutive,
  symmetric,
  almost_color_consecutive,
  explicit_order,
};

const char* ordering_kind_name(OrderingKind kind);
std::optional<OrderingKind> ordering_kind_from_name(std::string_view name);

struct VertexOrdering {
  OrderingKind kind = OrderingKind::explicit_order;
  std::vector<int> order;     // order[rank] = vertex index
  std::vector<int> position;  // inverse: position[vertex] = rank
  std::vector<int> split;     // V0' for almost_color_consecutive, sorted
};

// Two n-simplices glued along a common facet, realized on the lattice points
// of the bipyramid over Delta_{n-1}: base {0, e_1..e_{n-1}} at height 0,
// apices at -e_n (vertex 0) and +e_n (vertex n+1). Carries the coloring
// w -> w mod (n+1) and an apex-raising lifting.
Triangulation bipyramid(int n);

// The two apices when k consists of exactly two facets sharing a ridge.
std::optional<std::pair<int, int>> bipyramid_apices(const Triangulation& k);

// color_consecutive sorts by (color, lexicographic coordinates) and requires a
// coloring (fold is attempted when absent). symmetric puts the lexicographically
// smaller apex first and the other last. almost_color_consecutive takes the
// split V0' of color class 0 and orders V0' < V1 < ... < Vn < V0''.
VertexOrdering make_ordering(const Triangulation& k, OrderingKind kind,
                             const std::vector<int>& split = {},
                             const std::vector<int>& explicit_order = {});

// The simplicial product K x L under the given vertex orderings: per facet
// cell (f, g), the monotone staircase chains of the |f| x |g| grid. Attaches
// the sum coloring for two color-consecutive orderings and the shifted modular
// coloring when one factor is a bipyramid with a symmetric ordering against a
// color-consecutive one; no coloring otherwise.
Triangulation simplicial_product(const Triangulation& k, const VertexOrdering& ok,
                                 const Triangulation& l, const VertexOrdering& ol);

// Predicted product signature from the matching product statement:
//  - both orderings color consecutive: sigma_{m,n} sigma(K) sigma(L);
//  - bipyramid factor with symmetric ordering: the same if the other factor
//    has even dimension, else sigma_{m,n} sigma(other) * (number of odd
//    facets of the bipyramid);
//  - almost color consecutive factor: the same if the other factor has even
//    dimension, else sigma_{m,n} sigma(other) |sig~(L') - sig~(L'')|.
// Throws unsupported_ordering when no statement matches.
Int product_signature_predicted(const Triangulation& k, const VertexOrdering& ok,
                                const Triangulation& l, const VertexOrdering& ol);

}  // namespace foldtri
