#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "foldtri/complex.hpp"
#include "foldtri/product.hpp"

namespace foldtri {

// Recipe tree of the recursive cube construction.
struct CubeRecipe {
  enum class Kind { segment, square, c3_min, c4_table, c6_composed, product };
  Kind kind = Kind::segment;
  int dim = 1;
  OrderingKind left_order = OrderingKind::color_consecutive;
  OrderingKind right_order = OrderingKind::color_consecutive;
  std::shared_ptr<CubeRecipe> left;
  std::shared_ptr<CubeRecipe> right;

  std::string to_string() const;
};

struct CubeConstruction {
  int dim = 1;
  CubeRecipe recipe;
  Int claimed_signature;
};

struct CubeResult {
  CubeConstruction construction;
  Triangulation triangulation;
};

// The five-facet minimal triangulation of the 3-cube: central simplex
// conv{e_1,e_2,e_3,(1,1,1)} of volume 2 plus four unimodular corners.
// Coloring from fold, lifting 1 on even-weight vertices and 0 on odd.
Triangulation c3_min();

// The 23-facet triangulation of the 4-cube with signature 2, decoded from its
// tabulated facet/lifting/coloring data (vertex v has coordinates
// (bit_0(v), .., bit_3(v))). Color labels {0,1,2,4,8} are stored as ranks 0..4.
Triangulation c4_table();

// Signature lower-bound formula per dimension class:
//   d odd:        2^((d+1)/2) ((d-1)/2)!
//   d = 0 mod 4:  (d/2)!
//   d = 2 mod 4:  (2/3) (d/2)!      (d >= 6)
// with sigma(C_1) = 1 and sigma(C_2) = 0.
Int cube_signature_formula(int d);

// Per-cell permutations: matching[i][j] is the position within facet i's
// sorted vertex list that the template's j-th simplex vertex maps to.
using TemplateMatching = std::vector<std::vector<int>>;

// Refines each cell f x C_2 of the product subdivision induced by k (an
// rdf-triangulation of a polytope P, giving cells of type Delta_m x C_2) with
// the template s, a triangulation of simplex(m) x cube(2), under the given (or
// identity) vertex matching. Validates the result as a triangulation of
// P x C_2 and folds it. No lifting is attached.
Triangulation compose_with_template(const Triangulation& k, const Triangulation& s,
                                    const std::optional<TemplateMatching>& matching);

// The 6-cube built by refining c4_table x C_2 with an rdf template of
// Delta_4 x C_2 of signature 2. Throws template_invalid when s fails the rdf
// or signature checks and incompatible_matching when the refined cells
// disagree on shared boundaries.
Triangulation compose_c6(const Triangulation& s,
                         const std::optional<TemplateMatching>& matching = std::nullopt);

// The recursive rdf-triangulation of [0,1]^d: c3_min / c4_table bases, odd d
// via (cube(d-2) color-consecutive) x (square symmetric), d = 0 mod 4 via
// c4_table x cube(d-4) color-consecutive, d = 2 mod 4 via a composed 6-cube
// (missing_template without a template). Signature is certified against the
// formula; the lifting is flattened to a single level after each product.
CubeResult rdf_cube(int d, const Triangulation* template_s = nullptr,
                    const std::optional<TemplateMatching>& matching = std::nullopt);

}  // namespace foldtri
