#pragma once

#include <optional>
#include <span>
#include <vector>

#include "foldtri/complex.hpp"
#include "foldtri/product.hpp"

namespace foldtri {

enum class LiftSign { above, on, below };

// Sign of the lifted point p against the hyperplane spanned by the lifted
// simplex, over the ordered ring of rational polynomials in a positive
// infinitesimal: the base-channel determinant decides unless it vanishes, then
// the eps channel does. "above" means the interpolated height at p is smaller
// than p's own lift. Throws degenerate_base when the simplex points are
// affinely dependent.
LiftSign lifted_hyperplane_sign(const LatticePoint& p, const TwoLevel& lift_p,
                                std::span<const LatticePoint> simplex,
                                std::span<const TwoLevel> lifts);

struct RidgeCheck {
  int facet = -1;
  int neighbor = -1;
  LiftSign sign = LiftSign::on;
};

struct RegularityCertificate {
  bool certified = false;
  bool degenerate = false;        // an "on" sign was encountered
  long long checks = 0;           // ridge checks performed (both directions)
  std::vector<RidgeCheck> all_checks;  // populated when requested
  std::optional<RidgeCheck> failure;
  // Any epsilon in (0, epsilon_bound) flattens the two-level lifting without
  // changing a single ridge sign; nullopt means unconstrained.
  std::optional<Rat> epsilon_bound;
};

// Local convexity at every interior ridge: for adjacent facets F, G the lifted
// opposite vertex of G must lie strictly above the lifted hyperplane of F (and
// symmetrically). Requires a full lifting; also verifies that the facets
// triangulate the hull when the hull volume is known.
RegularityCertificate induces_triangulation(const Triangulation& k, bool record_checks = false);

enum class LiftingMode { lexrev, color };

// Composes single-level factor liftings into the two-level product lifting:
// base lambda(v) + mu(w), eps 2^(lexrev position) in lexrev mode or
// 2^((n+1)c_K(v) + (n - c_L(w))) in color mode (color mode requires colorings
// and color-consecutive orderings).
TwoLevelLifting product_lifting(const Triangulation& k, const VertexOrdering& ok,
                                const Triangulation& l, const VertexOrdering& ol,
                                LiftingMode mode);

// Replaces a certified two-level lifting by the single-level lifting
// base + epsilon * eps for an exact epsilon below the certificate bound.
// Throws invalid_argument when the lifting does not certify.
TwoLevelLifting flatten_lifting(const Triangulation& k);

}  // namespace foldtri
