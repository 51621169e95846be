#include "foldtri/error.hpp"

namespace foldtri {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::degenerate_simplex: return "DegenerateSimplex";
    case Errc::unsupported_shape: return "UnsupportedShape";
    case Errc::malformed_shuffle: return "MalformedShuffle";
    case Errc::not_pure: return "NotPure";
    case Errc::ridge_shared_by_three: return "RidgeSharedByThree";
    case Errc::disconnected_dual_graph: return "DisconnectedDualGraph";
    case Errc::not_foldable: return "NotFoldable";
    case Errc::not_a_bipyramid: return "NotABipyramid";
    case Errc::invalid_split: return "InvalidSplit";
    case Errc::missing_coloring: return "MissingColoring";
    case Errc::missing_lifting: return "MissingLifting";
    case Errc::unsupported_lifting: return "UnsupportedLifting";
    case Errc::negative_coordinates: return "NegativeCoordinates";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::unsupported_format: return "UnsupportedFormat";
    case Errc::unsupported_ordering: return "UnsupportedOrderingCombination";
    case Errc::degenerate_base: return "DegenerateBase";
    case Errc::missing_template: return "MissingTemplateS";
    case Errc::template_invalid: return "TemplateInvalid";
    case Errc::incompatible_matching: return "IncompatibleMatching";
    case Errc::missing_facets: return "MissingFacets";
  }
  return "Error";
}

}  // namespace foldtri
