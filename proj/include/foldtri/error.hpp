#pragma once

#include <stdexcept>
#include <string>

namespace foldtri {

// Precondition and input failures. Verification outcomes (not foldable, not
// bipartite, not locally convex) are ordinary result values, not errors.
enum class Errc {
  invalid_argument,
  parse_error,
  degenerate_simplex,
  unsupported_shape,
  malformed_shuffle,
  not_pure,
  ridge_shared_by_three,
  disconnected_dual_graph,
  not_foldable,
  not_a_bipyramid,
  invalid_split,
  missing_coloring,
  missing_lifting,
  unsupported_lifting,
  negative_coordinates,
  length_mismatch,
  unsupported_format,
  unsupported_ordering,
  degenerate_base,
  missing_template,
  template_invalid,
  incompatible_matching,
  missing_facets,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace foldtri
