#pragma once

#include <optional>
#include <string>

#include "foldtri/complex.hpp"
#include "foldtri/cube.hpp"

namespace foldtri {

// Canonical serialization: fixed key order, facets sorted, rationals as "p/q"
// strings, two-space indentation. Parsing a canonical document and serializing
// it again reproduces the bytes.
std::string triangulation_to_json(const Triangulation& k);

// Throws Error(parse_error) with the offending field named.
Triangulation triangulation_from_json(const std::string& text);

// A triangulation file may additionally carry a per-cell "matching" block for
// template composition.
struct TemplateFile {
  Triangulation triangulation;
  std::optional<TemplateMatching> matching;
};
TemplateFile template_from_json(const std::string& text);

}  // namespace foldtri
