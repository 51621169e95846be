#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "foldtri/lattice.hpp"
#include "foldtri/numeric.hpp"

namespace foldtri {

// Height base + eps * epsilon for a formal positive infinitesimal epsilon.
struct TwoLevel {
  Rat base;
  Rat eps;
};

struct TwoLevelLifting {
  std::vector<TwoLevel> values;  // one entry per configuration point

  bool single_level() const;
};

// A pure simplicial complex over a point configuration. Facets are kept
// canonical: each vertex list strictly increasing, the facet list sorted and
// deduplicated. Coloring and lifting are per configuration point.
struct Triangulation {
  PointConfiguration config;
  std::vector<LatticeSimplex> facets;
  std::optional<std::vector<int>> coloring;
  std::optional<TwoLevelLifting> lifting;

  int dim() const { return config.dim; }
};

// Canonicalizes and validates (purity, index bounds, coloring distinct on
// every facet, lifting length). Throws Error on violations.
Triangulation make_triangulation(PointConfiguration config,
                                 std::vector<std::vector<int>> facets,
                                 std::optional<std::vector<int>> coloring = std::nullopt,
                                 std::optional<TwoLevelLifting> lifting = std::nullopt);

// Facets a < b sharing a ridge; opposite_a is the vertex of a not in b.
struct DualEdge {
  int a;
  int b;
  int opposite_a;
  int opposite_b;
};

struct DualGraph {
  int nodes = 0;
  std::vector<DualEdge> edges;
  std::vector<int> adj_offset;   // CSR over edge ids, per node
  std::vector<int> adj_edge;
  long long boundary_ridges = 0;  // ridges contained in exactly one facet
  // (facet, drop position) per boundary ridge, filled on request.
  std::vector<std::pair<int, int>> boundary;

  std::vector<int> components() const;  // component id per node
  bool connected() const;
};

// Ridge-sorting construction; throws not_pure / ridge_shared_by_three.
DualGraph dual_graph(const Triangulation& k, bool keep_boundary = false);

struct FoldConflict {
  int facet_a = -1;
  int facet_b = -1;
  int vertex = -1;
  int existing_color = -1;
  int forced_color = -1;
};

struct FoldResult {
  std::optional<std::vector<int>> coloring;
  std::optional<FoldConflict> conflict;

  bool foldable() const { return coloring.has_value(); }
};

// Greedy propagation over the dual graph, independently per connected
// component. The lexicographically smallest facet of each component gets
// colors 0..m assigned along its sorted vertices.
FoldResult fold(const Triangulation& k);
FoldResult fold(const Triangulation& k, const DualGraph& g);

struct Bipartition {
  std::vector<std::uint8_t> side;  // 0 = black, 1 = white per facet
};

struct OddCycleWitness {
  std::vector<int> facets;  // closed walk of odd length
};

struct BipartitionResult {
  std::optional<Bipartition> parts;
  std::optional<OddCycleWitness> witness;

  bool bipartite() const { return parts.has_value(); }
};

// Canonical convention: within each component the lexicographically smallest
// facet is black. A root may be forced for invariance testing; the coloring is
// re-canonicalized afterwards unless canonicalize is false.
BipartitionResult bipartition(const Triangulation& k, const DualGraph& g,
                              std::optional<int> root = std::nullopt,
                              bool canonicalize = true);
BipartitionResult bipartition(const Triangulation& k);

std::vector<Int> facet_volumes(const Triangulation& k);

struct SignatureReport {
  Int value;             // |odd_black - odd_white|
  long long odd_black = 0;
  long long odd_white = 0;
};

struct SignatureResult {
  std::optional<SignatureReport> report;
  std::optional<OddCycleWitness> witness;

  bool ok() const { return report.has_value(); }
};

// Requires a connected dual graph (disconnected_dual_graph otherwise).
SignatureResult signature(const Triangulation& k);
SignatureResult signature(const Triangulation& k, const DualGraph& g);

// odd black minus odd white restricted to the masked facets, under the
// canonical bipartition convention. mask.size() == facets.size().
struct SignedSignatureResult {
  std::optional<Int> value;
  std::optional<OddCycleWitness> witness;
};
SignedSignatureResult signed_signature(const Triangulation& k, const std::vector<char>& mask);

// Face counts per dimension, faces enumerated as subsets of facets.
std::vector<long long> f_vector(const Triangulation& k);

// Certifies that the facets triangulate the configuration's hull: volumes sum
// to the hull volume, no ridge lies in three facets, and every boundary ridge
// lies on a hull facet (needs the facet description for the last check; it is
// skipped with skipped_boundary=true when absent).
struct CoverReport {
  bool ok = false;
  bool skipped_boundary = false;
  std::string detail;
};
CoverReport covers_hull(const Triangulation& k);
// Variant reusing a dual graph built with keep_boundary = true.
CoverReport covers_hull(const Triangulation& k, const DualGraph& g);

}  // namespace foldtri
