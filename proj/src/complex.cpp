#include "foldtri/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "foldtri/error.hpp"
#include "foldtri/linalg.hpp"

namespace foldtri {

bool TwoLevelLifting::single_level() const {
  for (const TwoLevel& v : values)
    if (v.eps != 0) return false;
  return true;
}

Triangulation make_triangulation(PointConfiguration config,
                                 std::vector<std::vector<int>> facets,
                                 std::optional<std::vector<int>> coloring,
                                 std::optional<TwoLevelLifting> lifting) {
  validate_configuration(config);
  const int npoints = static_cast<int>(config.points.size());
  if (facets.empty()) fail(Errc::invalid_argument, "triangulation has no facets");
  std::size_t size = 0;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      fail(Errc::invalid_argument, "facet repeats a vertex");
    for (int v : f)
      if (v < 0 || v >= npoints) fail(Errc::invalid_argument, "facet vertex index out of range");
    if (size == 0) size = f.size();
    if (f.size() != size) fail(Errc::not_pure, "facets of different dimensions");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  Triangulation out;
  out.config = std::move(config);
  out.facets.reserve(facets.size());
  for (auto& f : facets) out.facets.push_back(LatticeSimplex{std::move(f)});

  if (coloring) {
    if (static_cast<int>(coloring->size()) != npoints)
      fail(Errc::invalid_argument, "coloring length does not match the point count");
    for (const LatticeSimplex& f : out.facets) {
      std::vector<int> colors;
      for (int v : f.vertices) colors.push_back((*coloring)[v]);
      std::sort(colors.begin(), colors.end());
      if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
        fail(Errc::invalid_argument, "coloring repeats a color inside a facet");
    }
    out.coloring = std::move(coloring);
  }
  if (lifting) {
    if (lifting->values.size() != static_cast<std::size_t>(npoints))
      fail(Errc::invalid_argument, "lifting length does not match the point count");
    out.lifting = std::move(lifting);
  }
  return out;
}

namespace {

struct RidgeRef {
  int facet;
  int drop;  // position within the facet's sorted vertex list
};

DualGraph scan_ridges(const Triangulation& k, bool keep_boundary) {
  const auto& facets = k.facets;
  const int nf = static_cast<int>(facets.size());
  if (nf == 0) fail(Errc::not_pure, "empty complex");
  const int s = static_cast<int>(facets[0].vertices.size());
  for (const auto& f : facets)
    if (static_cast<int>(f.vertices.size()) != s) fail(Errc::not_pure, "facets of different dimensions");

  std::vector<RidgeRef> refs;
  refs.reserve(static_cast<std::size_t>(nf) * s);
  for (int f = 0; f < nf; ++f)
    for (int d = 0; d < s; ++d) refs.push_back({f, d});

  auto ridge_less = [&](const RidgeRef& x, const RidgeRef& y) {
    const auto& xv = facets[x.facet].vertices;
    const auto& yv = facets[y.facet].vertices;
    int xi = 0, yi = 0;
    for (int i = 0; i < s - 1; ++i) {
      if (xi == x.drop) ++xi;
      if (yi == y.drop) ++yi;
      if (xv[xi] != yv[yi]) return xv[xi] < yv[yi];
      ++xi;
      ++yi;
    }
    return false;
  };
  auto ridge_equal = [&](const RidgeRef& x, const RidgeRef& y) {
    return !ridge_less(x, y) && !ridge_less(y, x);
  };
  std::sort(refs.begin(), refs.end(), [&](const RidgeRef& x, const RidgeRef& y) {
    if (ridge_less(x, y)) return true;
    if (ridge_less(y, x)) return false;
    return x.facet < y.facet;
  });

  DualGraph g;
  g.nodes = nf;
  std::size_t i = 0;
  while (i < refs.size()) {
    std::size_t j = i + 1;
    while (j < refs.size() && ridge_equal(refs[i], refs[j])) ++j;
    const std::size_t mult = j - i;
    if (mult > 2) {
      fail(Errc::ridge_shared_by_three,
           "a ridge of facet " + std::to_string(refs[i].facet) + " lies in " +
               std::to_string(mult) + " facets");
    } else if (mult == 2) {
      const RidgeRef& x = refs[i];
      const RidgeRef& y = refs[i + 1];
      DualEdge e;
      e.a = x.facet;
      e.b = y.facet;
      e.opposite_a = facets[x.facet].vertices[x.drop];
      e.opposite_b = facets[y.facet].vertices[y.drop];
      g.edges.push_back(e);
    } else {
      ++g.boundary_ridges;
      if (keep_boundary) g.boundary.emplace_back(refs[i].facet, refs[i].drop);
    }
    i = j;
  }

  // CSR adjacency.
  g.adj_offset.assign(nf + 1, 0);
  for (const DualEdge& e : g.edges) {
    ++g.adj_offset[e.a + 1];
    ++g.adj_offset[e.b + 1];
  }
  for (int f = 0; f < nf; ++f) g.adj_offset[f + 1] += g.adj_offset[f];
  g.adj_edge.assign(g.adj_offset.back(), 0);
  std::vector<int> cursor(g.adj_offset.begin(), g.adj_offset.end() - 1);
  for (std::size_t eid = 0; eid < g.edges.size(); ++eid) {
    g.adj_edge[cursor[g.edges[eid].a]++] = static_cast<int>(eid);
    g.adj_edge[cursor[g.edges[eid].b]++] = static_cast<int>(eid);
  }
  return g;
}

}  // namespace

std::vector<int> DualGraph::components() const {
  std::vector<int> comp(nodes, -1);
  int next = 0;
  std::deque<int> queue;
  for (int start = 0; start < nodes; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    queue.push_back(start);
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int i = adj_offset[f]; i < adj_offset[f + 1]; ++i) {
        const DualEdge& e = edges[adj_edge[i]];
        int other = (e.a == f) ? e.b : e.a;
        if (comp[other] < 0) {
          comp[other] = next;
          queue.push_back(other);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool DualGraph::connected() const {
  if (nodes <= 1) return true;
  auto comp = components();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

DualGraph dual_graph(const Triangulation& k, bool keep_boundary) {
  return scan_ridges(k, keep_boundary);
}

FoldResult fold(const Triangulation& k) { return fold(k, dual_graph(k)); }

FoldResult fold(const Triangulation& k, const DualGraph& g) {
  const int npoints = static_cast<int>(k.config.points.size());
  std::vector<int> color(npoints, -1);
  std::vector<char> visited(g.nodes, 0);
  FoldResult out;

  for (int start = 0; start < g.nodes; ++start) {
    if (visited[start]) continue;
    // Facets are stored sorted, so the first unvisited facet is the
    // lexicographically smallest of its component.
    const auto& root = k.facets[start].vertices;
    for (std::size_t i = 0; i < root.size(); ++i) {
      if (color[root[i]] >= 0 && color[root[i]] != static_cast<int>(i)) {
        // Another component already pinned this vertex differently; the two
        // components share vertices, which a ridge-connected traversal cannot
        // reconcile. Treat as a conflict between the facets.
        out.conflict = FoldConflict{start, start, root[i], color[root[i]], static_cast<int>(i)};
        return out;
      }
      color[root[i]] = static_cast<int>(i);
    }
    visited[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int i = g.adj_offset[f]; i < g.adj_offset[f + 1]; ++i) {
        const DualEdge& e = g.edges[g.adj_edge[i]];
        int other = (e.a == f) ? e.b : e.a;
        int from_vertex = (e.a == f) ? e.opposite_a : e.opposite_b;
        int to_vertex = (e.a == f) ? e.opposite_b : e.opposite_a;
        int forced = color[from_vertex];
        if (color[to_vertex] < 0) {
          color[to_vertex] = forced;
        } else if (color[to_vertex] != forced) {
          out.conflict = FoldConflict{f, other, to_vertex, color[to_vertex], forced};
          return out;
        }
        if (!visited[other]) {
          visited[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  // Vertices outside every facet take color 0.
  for (int& c : color)
    if (c < 0) c = 0;
  for (const LatticeSimplex& f : k.facets) {
    std::vector<int> seen;
    for (int v : f.vertices) seen.push_back(color[v]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      fail(Errc::invalid_argument, "fold produced an invalid coloring");
  }
  out.coloring = std::move(color);
  return out;
}

BipartitionResult bipartition(const Triangulation& k) {
  DualGraph g = dual_graph(k);
  return bipartition(k, g);
}

BipartitionResult bipartition(const Triangulation& k, const DualGraph& g,
                              std::optional<int> root, bool canonicalize) {
  (void)k;
  BipartitionResult out;
  std::vector<std::uint8_t> side(g.nodes, 0);
  std::vector<char> visited(g.nodes, 0);
  std::vector<int> parent(g.nodes, -1), depth(g.nodes, 0);
  std::vector<int> component(g.nodes, -1);
  std::vector<int> component_first;

  auto bfs = [&](int start, int comp_id) -> std::optional<OddCycleWitness> {
    visited[start] = 1;
    side[start] = 0;
    component[start] = comp_id;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int i = g.adj_offset[f]; i < g.adj_offset[f + 1]; ++i) {
        const DualEdge& e = g.edges[g.adj_edge[i]];
        int other = (e.a == f) ? e.b : e.a;
        if (!visited[other]) {
          visited[other] = 1;
          side[other] = side[f] ^ 1;
          parent[other] = f;
          depth[other] = depth[f] + 1;
          component[other] = component[f];
          queue.push_back(other);
        } else if (side[other] == side[f]) {
          // Tree paths from f and other up to their meeting point close an
          // odd cycle with the offending edge.
          std::vector<int> left{f}, right{other};
          int a = f, b = other;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          OddCycleWitness w;
          w.facets = left;  // f .. lca inclusive
          for (std::size_t j = right.size() - 1; j-- > 0;) w.facets.push_back(right[j]);
          return w;
        }
      }
    }
    return std::nullopt;
  };

  if (root && *root >= 0 && *root < g.nodes) {
    component_first.push_back(*root);
    if (auto w = bfs(*root, static_cast<int>(component_first.size()) - 1)) {
      out.witness = std::move(w);
      return out;
    }
  }
  for (int start = 0; start < g.nodes; ++start) {
    if (visited[start]) continue;
    component_first.push_back(start);
    if (auto w = bfs(start, static_cast<int>(component_first.size()) - 1)) {
      out.witness = std::move(w);
      return out;
    }
  }

  if (canonicalize) {
    // Within each component the lexicographically smallest facet (the one
    // with the smallest index, since facets are sorted) is black.
    std::vector<int> min_facet(component_first.size(), -1);
    for (int f = 0; f < g.nodes; ++f)
      if (min_facet[component[f]] < 0) min_facet[component[f]] = f;
    std::vector<std::uint8_t> flip(component_first.size(), 0);
    for (std::size_t c = 0; c < component_first.size(); ++c)
      flip[c] = side[min_facet[c]];
    for (int f = 0; f < g.nodes; ++f) side[f] ^= flip[component[f]];
  }
  out.parts = Bipartition{std::move(side)};
  return out;
}

std::vector<Int> facet_volumes(const Triangulation& k) {
  std::vector<Int> out;
  out.reserve(k.facets.size());
  for (const LatticeSimplex& f : k.facets) out.push_back(normalized_volume(k.config, f));
  return out;
}

SignatureResult signature(const Triangulation& k) { return signature(k, dual_graph(k)); }

SignatureResult signature(const Triangulation& k, const DualGraph& g) {
  if (!g.connected())
    fail(Errc::disconnected_dual_graph, "signature requires a connected dual graph");
  SignatureResult out;
  auto parts = bipartition(k, g);
  if (!parts.bipartite()) {
    out.witness = parts.witness;
    return out;
  }
  std::vector<Int> volumes = facet_volumes(k);
  SignatureReport report;
  for (std::size_t f = 0; f < k.facets.size(); ++f) {
    if (!is_odd(volumes[f])) continue;
    if (parts.parts->side[f] == 0)
      ++report.odd_black;
    else
      ++report.odd_white;
  }
  long long diff = report.odd_black - report.odd_white;
  report.value = diff < 0 ? -diff : diff;
  out.report = std::move(report);
  return out;
}

SignedSignatureResult signed_signature(const Triangulation& k, const std::vector<char>& mask) {
  if (mask.size() != k.facets.size())
    fail(Errc::invalid_argument, "facet mask length does not match the facet count");
  DualGraph g = dual_graph(k);
  SignedSignatureResult out;
  auto parts = bipartition(k, g);
  if (!parts.bipartite()) {
    out.witness = parts.witness;
    return out;
  }
  std::vector<Int> volumes = facet_volumes(k);
  long long value = 0;
  for (std::size_t f = 0; f < k.facets.size(); ++f) {
    if (!mask[f] || !is_odd(volumes[f])) continue;
    value += (parts.parts->side[f] == 0) ? 1 : -1;
  }
  out.value = Int(value);
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<long long> f_vector(const Triangulation& k) {
  const int s = static_cast<int>(k.facets[0].vertices.size());
  if (s > 30) fail(Errc::invalid_argument, "f-vector enumeration supports dimensions below 30");
  std::vector<long long> counts(s, 0);
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<int> face;
  for (const LatticeSimplex& f : k.facets) {
    const auto& v = f.vertices;
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
      face.clear();
      for (int i = 0; i < s; ++i)
        if (mask & (1u << i)) face.push_back(v[i]);
      if (seen.insert(face).second) ++counts[face.size() - 1];
    }
  }
  return counts;
}

CoverReport covers_hull(const Triangulation& k) {
  DualGraph g;
  try {
    g = scan_ridges(k, true);
  } catch (const Error& e) {
    CoverReport report;
    report.detail = e.what();
    return report;
  }
  return covers_hull(k, g);
}

CoverReport covers_hull(const Triangulation& k, const DualGraph& g) {
  if (static_cast<long long>(g.boundary.size()) != g.boundary_ridges)
    return covers_hull(k);  // graph was built without boundary refs
  CoverReport report;
  if (!k.config.hull_volume) {
    report.detail = "hull volume unknown";
    return report;
  }
  Int total = 0;
  try {
    for (const Int& v : facet_volumes(k)) total += v;
  } catch (const Error& e) {
    report.detail = e.what();
    return report;
  }
  if (total != *k.config.hull_volume) {
    report.detail = "facet volumes sum to " + total.str() + ", hull volume is " +
                    k.config.hull_volume->str();
    return report;
  }
  if (!k.config.facets || k.config.facets->empty()) {
    report.skipped_boundary = true;
    report.ok = true;
    report.detail = "boundary check skipped: no facet description";
    return report;
  }
  // A point's tight hull inequalities as a bitmask; a boundary ridge must have
  // a common tight inequality.
  const auto& ineqs = *k.config.facets;
  const std::size_t words = (ineqs.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> tight(k.config.points.size(),
                                                std::vector<std::uint64_t>(words, 0));
  for (std::size_t p = 0; p < k.config.points.size(); ++p) {
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      Int value = ineqs[i].offset;
      for (int c = 0; c < k.config.dim; ++c) value += ineqs[i].normal[c] * k.config.points[p][c];
      if (value == 0) tight[p][i / 64] |= (std::uint64_t{1} << (i % 64));
    }
  }
  std::vector<std::uint64_t> common(words);
  for (const auto& [facet, drop] : g.boundary) {
    const auto& verts = k.facets[facet].vertices;
    std::fill(common.begin(), common.end(), ~std::uint64_t{0});
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      if (i == drop) continue;
      for (std::size_t w = 0; w < words; ++w) common[w] &= tight[verts[i]][w];
    }
    bool on_hull = false;
    for (std::size_t w = 0; w < words; ++w) on_hull = on_hull || common[w] != 0;
    if (!on_hull) {
      report.detail = "boundary ridge of facet " + std::to_string(facet) +
                      " does not lie on the hull boundary";
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace foldtri
