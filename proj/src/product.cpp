#include "foldtri/product.hpp"

#include <algorithm>
#include <map>

#include "foldtri/error.hpp"
#include "foldtri/staircase.hpp"

namespace foldtri {

const char* ordering_kind_name(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::color_consecutive: return "color_consecutive";
    case OrderingKind::symmetric: return "symmetric";
    case OrderingKind::almost_color_consecutive: return "almost_color_consecutive";
    case OrderingKind::explicit_order: return "explicit";
  }
  return "?";
}

std::optional<OrderingKind> ordering_kind_from_name(std::string_view name) {
  if (name == "color_consecutive" || name == "cc") return OrderingKind::color_consecutive;
  if (name == "symmetric") return OrderingKind::symmetric;
  if (name == "almost_color_consecutive" || name == "acc")
    return OrderingKind::almost_color_consecutive;
  if (name == "explicit") return OrderingKind::explicit_order;
  return std::nullopt;
}

Triangulation bipyramid(int n) {
  if (n < 1) fail(Errc::invalid_argument, "bipyramid needs n >= 1");
  PointConfiguration config;
  config.dim = n;
  config.points.resize(n + 2, LatticePoint(n, Int(0)));
  config.points[0][n - 1] = -1;  // apex
  for (int i = 2; i <= n; ++i) config.points[i][i - 2] = 1;
  config.points[n + 1][n - 1] = 1;  // apex
  config.hull_volume = 2;

  std::vector<std::vector<int>> facets(2);
  for (int v = 0; v <= n; ++v) facets[0].push_back(v);
  for (int v = 1; v <= n + 1; ++v) facets[1].push_back(v);

  std::vector<int> coloring(n + 2);
  for (int v = 0; v < n + 2; ++v) coloring[v] = v % (n + 1);

  TwoLevelLifting lifting;
  lifting.values.assign(n + 2, TwoLevel{Rat(0), Rat(0)});
  lifting.values[0].base = 1;
  lifting.values[n + 1].base = 1;

  return make_triangulation(std::move(config), std::move(facets), std::move(coloring),
                            std::move(lifting));
}

std::optional<std::pair<int, int>> bipyramid_apices(const Triangulation& k) {
  if (k.facets.size() != 2) return std::nullopt;
  const auto& a = k.facets[0].vertices;
  const auto& b = k.facets[1].vertices;
  std::vector<int> only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  if (only_a.size() != 1 || only_b.size() != 1) return std::nullopt;
  // Every configuration point must belong to the bipyramid.
  std::vector<char> used(k.config.points.size(), 0);
  for (int v : a) used[v] = 1;
  for (int v : b) used[v] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) return std::nullopt;
  return std::make_pair(only_a[0], only_b[0]);
}

namespace {

std::vector<int> coloring_or_fold(const Triangulation& k) {
  if (k.coloring) return *k.coloring;
  FoldResult folded = fold(k);
  if (!folded.foldable())
    fail(Errc::not_foldable, "ordering requires a foldable complex");
  return *folded.coloring;
}

std::vector<int> position_of(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) pos[order[r]] = static_cast<int>(r);
  return pos;
}

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

VertexOrdering make_ordering(const Triangulation& k, OrderingKind kind,
                             const std::vector<int>& split,
                             const std::vector<int>& explicit_order) {
  const int npoints = static_cast<int>(k.config.points.size());
  VertexOrdering out;
  out.kind = kind;

  switch (kind) {
    case OrderingKind::explicit_order: {
      if (static_cast<int>(explicit_order.size()) != npoints)
        fail(Errc::invalid_argument, "explicit ordering has wrong length");
      std::vector<char> seen(npoints, 0);
      for (int v : explicit_order) {
        if (v < 0 || v >= npoints || seen[v])
          fail(Errc::invalid_argument, "explicit ordering is not a permutation");
        seen[v] = 1;
      }
      out.order = explicit_order;
      break;
    }
    case OrderingKind::color_consecutive: {
      std::vector<int> colors = coloring_or_fold(k);
      out.order.resize(npoints);
      for (int v = 0; v < npoints; ++v) out.order[v] = v;
      std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        if (colors[a] != colors[b]) return colors[a] < colors[b];
        return lex_less(k.config.points[a], k.config.points[b]);
      });
      break;
    }
    case OrderingKind::symmetric: {
      auto apices = bipyramid_apices(k);
      if (!apices) fail(Errc::not_a_bipyramid, "symmetric ordering needs two facets sharing a ridge");
      int first = apices->first, last = apices->second;
      if (lex_less(k.config.points[last], k.config.points[first])) std::swap(first, last);
      std::vector<int> middle;
      for (int v = 0; v < npoints; ++v)
        if (v != first && v != last) middle.push_back(v);
      std::sort(middle.begin(), middle.end(), [&](int a, int b) {
        return lex_less(k.config.points[a], k.config.points[b]);
      });
      out.order.push_back(first);
      out.order.insert(out.order.end(), middle.begin(), middle.end());
      out.order.push_back(last);
      break;
    }
    case OrderingKind::almost_color_consecutive: {
      std::vector<int> colors = coloring_or_fold(k);
      int zero_color = *std::min_element(colors.begin(), colors.end());
      std::vector<char> in_split(npoints, 0);
      for (int v : split) {
        if (v < 0 || v >= npoints || colors[v] != zero_color)
          fail(Errc::invalid_split, "split vertex " + std::to_string(v) +
                                        " is not in color class " + std::to_string(zero_color));
        in_split[v] = 1;
      }
      std::vector<int> verts(npoints);
      for (int v = 0; v < npoints; ++v) verts[v] = v;
      // V0' < V1 < ... < Vn < V0''; inside a block order lexicographically.
      auto block = [&](int v) {
        if (colors[v] == zero_color) return in_split[v] ? -1 : npoints + 1;
        return colors[v];
      };
      std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        if (block(a) != block(b)) return block(a) < block(b);
        return lex_less(k.config.points[a], k.config.points[b]);
      });
      out.order = std::move(verts);
      out.split = split;
      std::sort(out.split.begin(), out.split.end());
      break;
    }
  }
  out.position = position_of(out.order);
  return out;
}

namespace {

// Colors form weakly increasing runs along the ordering and take exactly the
// values 0..dim (one class per color).
bool sum_coloring_applicable(const Triangulation& k, const VertexOrdering& o) {
  if (!k.coloring) return false;
  const auto& colors = *k.coloring;
  int prev = -1;
  for (int v : o.order) {
    if (colors[v] < prev) return false;
    prev = colors[v];
  }
  int max_color = *std::max_element(colors.begin(), colors.end());
  int min_color = *std::min_element(colors.begin(), colors.end());
  return min_color == 0 && max_color == k.dim();
}

// First and last vertices of the ordering are the apices of a two-facet
// bipyramid.
bool symmetric_ordering_applicable(const Triangulation& k, const VertexOrdering& o) {
  auto apices = bipyramid_apices(k);
  if (!apices) return false;
  int first = o.order.front(), last = o.order.back();
  return (first == apices->first && last == apices->second) ||
         (first == apices->second && last == apices->first);
}

}  // namespace

Triangulation simplicial_product(const Triangulation& k, const VertexOrdering& ok,
                                 const Triangulation& l, const VertexOrdering& ol) {
  if (ok.order.size() != k.config.points.size() || ol.order.size() != l.config.points.size())
    fail(Errc::invalid_argument, "ordering does not match the vertex count");
  PointConfiguration config = product_configuration(k.config, l.config);
  const int nq = static_cast<int>(l.config.points.size());

  std::vector<std::vector<int>> facets;
  const int fm = static_cast<int>(k.facets[0].vertices.size()) - 1;
  const int gn = static_cast<int>(l.facets[0].vertices.size()) - 1;
  const std::vector<Shuffle> shuffles = all_shuffles(fm, gn);
  facets.reserve(k.facets.size() * l.facets.size() * shuffles.size());

  std::vector<int> fs, gs;
  for (const LatticeSimplex& f : k.facets) {
    fs = f.vertices;
    std::sort(fs.begin(), fs.end(), [&](int a, int b) { return ok.position[a] < ok.position[b]; });
    for (const LatticeSimplex& g : l.facets) {
      gs = g.vertices;
      std::sort(gs.begin(), gs.end(),
                [&](int a, int b) { return ol.position[a] < ol.position[b]; });
      for (const Shuffle& shuffle : shuffles) {
        std::vector<int> facet;
        facet.reserve(fm + gn + 1);
        int i = 0, j = 0;
        facet.push_back(fs[0] * nq + gs[0]);
        for (std::uint8_t b : shuffle.bits) {
          if (b == 1)
            ++i;
          else
            ++j;
          facet.push_back(fs[i] * nq + gs[j]);
        }
        facets.push_back(std::move(facet));
      }
    }
  }

  // Coloring for the two proved schemes only.
  std::optional<std::vector<int>> coloring;
  const int m = k.dim();
  const int n = l.dim();
  const bool k_sum = sum_coloring_applicable(k, ok);
  const bool l_sum = sum_coloring_applicable(l, ol);
  if (k_sum && l_sum) {
    std::vector<int> c(config.points.size());
    for (std::size_t v = 0; v < k.config.points.size(); ++v)
      for (std::size_t w = 0; w < l.config.points.size(); ++w)
        c[v * nq + w] = (*k.coloring)[v] + (*l.coloring)[w];
    coloring = std::move(c);
  } else if (k_sum && symmetric_ordering_applicable(l, ol)) {
    std::vector<int> c(config.points.size());
    for (std::size_t v = 0; v < k.config.points.size(); ++v)
      for (std::size_t w = 0; w < l.config.points.size(); ++w)
        c[v * nq + w] = ((*k.coloring)[v] + ol.position[w]) % (m + n + 1);
    coloring = std::move(c);
  } else if (l_sum && symmetric_ordering_applicable(k, ok)) {
    std::vector<int> c(config.points.size());
    for (std::size_t v = 0; v < k.config.points.size(); ++v)
      for (std::size_t w = 0; w < l.config.points.size(); ++w)
        c[v * nq + w] = (ok.position[v] + (*l.coloring)[w]) % (m + n + 1);
    coloring = std::move(c);
  }

  return make_triangulation(std::move(config), std::move(facets), std::move(coloring));
}

namespace {

long long odd_facet_count(const Triangulation& k) {
  long long odd = 0;
  for (const Int& v : facet_volumes(k))
    if (is_odd(v)) ++odd;
  return odd;
}

Int signature_or_throw(const Triangulation& k) {
  SignatureResult s = signature(k);
  if (!s.ok()) fail(Errc::invalid_argument, "factor has a non-bipartite dual graph");
  return s.report->value;
}

// |sig~(L') - sig~(L'')| where the split of color class 0 partitions the
// facets by their color-zero vertex.
Int split_signed_difference(const Triangulation& l, const std::vector<int>& split) {
  if (!l.coloring) fail(Errc::missing_coloring, "almost color consecutive factor needs a coloring");
  const auto& colors = *l.coloring;
  int zero_color = *std::min_element(colors.begin(), colors.end());
  std::vector<char> in_split(l.config.points.size(), 0);
  for (int v : split) in_split[v] = 1;
  std::vector<char> mask_prime(l.facets.size(), 0), mask_second(l.facets.size(), 0);
  for (std::size_t f = 0; f < l.facets.size(); ++f) {
    int zero_vertex = -1;
    for (int v : l.facets[f].vertices)
      if (colors[v] == zero_color) zero_vertex = v;
    if (zero_vertex < 0)
      fail(Errc::invalid_argument, "facet without a color-zero vertex");
    (in_split[zero_vertex] ? mask_prime : mask_second)[f] = 1;
  }
  auto prime = signed_signature(l, mask_prime);
  auto second = signed_signature(l, mask_second);
  if (!prime.value || !second.value)
    fail(Errc::invalid_argument, "factor has a non-bipartite dual graph");
  return boost::multiprecision::abs(*prime.value - *second.value);
}

}  // namespace

Int product_signature_predicted(const Triangulation& k, const VertexOrdering& ok,
                                const Triangulation& l, const VertexOrdering& ol) {
  const OrderingKind a = ok.kind;
  const OrderingKind b = ol.kind;
  const Int sigma_mn = staircase_signature(k.dim(), l.dim());

  if (a == OrderingKind::color_consecutive && b == OrderingKind::color_consecutive)
    return sigma_mn * signature_or_throw(k) * signature_or_throw(l);

  if (a == OrderingKind::color_consecutive && b == OrderingKind::symmetric) {
    if (!bipyramid_apices(l)) fail(Errc::not_a_bipyramid, "symmetric factor is not a bipyramid");
    if (k.dim() % 2 == 0) return sigma_mn * signature_or_throw(k) * signature_or_throw(l);
    return sigma_mn * signature_or_throw(k) * odd_facet_count(l);
  }
  if (a == OrderingKind::symmetric && b == OrderingKind::color_consecutive)
    return product_signature_predicted(l, ol, k, ok);

  if (a == OrderingKind::color_consecutive && b == OrderingKind::almost_color_consecutive) {
    if (k.dim() % 2 == 0) return sigma_mn * signature_or_throw(k) * signature_or_throw(l);
    return sigma_mn * signature_or_throw(k) * split_signed_difference(l, ol.split);
  }
  if (a == OrderingKind::almost_color_consecutive && b == OrderingKind::color_consecutive)
    return product_signature_predicted(l, ol, k, ok);

  fail(Errc::unsupported_ordering,
       std::string("no product statement covers orderings (") + ordering_kind_name(a) + ", " +
           ordering_kind_name(b) + ")");
}

}  // namespace foldtri
