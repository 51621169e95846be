#include "foldtri/lifting.hpp"

#include <algorithm>

#include "foldtri/error.hpp"
#include "foldtri/linalg.hpp"
#include "foldtri/staircase.hpp"

namespace foldtri {

namespace {

// Lexicographic sign of base + eps * epsilon for an infinitesimal epsilon.
int two_level_sign(const Int& base, const Int& eps) {
  if (base != 0) return base < 0 ? -1 : 1;
  if (eps != 0) return eps < 0 ? -1 : 1;
  return 0;
}

Int common_denominator(const std::vector<TwoLevel>& values, bool eps_channel) {
  Int den = 1;
  for (const TwoLevel& v : values) {
    const Rat& r = eps_channel ? v.eps : v.base;
    den = boost::multiprecision::lcm(den, rat_den(r));
  }
  return den;
}

std::vector<Int> scaled_channel(const std::vector<TwoLevel>& values, bool eps_channel,
                                const Int& den) {
  std::vector<Int> out;
  out.reserve(values.size());
  for (const TwoLevel& v : values) {
    const Rat& r = eps_channel ? v.eps : v.base;
    out.push_back(rat_num(r) * (den / rat_den(r)));
  }
  return out;
}

}  // namespace

LiftSign lifted_hyperplane_sign(const LatticePoint& p, const TwoLevel& lift_p,
                                std::span<const LatticePoint> simplex,
                                std::span<const TwoLevel> lifts) {
  const int m = static_cast<int>(p.size());
  if (static_cast<int>(simplex.size()) != m + 1 || lifts.size() != simplex.size())
    fail(Errc::invalid_argument, "hyperplane test needs m+1 simplex points with lifts");

  // Affine matrix of the simplex alone decides degeneracy and orientation.
  IntMatrix aff_matrix(m + 1, std::vector<Int>(m + 1));
  for (int c = 0; c <= m; ++c) {
    aff_matrix[0][c] = 1;
    for (int r = 0; r < m; ++r) aff_matrix[r + 1][c] = simplex[c][r];
  }
  Int aff = det(aff_matrix);
  if (aff == 0) fail(Errc::degenerate_base, "simplex points are affinely dependent");

  std::vector<TwoLevel> all_lifts(lifts.begin(), lifts.end());
  all_lifts.push_back(lift_p);
  Int den_base = common_denominator(all_lifts, false);
  Int den_eps = common_denominator(all_lifts, true);
  std::vector<Int> base = scaled_channel(all_lifts, false, den_base);
  std::vector<Int> eps = scaled_channel(all_lifts, true, den_eps);

  // det of the bordered matrix with columns (p, p_1..p_{m+1}) and the lifting
  // row, one determinant per channel. Positive scaling of a row keeps signs.
  auto channel_det = [&](const std::vector<Int>& lift_row) {
    IntMatrix mtx(m + 2, std::vector<Int>(m + 2));
    for (int c = 0; c <= m + 1; ++c) {
      const LatticePoint& pt = (c == 0) ? p : simplex[c - 1];
      mtx[0][c] = 1;
      for (int r = 0; r < m; ++r) mtx[r + 1][c] = pt[r];
      mtx[m + 1][c] = (c == 0) ? lift_row[m + 1] : lift_row[c - 1];
    }
    return det(mtx);
  };
  Int d_base = channel_det(base);
  Int d_eps = channel_det(eps);

  int s = two_level_sign(d_base, d_eps);
  if (s == 0) return LiftSign::on;
  // above <=> det * (-1)^{m+1} * aff > 0
  int orientation = (aff < 0 ? -1 : 1) * ((m % 2 == 0) ? -1 : 1);
  return s * orientation > 0 ? LiftSign::above : LiftSign::below;
}

RegularityCertificate induces_triangulation(const Triangulation& k, bool record_checks) {
  if (!k.lifting) fail(Errc::missing_lifting, "regularity check needs a lifting");
  const int m = k.dim();
  if (static_cast<int>(k.facets[0].vertices.size()) != m + 1)
    fail(Errc::invalid_argument, "regularity check needs full-dimensional facets");

  DualGraph g = dual_graph(k, true);
  if (k.config.hull_volume) {
    CoverReport cover = covers_hull(k, g);
    if (!cover.ok)
      fail(Errc::invalid_argument, "facets do not triangulate the hull: " + cover.detail);
  }

  const Int den_base = common_denominator(k.lifting->values, false);
  const Int den_eps = common_denominator(k.lifting->values, true);
  const std::vector<Int> base = scaled_channel(k.lifting->values, false, den_base);
  const std::vector<Int> eps = scaled_channel(k.lifting->values, true, den_eps);

  RegularityCertificate cert;
  cert.certified = true;
  std::optional<Rat> bound;

  IntMatrix a(m + 1, std::vector<Int>(m + 1));
  std::vector<std::vector<Int>> rhs;
  std::vector<int> opposite;
  for (int f = 0; f < g.nodes; ++f) {
    const auto& verts = k.facets[f].vertices;
    for (int c = 0; c <= m; ++c) {
      a[0][c] = 1;
      const LatticePoint& pt = k.config.points[verts[c]];
      for (int r = 0; r < m; ++r) a[r + 1][c] = pt[r];
    }
    rhs.clear();
    opposite.clear();
    for (int i = g.adj_offset[f]; i < g.adj_offset[f + 1]; ++i) {
      const DualEdge& e = g.edges[g.adj_edge[i]];
      const int p = (e.a == f) ? e.opposite_b : e.opposite_a;
      opposite.push_back(p);
      std::vector<Int> column(m + 1);
      column[0] = 1;
      const LatticePoint& pt = k.config.points[p];
      for (int r = 0; r < m; ++r) column[r + 1] = pt[r];
      rhs.push_back(std::move(column));
    }
    if (rhs.empty()) continue;
    ExactSolve solve = solve_columns(a, rhs);
    if (solve.den == 0)
      fail(Errc::invalid_argument, "facet " + std::to_string(f) + " is degenerate");
    const int den_sign = solve.den < 0 ? -1 : 1;

    for (std::size_t j = 0; j < opposite.size(); ++j) {
      const int p = opposite[j];
      // delta = den * lift(p) - sum_i z_i lift(v_i), per channel; the real
      // quantity lift(p) - interpolation has sign den_sign * sign(delta).
      Int delta_base = solve.den * base[p];
      Int delta_eps = solve.den * eps[p];
      for (int i = 0; i <= m; ++i) {
        delta_base -= solve.columns[j][i] * base[verts[i]];
        delta_eps -= solve.columns[j][i] * eps[verts[i]];
      }
      if (den_sign < 0) {
        delta_base = -delta_base;
        delta_eps = -delta_eps;
      }
      ++cert.checks;
      int s = two_level_sign(delta_base, delta_eps);
      LiftSign sign = s > 0 ? LiftSign::above : (s < 0 ? LiftSign::below : LiftSign::on);
      if (record_checks) {
        int neighbor = -1;
        // recover neighbor id for the record
        const DualEdge& e = g.edges[g.adj_edge[g.adj_offset[f] + static_cast<int>(j)]];
        neighbor = (e.a == f) ? e.b : e.a;
        cert.all_checks.push_back({f, neighbor, sign});
      }
      if (sign != LiftSign::above) {
        const DualEdge& e = g.edges[g.adj_edge[g.adj_offset[f] + static_cast<int>(j)]];
        RidgeCheck failurecheck{f, (e.a == f) ? e.b : e.a, sign};
        cert.certified = false;
        if (sign == LiftSign::on) cert.degenerate = true;
        if (!cert.failure) cert.failure = failurecheck;
        continue;
      }
      // Flattening constraint: base > 0, eps < 0 caps epsilon at
      // (delta_base / den_base) / (-delta_eps / den_eps).
      if (delta_base > 0 && delta_eps < 0) {
        Rat candidate(delta_base * den_eps, -delta_eps * den_base);
        if (!bound || candidate < *bound) bound = candidate;
      }
    }
  }
  cert.epsilon_bound = bound;
  return cert;
}

TwoLevelLifting product_lifting(const Triangulation& k, const VertexOrdering& ok,
                                const Triangulation& l, const VertexOrdering& ol,
                                LiftingMode mode) {
  if (!k.lifting || !l.lifting)
    fail(Errc::missing_lifting, "product lifting needs liftings on both factors");
  if (!k.lifting->single_level() || !l.lifting->single_level())
    fail(Errc::unsupported_lifting, "factor liftings must have zero eps parts");
  const std::size_t nk = k.config.points.size();
  const std::size_t nl = l.config.points.size();

  TwoLevelLifting out;
  out.values.resize(nk * nl);

  if (mode == LiftingMode::lexrev) {
    for (std::size_t v = 0; v < nk; ++v) {
      for (std::size_t w = 0; w < nl; ++w) {
        TwoLevel& t = out.values[v * nl + w];
        t.base = k.lifting->values[v].base + l.lifting->values[w].base;
        const unsigned long position = static_cast<unsigned long>(
            static_cast<unsigned long long>(nl) * ok.position[v] + (nl - 1 - ol.position[w]));
        t.eps = Rat(pow2(position));
      }
    }
    return out;
  }

  // Color mode: one perturbation exponent per color pair.
  if (!k.coloring || !l.coloring)
    fail(Errc::missing_coloring, "color-mode product lifting needs colorings on both factors");
  if (ok.kind != OrderingKind::color_consecutive || ol.kind != OrderingKind::color_consecutive)
    fail(Errc::unsupported_ordering, "color-mode product lifting needs color-consecutive orderings");
  const int n = l.dim();
  for (std::size_t v = 0; v < nk; ++v) {
    for (std::size_t w = 0; w < nl; ++w) {
      TwoLevel& t = out.values[v * nl + w];
      t.base = k.lifting->values[v].base + l.lifting->values[w].base;
      const int i = (*k.coloring)[v];
      const int j = (*l.coloring)[w];
      if (i < 0 || i > k.dim() || j < 0 || j > n)
        fail(Errc::invalid_argument, "color-mode lifting needs colors in 0..dim");
      t.eps = Rat(pow2(static_cast<unsigned long>(n + 1) * i + (n - j)));
    }
  }
  return out;
}

TwoLevelLifting flatten_lifting(const Triangulation& k) {
  if (!k.lifting) fail(Errc::missing_lifting, "flatten needs a lifting");
  RegularityCertificate cert = induces_triangulation(k);
  if (!cert.certified)
    fail(Errc::invalid_argument, "lifting does not induce the triangulation; cannot flatten");
  Rat epsilon = cert.epsilon_bound ? *cert.epsilon_bound / 2 : Rat(1);
  TwoLevelLifting out;
  out.values.reserve(k.lifting->values.size());
  for (const TwoLevel& v : k.lifting->values)
    out.values.push_back(TwoLevel{v.base + epsilon * v.eps, Rat(0)});
  return out;
}

}  // namespace foldtri
