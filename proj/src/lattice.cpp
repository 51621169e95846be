#include "foldtri/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "foldtri/error.hpp"
#include "foldtri/linalg.hpp"

namespace foldtri {

namespace {

Int vector_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

}  // namespace

void validate_configuration(const PointConfiguration& config) {
  if (config.dim < 0) fail(Errc::invalid_argument, "negative ambient dimension");
  std::map<LatticePoint, int> seen;
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    const LatticePoint& p = config.points[i];
    if (static_cast<int>(p.size()) != config.dim)
      fail(Errc::invalid_argument, "point " + std::to_string(i) + " has wrong dimension");
    auto [it, inserted] = seen.emplace(p, static_cast<int>(i));
    if (!inserted)
      fail(Errc::invalid_argument, "points " + std::to_string(it->second) + " and " +
                                       std::to_string(i) + " coincide");
  }
  if (!config.facets) return;
  for (std::size_t f = 0; f < config.facets->size(); ++f) {
    const FacetInequality& ineq = (*config.facets)[f];
    if (static_cast<int>(ineq.normal.size()) != config.dim)
      fail(Errc::invalid_argument, "facet normal " + std::to_string(f) + " has wrong dimension");
    Int g = vector_gcd(ineq.normal);
    if (g == 0) fail(Errc::invalid_argument, "facet normal " + std::to_string(f) + " is zero");
    if (g != 1) fail(Errc::invalid_argument, "facet normal " + std::to_string(f) + " is not primitive");
    for (std::size_t i = 0; i < config.points.size(); ++i) {
      Int value = ineq.offset;
      for (int c = 0; c < config.dim; ++c) value += ineq.normal[c] * config.points[i][c];
      if (value < 0)
        fail(Errc::invalid_argument, "point " + std::to_string(i) + " violates facet " +
                                         std::to_string(f));
    }
  }
}

Int normalized_volume(const PointConfiguration& config, const LatticeSimplex& simplex) {
  const int m = config.dim;
  if (static_cast<int>(simplex.vertices.size()) != m + 1)
    fail(Errc::invalid_argument, "simplex needs " + std::to_string(m + 1) + " vertices, got " +
                                     std::to_string(simplex.vertices.size()));
  for (int v : simplex.vertices)
    if (v < 0 || v >= static_cast<int>(config.points.size()))
      fail(Errc::invalid_argument, "simplex vertex index " + std::to_string(v) + " out of range");
  IntMatrix edges(m, std::vector<Int>(m));
  const LatticePoint& base = config.points[simplex.vertices[0]];
  for (int r = 0; r < m; ++r) {
    const LatticePoint& p = config.points[simplex.vertices[r + 1]];
    for (int c = 0; c < m; ++c) edges[r][c] = p[c] - base[c];
  }
  Int d = det(std::move(edges));
  if (d == 0) fail(Errc::degenerate_simplex, "simplex spans no volume");
  return boost::multiprecision::abs(d);
}

PointConfiguration product_configuration(const PointConfiguration& p,
                                         const PointConfiguration& q) {
  PointConfiguration out;
  out.dim = p.dim + q.dim;
  out.points.reserve(p.points.size() * q.points.size());
  for (const LatticePoint& v : p.points) {
    for (const LatticePoint& w : q.points) {
      LatticePoint pw;
      pw.reserve(out.dim);
      pw.insert(pw.end(), v.begin(), v.end());
      pw.insert(pw.end(), w.begin(), w.end());
      out.points.push_back(std::move(pw));
    }
  }
  if (p.facets && q.facets) {
    std::vector<FacetInequality> facets;
    for (const FacetInequality& f : *p.facets) {
      FacetInequality g;
      g.normal = f.normal;
      g.normal.resize(out.dim, Int(0));
      g.offset = f.offset;
      facets.push_back(std::move(g));
    }
    for (const FacetInequality& f : *q.facets) {
      FacetInequality g;
      g.normal.assign(p.dim, Int(0));
      g.normal.insert(g.normal.end(), f.normal.begin(), f.normal.end());
      g.offset = f.offset;
      facets.push_back(std::move(g));
    }
    out.facets = std::move(facets);
  }
  if (p.hull_volume && q.hull_volume)
    out.hull_volume = *p.hull_volume * *q.hull_volume * binomial(out.dim, p.dim);
  return out;
}

PointConfiguration simplex_config(int m) {
  if (m < 0) fail(Errc::unsupported_shape, "simplex dimension must be nonnegative");
  PointConfiguration out;
  out.dim = m;
  out.points.assign(m + 1, LatticePoint(m, Int(0)));
  for (int i = 1; i <= m; ++i) out.points[i][i - 1] = 1;
  std::vector<FacetInequality> facets;
  for (int i = 0; i < m; ++i) {
    FacetInequality f;
    f.normal.assign(m, Int(0));
    f.normal[i] = 1;
    f.offset = 0;
    facets.push_back(std::move(f));
  }
  if (m > 0) {
    FacetInequality f;
    f.normal.assign(m, Int(-1));
    f.offset = 1;
    facets.push_back(std::move(f));
  }
  out.facets = std::move(facets);
  out.hull_volume = 1;
  return out;
}

PointConfiguration cube_config(int d) {
  if (d < 0 || d > 30) fail(Errc::unsupported_shape, "cube dimension out of range");
  PointConfiguration out;
  out.dim = d;
  out.points.reserve(std::size_t{1} << d);
  for (long long v = 0; v < (1LL << d); ++v) {
    LatticePoint p(d);
    for (int i = 0; i < d; ++i) p[i] = (v >> i) & 1;
    out.points.push_back(std::move(p));
  }
  std::vector<FacetInequality> facets;
  for (int i = 0; i < d; ++i) {
    FacetInequality lo;
    lo.normal.assign(d, Int(0));
    lo.normal[i] = 1;
    lo.offset = 0;
    facets.push_back(std::move(lo));
    FacetInequality hi;
    hi.normal.assign(d, Int(0));
    hi.normal[i] = -1;
    hi.offset = 1;
    facets.push_back(std::move(hi));
  }
  out.facets = std::move(facets);
  Int vol = 1;
  for (int i = 2; i <= d; ++i) vol *= i;
  out.hull_volume = vol;
  return out;
}

PointConfiguration segment_config(long long k, long long l) {
  if (k >= l) fail(Errc::unsupported_shape, "segment needs k < l");
  PointConfiguration out;
  out.dim = 1;
  for (long long x = k; x <= l; ++x) out.points.push_back({Int(x)});
  out.facets = std::vector<FacetInequality>{{{Int(1)}, Int(-k)}, {{Int(-1)}, Int(l)}};
  out.hull_volume = l - k;
  return out;
}

PointConfiguration sharp_simplex_config(int m, long long k) {
  if (m < 2) fail(Errc::unsupported_shape, "sharp simplex needs dimension >= 2");
  if (k < 1) fail(Errc::unsupported_shape, "sharp simplex needs k >= 1");
  PointConfiguration out;
  out.dim = 2;
  out.points.push_back({Int(0), Int(1)});
  out.points.push_back({Int(1), Int(0)});
  for (long long i = 1; i <= k; ++i) out.points.push_back({Int(i), Int(1)});
  out.points.push_back({Int(2 * k), Int(2)});
  std::sort(out.points.begin(), out.points.end());
  out.hull_volume = 2 * k + 1;
  // Iterated coning with unit-vector apices; the lattice points of the cone
  // are the lifted base points plus the apex, and the volume is unchanged.
  for (int dim = 3; dim <= m; ++dim) {
    PointConfiguration cone;
    cone.dim = dim;
    for (LatticePoint p : out.points) {
      p.push_back(0);
      cone.points.push_back(std::move(p));
    }
    LatticePoint apex(dim, Int(0));
    apex[dim - 1] = 1;
    cone.points.push_back(std::move(apex));
    cone.hull_volume = out.hull_volume;
    out = std::move(cone);
  }
  return out;
}

PointConfiguration standard_shape(std::string_view kind, const std::vector<long long>& params) {
  auto arity = [&](std::size_t want) {
    if (params.size() != want)
      fail(Errc::unsupported_shape, std::string(kind) + " takes " + std::to_string(want) +
                                        " parameter(s), got " + std::to_string(params.size()));
  };
  if (kind == "simplex") {
    arity(1);
    return simplex_config(static_cast<int>(params[0]));
  }
  if (kind == "cube") {
    arity(1);
    return cube_config(static_cast<int>(params[0]));
  }
  if (kind == "segment") {
    arity(2);
    return segment_config(params[0], params[1]);
  }
  if (kind == "sharp_simplex") {
    arity(2);
    return sharp_simplex_config(static_cast<int>(params[0]), params[1]);
  }
  fail(Errc::unsupported_shape, "unknown shape '" + std::string(kind) + "'");
}

}  // namespace foldtri
