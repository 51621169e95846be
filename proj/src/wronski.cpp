#include "foldtri/wronski.hpp"

#include <algorithm>
#include <sstream>

#include "foldtri/error.hpp"
#include "foldtri/lifting.hpp"
#include "foldtri/linalg.hpp"

namespace foldtri {

bool Monomial::operator<(const Monomial& other) const {
  if (s.base != other.s.base) return s.base < other.s.base;
  if (s.eps != other.s.eps) return s.eps < other.s.eps;
  return t < other.t;
}

bool Monomial::operator==(const Monomial& other) const {
  return s.base == other.s.base && s.eps == other.s.eps && t == other.t;
}

void SparsePolynomial::add_term(Monomial mono, const Rat& coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(mono.t.size()) != nvars_)
    fail(Errc::invalid_argument, "monomial has wrong variable count");
  auto [it, inserted] = terms_.emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  if (nvars_ != other.nvars_) fail(Errc::length_mismatch, "adding polynomials of different arity");
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
  if (nvars_ != other.nvars_)
    fail(Errc::length_mismatch, "multiplying polynomials of different arity");
  SparsePolynomial out(nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial mono;
      mono.s.base = ma.s.base + mb.s.base;
      mono.s.eps = ma.s.eps + mb.s.eps;
      mono.t.resize(nvars_);
      for (int i = 0; i < nvars_; ++i) mono.t[i] = ma.t[i] + mb.t[i];
      out.add_term(std::move(mono), ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::scaled(const Rat& factor) const {
  SparsePolynomial out(nvars_);
  if (factor == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff * factor);
  return out;
}

SparsePolynomial SparsePolynomial::embedded(int offset, int total_vars) const {
  if (offset < 0 || offset + nvars_ > total_vars)
    fail(Errc::invalid_argument, "embedding block out of range");
  SparsePolynomial out(total_vars);
  for (const auto& [mono, coeff] : terms_) {
    Monomial moved;
    moved.s = mono.s;
    moved.t.assign(total_vars, 0);
    for (int i = 0; i < nvars_; ++i) moved.t[offset + i] = mono.t[i];
    out.add_term(std::move(moved), coeff);
  }
  return out;
}

bool SparsePolynomial::operator==(const SparsePolynomial& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

Rat SparsePolynomial::evaluate(const Rat& s, const std::vector<Rat>& t) const {
  if (static_cast<int>(t.size()) != nvars_)
    fail(Errc::length_mismatch, "evaluation point has wrong arity");
  auto power = [](const Rat& x, const Int& e) {
    if (e < 0) {
      if (x == 0) fail(Errc::invalid_argument, "zero raised to a negative power");
      Rat inv(rat_den(x), rat_num(x));
      Rat out(1);
      for (Int i = 0; i < -e; ++i) out *= inv;
      return out;
    }
    Rat out(1);
    for (Int i = 0; i < e; ++i) out *= x;
    return out;
  };
  Rat total(0);
  for (const auto& [mono, coeff] : terms_) {
    if (mono.s.eps != 0) fail(Errc::invalid_argument, "cannot evaluate a formal eps exponent");
    if (rat_den(mono.s.base) != 1)
      fail(Errc::invalid_argument, "cannot evaluate a fractional s exponent");
    Rat term = coeff * power(s, rat_num(mono.s.base));
    for (int i = 0; i < nvars_; ++i) term *= power(t[i], Int(mono.t[i]));
    total += term;
  }
  return total;
}

namespace {

// Ranks the distinct color labels; there must be exactly dim+1 classes.
std::vector<int> ranked_colors(const Triangulation& k) {
  if (!k.coloring) fail(Errc::missing_coloring, "coefficient polynomials need a coloring");
  std::vector<int> labels(*k.coloring);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (static_cast<int>(labels.size()) != k.dim() + 1)
    fail(Errc::invalid_argument, "coloring must have exactly dim+1 classes, found " +
                                     std::to_string(labels.size()));
  std::vector<int> ranks(k.coloring->size());
  for (std::size_t v = 0; v < ranks.size(); ++v) {
    auto it = std::lower_bound(labels.begin(), labels.end(), (*k.coloring)[v]);
    ranks[v] = static_cast<int>(it - labels.begin());
  }
  return ranks;
}

Int hull_volume_or_sum(const Triangulation& k) {
  if (k.config.hull_volume) return *k.config.hull_volume;
  Int total = 0;
  for (const Int& v : facet_volumes(k)) total += v;
  return total;
}

WronskiSystem coefficient_polynomials_impl(const Triangulation& k, bool normalize,
                                           bool allow_two_level, bool require_nonnegative) {
  if (!k.lifting) fail(Errc::missing_lifting, "coefficient polynomials need a lifting");
  if (!allow_two_level && !k.lifting->single_level())
    fail(Errc::unsupported_lifting, "coefficient polynomials need a single-level lifting");
  const int m = k.dim();
  if (require_nonnegative) {
    for (const LatticePoint& p : k.config.points)
      for (const Int& c : p)
        if (c < 0)
          fail(Errc::negative_coordinates,
               "configuration must lie in the nonnegative orthant");
  }
  std::vector<int> ranks = ranked_colors(k);

  WronskiSystem system;
  system.dim = m;
  system.kushnirenko = hull_volume_or_sum(k);
  system.polys.assign(m + 1, SparsePolynomial(m));
  for (std::size_t v = 0; v < k.config.points.size(); ++v) {
    Monomial mono;
    mono.s.base = k.lifting->values[v].base;
    mono.s.eps = k.lifting->values[v].eps;
    mono.t.reserve(m);
    for (const Int& c : k.config.points[v]) mono.t.push_back(to_int64(c));
    system.polys[ranks[v]].add_term(std::move(mono), Rat(1));
  }
  if (normalize) {
    for (SparsePolynomial& poly : system.polys) {
      if (poly.is_zero()) continue;
      Rat min_base = poly.terms().begin()->first.s.base;  // terms sorted by s first
      SparsePolynomial shifted(poly.nvars());
      for (const auto& [mono, coeff] : poly.terms()) {
        Monomial moved = mono;
        moved.s.base -= min_base;
        shifted.add_term(std::move(moved), coeff);
      }
      poly = std::move(shifted);
    }
  }
  return system;
}

}  // namespace

WronskiSystem coefficient_polynomials(const Triangulation& k, bool normalize) {
  return coefficient_polynomials_impl(k, normalize, false, true);
}

SparsePolynomial wronski_polynomial(const WronskiSystem& system, const std::vector<Rat>& a) {
  if (a.size() != system.polys.size())
    fail(Errc::length_mismatch, "need " + std::to_string(system.polys.size()) +
                                    " combination weights, got " + std::to_string(a.size()));
  SparsePolynomial out(system.dim);
  for (std::size_t i = 0; i < a.size(); ++i) out += system.polys[i].scaled(a[i]);
  return out;
}

bool product_coefficient_identity_check(const Triangulation& k, const VertexOrdering& ok,
                                        const Triangulation& l, const VertexOrdering& ol) {
  if (ok.kind != OrderingKind::color_consecutive || ol.kind != OrderingKind::color_consecutive)
    fail(Errc::unsupported_ordering, "identity check needs color-consecutive orderings");
  const int m = k.dim();
  const int n = l.dim();

  Triangulation product = simplicial_product(k, ok, l, ol);
  product.lifting = product_lifting(k, ok, l, ol, LiftingMode::color);
  WronskiSystem product_system = coefficient_polynomials_impl(product, false, true, false);

  WronskiSystem ks = coefficient_polynomials_impl(k, false, false, false);
  WronskiSystem ls = coefficient_polynomials_impl(l, false, false, false);

  for (int color = 0; color <= m + n; ++color) {
    SparsePolynomial expected(m + n);
    for (int i = 0; i <= m; ++i) {
      int j = color - i;
      if (j < 0 || j > n) continue;
      SparsePolynomial term =
          ks.polys[i].embedded(0, m + n) * ls.polys[j].embedded(m, m + n);
      // s^{eps(i,j)} with the exponent kept in the formal eps channel.
      SparsePolynomial weight(m + n);
      Monomial mono;
      mono.s.base = 0;
      mono.s.eps = Rat(pow2(static_cast<unsigned long>(n + 1) * i + (n - j)));
      mono.t.assign(m + n, 0);
      weight.add_term(std::move(mono), Rat(1));
      expected += term * weight;
    }
    if (!(product_system.polys[color] == expected)) return false;
  }
  return true;
}

CoxReport cox_oriented(const PointConfiguration& config) {
  if (!config.facets) fail(Errc::missing_facets, "orientation checks need a facet description");
  const int m = config.dim;
  CoxReport report;

  // (1) The lattice spanned by point differences has odd index in Z^m: all
  // elementary divisors odd and full rank.
  IntMatrix differences;
  for (std::size_t i = 1; i < config.points.size(); ++i) {
    std::vector<Int> row(m);
    for (int c = 0; c < m; ++c) row[c] = config.points[i][c] - config.points[0][c];
    differences.push_back(std::move(row));
  }
  std::vector<Int> divisors = elementary_divisors(differences);
  report.point_lattice_odd_index = static_cast<int>(divisors.size()) == m &&
                                   std::all_of(divisors.begin(), divisors.end(),
                                               [](const Int& d) { return is_odd(d); });

  // (2) Lambda_A has odd index in its saturation: rank of A over GF(2) equals
  // the rank over Q.
  IntMatrix a;
  for (const FacetInequality& f : *config.facets) a.push_back(f.normal);
  report.normal_lattice_odd_index = rank_gf2(Gf2Matrix::from_integers(a)) == rank_rational(a);

  // (3) An all-odd vector lies in the integer column span of (A, b): solve
  // over GF(2) with the columns of (A, b) as generators.
  Gf2Matrix generators;
  generators.cols = static_cast<int>(config.facets->size());
  for (int c = 0; c < m; ++c) {
    std::vector<Int> column;
    for (const FacetInequality& f : *config.facets) column.push_back(f.normal[c]);
    generators.append_row(column);
  }
  {
    std::vector<Int> column;
    for (const FacetInequality& f : *config.facets) column.push_back(f.offset);
    generators.append_row(column);
  }
  std::vector<std::uint64_t> all_ones((config.facets->size() + 63) / 64, 0);
  for (std::size_t i = 0; i < config.facets->size(); ++i)
    all_ones[i / 64] |= (std::uint64_t{1} << (i % 64));
  report.odd_vector_in_span = solvable_gf2(generators, all_ones);
  return report;
}

namespace {

std::string coeff_prefix(const Rat& coeff, bool leading) {
  std::ostringstream out;
  Rat abs_coeff = coeff < 0 ? Rat(-coeff) : coeff;
  if (leading) {
    if (coeff < 0) out << "-";
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  if (abs_coeff != 1) out << rat_to_string(abs_coeff) << " ";
  return out.str();
}

std::string monomial_body(const Monomial& mono) {
  std::ostringstream out;
  bool empty = true;
  if (mono.s.base != 0 || mono.s.eps != 0) {
    if (mono.s.eps != 0) {
      out << "s^(" << rat_to_string(mono.s.base) << "+" << rat_to_string(mono.s.eps) << "e)";
    } else if (mono.s.base == 1) {
      out << "s";
    } else {
      out << "s^" << rat_to_string(mono.s.base);
    }
    empty = false;
  }
  for (std::size_t i = 0; i < mono.t.size(); ++i) {
    if (mono.t[i] == 0) continue;
    if (!empty) out << " ";
    out << "t" << (i + 1);
    if (mono.t[i] != 1) out << "^" << mono.t[i];
    empty = false;
  }
  if (empty) out << "1";
  return out.str();
}

}  // namespace

std::string emit_system(const WronskiSystem& system, EmitFormat format) {
  if (format == EmitFormat::text) {
    std::ostringstream out;
    for (std::size_t i = 0; i < system.polys.size(); ++i) {
      out << "F" << i << " =";
      if (system.polys[i].is_zero()) {
        out << " 0";
      } else {
        bool leading = true;
        out << " ";
        for (const auto& [mono, coeff] : system.polys[i].terms()) {
          std::string prefix = coeff_prefix(coeff, leading);
          std::string body = monomial_body(mono);
          // A bare coefficient absorbs the "1" body unless it is the whole term.
          if ((coeff == 1 || coeff == -1) || body != "1")
            out << prefix << body;
          else
            out << prefix.substr(0, prefix.size() - 1);
          leading = false;
        }
      }
      out << "\n";
    }
    return out.str();
  }
  if (format != EmitFormat::json) fail(Errc::unsupported_format, "unknown emission format");

  std::ostringstream out;
  out << "{\n";
  out << "  \"dim\": " << system.dim << ",\n";
  out << "  \"variables\": [\"s\"";
  for (int i = 1; i <= system.dim; ++i) out << ", \"t" << i << "\"";
  out << "],\n";
  out << "  \"kushnirenko\": \"" << system.kushnirenko.str() << "\",\n";
  out << "  \"polynomials\": [\n";
  for (std::size_t i = 0; i < system.polys.size(); ++i) {
    out << "    {\"color\": " << i << ", \"terms\": [";
    bool first = true;
    for (const auto& [mono, coeff] : system.polys[i].terms()) {
      if (!first) out << ", ";
      first = false;
      out << "{\"coeff\": \"" << rat_to_string(coeff) << "\", \"s\": \""
          << rat_to_string(mono.s.base) << "\"";
      if (mono.s.eps != 0) out << ", \"s_eps\": \"" << rat_to_string(mono.s.eps) << "\"";
      out << ", \"t\": [";
      for (std::size_t v = 0; v < mono.t.size(); ++v) {
        if (v) out << ", ";
        out << mono.t[v];
      }
      out << "]}";
    }
    out << "]}" << (i + 1 < system.polys.size() ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

}  // namespace foldtri
