#pragma once

#include <map>
#include <string>
#include <vector>

#include "foldtri/complex.hpp"
#include "foldtri/product.hpp"

namespace foldtri {

// Exponent of s: base + eps * epsilon with epsilon a formal symbol. Plain
// polynomials have eps == 0.
struct SExponent {
  Rat base;
  Rat eps;
};

struct Monomial {
  SExponent s;
  std::vector<long long> t;  // integer exponents of t_1..t_m

  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const;
};

// Exact sparse polynomial in s and t_1..t_m with rational coefficients; zero
// coefficients are never stored.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial mono, const Rat& coeff);
  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial operator*(const SparsePolynomial& other) const;
  SparsePolynomial scaled(const Rat& factor) const;

  // Re-embeds into total_vars variables with the t block shifted by offset.
  SparsePolynomial embedded(int offset, int total_vars) const;

  bool operator==(const SparsePolynomial& other) const;

  // Substitutes concrete values for s and t (eps must be zero everywhere).
  Rat evaluate(const Rat& s, const std::vector<Rat>& t) const;

 private:
  int nvars_;
  std::map<Monomial, Rat> terms_;
};

struct WronskiSystem {
  int dim = 0;
  std::vector<SparsePolynomial> polys;  // one per color 0..dim
  Int kushnirenko;                      // expected generic complex-root count
};

// One coefficient polynomial per color class: F_i = sum over c(v) = i of
// s^{lambda(v)} t^v. Requires a coloring (labels are ranked into 0..m), a
// single-level lifting, and nonnegative coordinates. normalize divides each
// F_i by the smallest s power in its class.
WronskiSystem coefficient_polynomials(const Triangulation& k, bool normalize);

// sum a_i F_i; throws length_mismatch.
SparsePolynomial wronski_polynomial(const WronskiSystem& system, const std::vector<Rat>& a);

// Verifies, as an exact identity with the epsilon channel kept formal, that
// every coefficient polynomial of the color-mode product of k and l equals the
// convolution sum_{i+j=c} F_i^K F_j^L s^{eps(i,j)}. Both orderings must be
// color consecutive.
bool product_coefficient_identity_check(const Triangulation& k, const VertexOrdering& ok,
                                        const Triangulation& l, const VertexOrdering& ol);

struct CoxReport {
  bool point_lattice_odd_index = false;  // lattice of point differences has odd index in Z^m
  bool normal_lattice_odd_index = false; // A has a maximal minor of odd determinant
  bool odd_vector_in_span = false;       // some all-odd vector lies in the integer span of (A,b)

  bool oriented() const {
    return point_lattice_odd_index && normal_lattice_odd_index && odd_vector_in_span;
  }
};

// The three mod-2 orientation checks on the facet description; throws
// missing_facets when the configuration carries none.
CoxReport cox_oriented(const PointConfiguration& config);

enum class EmitFormat { text, json };

// Deterministic canonical emission; text is one "Fi = ..." line per color with
// terms sorted by exponent, json additionally records dimensions and the
// Kushnirenko count.
std::string emit_system(const WronskiSystem& system, EmitFormat format);

}  // namespace foldtri
