#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sta/signature.hpp"

namespace sta {

class AlgebraError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the real Clifford algebra Cl(p,q): a sparse real linear
// combination of canonical basis blades, terms kept sorted by mask.
// Absent blade = coefficient 0. Arithmetic never drops terms; use prune()
// to discard small coefficients explicitly.
class Multivector {
 public:
  struct Term {
    std::uint32_t mask;
    double coeff;
  };

  Multivector() = default;  // zero element of the 1-dimensional Cl(1,0)
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, double value);
  static Multivector blade(Signature sig, std::uint32_t mask, double coeff = 1.0);
  static Multivector basis_vector(Signature sig, int i);  // e_i

  const Signature& signature() const { return sig_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const;

  double coeff(std::uint32_t mask) const;
  double scalar_part() const { return coeff(0); }

  // In-place accumulation of a single blade term (used by builders).
  void add_term(std::uint32_t mask, double coeff);

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  // Euclidean norm of the coefficient vector.
  double norm() const;

  // Drops terms with |coeff| <= eps; the only operation that discards terms.
  Multivector pruned(double eps) const;

  // Terms sorted by (grade, mask), e.g. "1 - 0.5*e1e2"; gamma labels in Cl(1,3).
  std::string to_string() const;

  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  void require_same_signature(const Multivector& other) const;

  Signature sig_{1, 0};
  std::vector<Term> terms_;  // sorted by mask, unique masks
};

Multivector geometric_product(const Multivector& a, const Multivector& b);

// Keeps only the grade-r blades.
Multivector grade_project(const Multivector& a, int r);
double scalar_part(const Multivector& a);
bool is_pure_grade(const Multivector& a, int r, double tol = 0.0);
bool is_even(const Multivector& a, double tol = 0.0);
int max_grade(const Multivector& a);

// Per-blade sign (-1)^(r(r-1)/2): reverses factor order in every blade.
Multivector reverse(const Multivector& a);

// Symmetrized product of two grade-1 elements; errors on non-vectors.
double inner(const Multivector& a, const Multivector& b);

// Grade-(r+s) part of the product, per pair of input grades.
Multivector outer(const Multivector& a, const Multivector& b);

// Hestenes inner product: grade-|r-s| part of the product per grade pair,
// scalar factors excluded. bivector . vector -> vector, etc.
Multivector contract(const Multivector& a, const Multivector& b);

// A B - B A (Lie bracket on bivectors).
Multivector commutator(const Multivector& a, const Multivector& b);

// Power series with scaling and squaring; series stops when the term norm
// falls below 1e-15 of the running sum. Throws AlgebraError on non-finite
// input or when the series fails to settle.
Multivector exp(const Multivector& a);

bool approx_equal(const Multivector& a, const Multivector& b, double tol);

}  // namespace sta
