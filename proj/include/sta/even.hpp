#pragma once

#include <utility>

#include "sta/frames.hpp"
#include "sta/multivector.hpp"

namespace sta {

class NonInvertibleError : public AlgebraError {
  using AlgebraError::AlgebraError;
};

// Default threshold below which an even element counts as non-invertible.
inline constexpr double kInverseEps = 1e-10;

// Even multivector U with U reverse(U) = 1; implements rotations and Lorentz
// transformations by the two-sided action U x reverse(U).
class Rotor {
 public:
  // Validates U ~U = 1 to `tol`.
  static Rotor from(Multivector value, double tol = 1e-12);
  // exp(B) for a bivector generator (exp(-B/2) rotates by B).
  static Rotor from_generator(const Multivector& bivector_half);
  static Rotor identity(Signature sig);

  const Multivector& value() const { return value_; }
  Rotor reversed() const;

  Multivector apply(const Multivector& x) const;  // U x ~U

 private:
  explicit Rotor(Multivector v) : value_(std::move(v)) {}
  Multivector value_;
};

// e^{-B/2} v e^{B/2}: rotation (or boost) of a vector in the plane of B.
Multivector rotate_vector(const Multivector& v, const Multivector& bivector);

// One-sided planar form v e^{B}; equals rotate_vector(v, B) when v lies in
// the plane of B (and B commutes with the perpendicular part).
Multivector rotate_in_plane(const Multivector& v, const Multivector& bivector);

// U X ~U for any multivector; grade-preserving, multiplicative over products.
Multivector lorentz_transform(const Multivector& x, const Rotor& u);

// Inverse of an even element of Cl(1,3): Psi ~Psi lands in span{1, I} and is
// inverted as a complex number. Throws NonInvertibleError when
// |Psi ~Psi| < eps.
Multivector even_inverse(const Multivector& psi, double eps = kInverseEps);

// sqrt(rho) e^{I beta/2} R decomposition of an invertible even element of
// Cl(1,3); beta in (-pi, pi].
struct PolarForm {
  double rho = 0.0;
  double beta = 0.0;
  Rotor rotor = Rotor::identity(spacetime());

  Multivector reconstruct() const;
};

PolarForm polar_decompose(const Multivector& psi, double eps = kInverseEps);

// Splits Psi into (Psi f, Psi (1-f)) for an even idempotent f (f^2 = f).
std::pair<Multivector, Multivector> idempotent_split(const Multivector& psi,
                                                     const Multivector& f,
                                                     double tol = 1e-12);

}  // namespace sta
