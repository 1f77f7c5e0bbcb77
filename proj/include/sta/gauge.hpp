#pragma once

#include <utility>

#include "sta/bridge.hpp"
#include "sta/fields.hpp"
#include "sta/frames.hpp"

namespace sta {

class InconsistentFieldError : public AlgebraError {
  using AlgebraError::AlgebraError;
};

// The gamma_a frame as position-dependent fields; constant by default, made
// non-trivial by gauge transformations.
struct FrameField {
  std::array<MvField, 4> comp;

  static FrameField standard();
  const MvField& operator[](int a) const { return comp[a]; }
};

// D_mu Psi = d_mu Psi - omega_mu Psi + Psi A_mu, closed-form backend.
Multivector covariant_derivative(const MvField& psi, const GaugeField& omega,
                                 const GaugeField& a, int mu, const Point4& x);

// Lattice backend: the partial derivative comes from the 5-point stencil.
Multivector covariant_derivative(const Lattice4<Multivector>& psi,
                                 const LatticeGaugeField& omega,
                                 const LatticeGaugeField& a, int mu,
                                 const std::array<int, 4>& site);

// Matrix-side translation of the covariant derivative (reference gamma
// matrices and the right-multiplication images; the real algebra only
// supplies bridged values of Psi and d_mu Psi).
CVec4 covariant_derivative_matrix_side(const MvField& psi, const GaugeField& omega,
                                       const GaugeField& a, int mu, const Point4& x);

// Pointwise residual of the real Dirac equation
//   gamma^a e_a^mu (D_mu Psi) gamma_0 gamma_2 gamma_1 - m Psi
// with an optional non-constant frame (gamma'_a after a gauge transformation).
Multivector hestenes_residual(const MvField& psi, const GaugeField& omega,
                              const GaugeField& a, const Tetrad& tetrad, double mass,
                              const Point4& x,
                              const FrameField& frame = FrameField::standard());

// i gahat^a e_a^mu |D_mu Psi> - m |Psi| in the constant frame.
CVec4 dirac_residual_matrix_side(const MvField& psi, const GaugeField& omega,
                                 const GaugeField& a, const Tetrad& tetrad,
                                 double mass, const Point4& x);

struct GaugeTransformed {
  FrameField frame;  // gamma'_a = U gamma_a ~U
  MvField psi;       // U Psi ~U
  GaugeField omega;  // U omega ~U + (dU) ~U
  GaugeField a;      // same rule
};

// Local Lorentz gauge transformation of all data by a rotor field.
GaugeTransformed gauge_transform(const RotorField& u, const MvField& psi,
                                 const GaugeField& omega, const GaugeField& a,
                                 const FrameField& frame = FrameField::standard());

// F_mu_nu = d_mu A_nu - d_nu A_mu - [A_mu, A_nu].
StrengthField field_strength(const GaugeField& g);

struct LatticeStrengthField {
  // components for mu < nu in the order (01,02,03,12,13,23); antisymmetric
  // access through at().
  std::array<Lattice4<Multivector>, 6> upper;

  Multivector at(int mu, int nu, const std::array<int, 4>& site) const;
};

LatticeStrengthField field_strength(const LatticeGaugeField& g);

// || [D_mu, D_nu] Psi - (-R_mu_nu Psi + Psi F_mu_nu) || at x; needs second
// derivatives on Psi and first derivatives on the connections.
double commutator_check(const MvField& psi, const GaugeField& omega,
                        const GaugeField& a, int mu, int nu, const Point4& x);

// d_mu F^{mu nu} - [A_mu, F^{mu nu}] at x (flat indices raised with eta).
Multivector ym_residual(const GaugeField& a, int nu, const Point4& x);

// Both sides of gamma^mu . d_mu(Psi gamma0 ~Psi) = gamma^mu . (Psi (A_mu . gamma0) ~Psi).
std::pair<double, double> current_divergence(const MvField& psi, const GaugeField& a,
                                             const Point4& x);

// Electromagnetic potential recovered from a solution Psi of the EM-coupled
// equation: builds M = -gamma^mu (d_mu Psi) gamma2 gamma1 Psi^{-1}
// + m Psi gamma0 Psi^{-1}, requires M to be grade 1 (else
// InconsistentFieldError), and reads off A_mu. Sign convention matches
// GaugeField::em, so the two are mutually inverse.
std::array<double, 4> extract_potential(const MvField& psi, double mass,
                                        double charge, const Point4& x,
                                        double grade_tol = 1e-8);

}  // namespace sta
