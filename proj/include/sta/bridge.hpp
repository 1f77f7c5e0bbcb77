#pragma once

#include <array>

#include "sta/matrices.hpp"
#include "sta/multivector.hpp"

namespace sta {

// Real-linear bijections between even multivectors and complex column
// spinors: Cl(3)_even <-> C^2 and Cl(1,3)_even <-> C^4. The complex unit
// corresponds to RIGHT multiplication by B3 (space) / gamma2 gamma1
// (spacetime), which is the only complex structure used anywhere here.

CVec2 pauli_to_complex(const Multivector& psi);
Multivector complex_to_pauli(const CVec2& v);

CVec4 dirac_to_complex(const Multivector& psi);
Multivector complex_to_dirac(const CVec4& v);

// Matrices of the maps psi -> gamma_mu psi gamma_0 (index down), computed by
// pushing basis spinors through the bridge. Equal to dirac_rep::gamma_lower.
std::array<CMat4, 4> gamma_matrices();
CMat4 gamma5_matrix();

// Matrices of psi -> B_j psi divided by i; equal to dirac_rep::sigma.
std::array<CMat2, 3> sigma_matrices();

// ||bridge(B_j psi) - i sigma_j bridge(psi)|| and the right-multiplication
// analogues; the sigma side uses the hard-coded reference matrices.
double verify_pauli_left(int j, const Multivector& psi);
double verify_pauli_right(int j, const Multivector& psi);

// ||bridge(gamma_mu gamma_nu psi) - gahat_mu gahat_nu bridge(psi)||.
double verify_dirac_left(int mu, int nu, const Multivector& psi);
// ||bridge(psi gamma_a gamma_b) - matrix-side image||, (a,b) any ordered pair.
double verify_dirac_right(int a, int b, const Multivector& psi);

// Matrix-side image of psi gamma_a gamma_b without touching the real algebra.
CVec4 right_bivector_image(int a, int b, const CVec4& v);
// Matrix-side image of psi E for an even E of grade <= 2 (scalar + bivector).
CVec4 right_even_image(const Multivector& even_value, const CVec4& v);

// <psi|psi'> on Cl(3) spinors: <~psi psi' (1 - i B3)>.
Complex pauli_inner(const Multivector& psi, const Multivector& psi2);

// <bar Psi|Psi'> on Cl(1,3) spinors: <~Psi Psi' (1 - i gamma2 gamma1)>.
Complex dirac_inner(const Multivector& psi, const Multivector& psi2);

// Psi gamma0 ~Psi = J^a gamma_a; asserts grade-1 purity and returns J^a.
std::array<double, 4> dirac_current(const Multivector& psi);

struct BilinearReport {
  Complex inner;        // plain Hermitian product of the C^4 images
  Complex dirac_inner;  // <bar Psi|Psi'>
  std::array<double, 4> current;  // J^a of the first argument
};

BilinearReport bilinears(const Multivector& psi, const Multivector& psi2);

// |Psi> o |Psi'> = |Psi Psi'>: the Clifford product pulled onto C^4.
CVec4 induced_product(const CVec4& u, const CVec4& v);

}  // namespace sta
