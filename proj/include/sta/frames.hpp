#pragma once

#include <array>
#include <vector>

#include "sta/multivector.hpp"

namespace sta {

// All masks of Cl(p,q) in ascending order (the canonical blade enumeration).
std::vector<Blade> basis_blades(const Signature& sig);
std::vector<Blade> even_blades(const Signature& sig);

// Top-grade blade e_1...e_n (gamma0 gamma1 gamma2 gamma3 in spacetime).
Multivector pseudoscalar(Signature sig);

// Spacetime Cl(1,3) frame.
namespace st {

inline Multivector gamma(int mu) {
  return Multivector::basis_vector(spacetime(), mu);
}

// gamma^mu = eta^{mu nu} gamma_nu with eta = diag(1,-1,-1,-1).
inline Multivector gamma_upper(int mu) {
  return gamma(mu) * (mu == 0 ? 1.0 : -1.0);
}

inline double eta(int a, int b) {
  if (a != b) return 0.0;
  return a == 0 ? 1.0 : -1.0;
}

inline Multivector bivector(int a, int b) {  // gamma_a gamma_b, a != b
  return gamma(a) * gamma(b);
}

inline Multivector I() { return pseudoscalar(spacetime()); }

inline Multivector one() { return Multivector::scalar(spacetime(), 1.0); }

// Masks of the even basis {1, g0g1, g0g2, g0g3, g1g2, g1g3, g2g3, I} in
// canonical (grade, mask) order; the documented spinor component order.
inline constexpr std::array<std::uint32_t, 8> kEvenMasks = {
    0x0, 0x3, 0x5, 0x9, 0x6, 0xA, 0xC, 0xF};

}  // namespace st

// Euclidean 3-space Cl(3) frame.
namespace sp3 {

inline Multivector e(int i) {  // 1-based, e1..e3
  return Multivector::basis_vector(cl3(), i - 1);
}

// B1 = e2 e3, B2 = e3 e1, B3 = e1 e2; each squares to -1.
inline Multivector B(int j) {
  switch (j) {
    case 1: return e(2) * e(3);
    case 2: return e(3) * e(1);
    case 3: return e(1) * e(2);
    default: throw AlgebraError("bivector index must be 1..3");
  }
}

// Masks of the even basis {1, e1e2, e1e3, e2e3} in canonical order.
inline constexpr std::array<std::uint32_t, 4> kEvenMasks = {0x0, 0x3, 0x5, 0x6};

}  // namespace sp3

}  // namespace sta
