#include "sta/bridge.hpp"

#include <cmath>

#include "sta/frames.hpp"

namespace sta {

namespace {

using RVec8 = Eigen::Matrix<double, 8, 1>;
using RMat8 = Eigen::Matrix<double, 8, 8>;
using RVec4 = Eigen::Matrix<double, 4, 1>;
using RMat4 = Eigen::Matrix<double, 4, 4>;

const Complex kI{0.0, 1.0};

// ---- spacetime bridge -------------------------------------------------------

CVec4 dirac_components_direct(const Multivector& psi) {
  // z_k = <P_k Psi> - i <P_k Psi gamma2 gamma1>
  static const Multivector kPrefactor[4] = {
      st::one(), st::gamma(1) * st::gamma(3), st::gamma(3) * st::gamma(0),
      st::gamma(1) * st::gamma(0)};
  static const Multivector kG21 = st::gamma(2) * st::gamma(1);
  CVec4 z;
  for (int k = 0; k < 4; ++k) {
    Multivector p = kPrefactor[k] * psi;
    z(k) = Complex(scalar_part(p), -scalar_part(p * kG21));
  }
  return z;
}

RVec8 even_to_r8(const Multivector& psi) {
  if (psi.signature() != spacetime())
    throw AlgebraError("spacetime bridge expects a Cl(1,3) element");
  if (!is_even(psi)) throw AlgebraError("bridge expects an even multivector");
  RVec8 r;
  for (int i = 0; i < 8; ++i) r(i) = psi.coeff(st::kEvenMasks[i]);
  return r;
}

Multivector r8_to_even(const RVec8& r) {
  Multivector psi(spacetime());
  for (int i = 0; i < 8; ++i)
    if (r(i) != 0.0) psi.add_term(st::kEvenMasks[i], r(i));
  return psi;
}

struct DiracBridge {
  RMat8 fwd;  // (Re z0, Im z0, ..., Re z3, Im z3) = fwd * coefficients
  RMat8 inv;
};

const DiracBridge& dirac_bridge() {
  static const DiracBridge bridge = [] {
    DiracBridge b;
    for (int col = 0; col < 8; ++col) {
      Multivector blade = Multivector::blade(spacetime(), st::kEvenMasks[col]);
      CVec4 z = dirac_components_direct(blade);
      for (int k = 0; k < 4; ++k) {
        b.fwd(2 * k, col) = z(k).real();
        b.fwd(2 * k + 1, col) = z(k).imag();
      }
    }
    b.inv = b.fwd.inverse();
    return b;
  }();
  return bridge;
}

// ---- space bridge ------------------------------------------------------------

CVec2 pauli_components_direct(const Multivector& psi) {
  static const Multivector kB2 = sp3::B(2);
  static const Multivector kB3 = sp3::B(3);
  Multivector p0 = psi;
  Multivector p1 = kB2 * psi;
  return {Complex(scalar_part(p0), -scalar_part(p0 * kB3)),
          Complex(scalar_part(p1), -scalar_part(p1 * kB3))};
}

RVec4 even_to_r4(const Multivector& psi) {
  if (psi.signature() != cl3())
    throw AlgebraError("space bridge expects a Cl(3) element");
  if (!is_even(psi)) throw AlgebraError("bridge expects an even multivector");
  RVec4 r;
  for (int i = 0; i < 4; ++i) r(i) = psi.coeff(sp3::kEvenMasks[i]);
  return r;
}

Multivector r4_to_even(const RVec4& r) {
  Multivector psi(cl3());
  for (int i = 0; i < 4; ++i)
    if (r(i) != 0.0) psi.add_term(sp3::kEvenMasks[i], r(i));
  return psi;
}

struct PauliBridge {
  RMat4 fwd;
  RMat4 inv;
};

const PauliBridge& pauli_bridge() {
  static const PauliBridge bridge = [] {
    PauliBridge b;
    for (int col = 0; col < 4; ++col) {
      Multivector blade = Multivector::blade(cl3(), sp3::kEvenMasks[col]);
      CVec2 z = pauli_components_direct(blade);
      for (int k = 0; k < 2; ++k) {
        b.fwd(2 * k, col) = z(k).real();
        b.fwd(2 * k + 1, col) = z(k).imag();
      }
    }
    b.inv = b.fwd.inverse();
    return b;
  }();
  return bridge;
}

}  // namespace

CVec2 pauli_to_complex(const Multivector& psi) {
  RVec4 r = pauli_bridge().fwd * even_to_r4(psi);
  return {Complex(r(0), r(1)), Complex(r(2), r(3))};
}

Multivector complex_to_pauli(const CVec2& v) {
  RVec4 z;
  z << v(0).real(), v(0).imag(), v(1).real(), v(1).imag();
  return r4_to_even(pauli_bridge().inv * z);
}

CVec4 dirac_to_complex(const Multivector& psi) {
  RVec8 r = dirac_bridge().fwd * even_to_r8(psi);
  CVec4 z;
  for (int k = 0; k < 4; ++k) z(k) = Complex(r(2 * k), r(2 * k + 1));
  return z;
}

Multivector complex_to_dirac(const CVec4& v) {
  RVec8 z;
  for (int k = 0; k < 4; ++k) {
    z(2 * k) = v(k).real();
    z(2 * k + 1) = v(k).imag();
  }
  return r8_to_even(dirac_bridge().inv * z);
}

std::array<CMat4, 4> gamma_matrices() {
  std::array<CMat4, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int col = 0; col < 4; ++col) {
      CVec4 e = CVec4::Zero();
      e(col) = 1.0;
      Multivector s = complex_to_dirac(e);
      out[mu].col(col) = dirac_to_complex(st::gamma(mu) * s * st::gamma(0));
    }
  }
  return out;
}

CMat4 gamma5_matrix() {
  auto g = gamma_matrices();
  CMat4 up[4];
  for (int mu = 0; mu < 4; ++mu) up[mu] = mu == 0 ? g[mu] : CMat4(-g[mu]);
  return kI * up[0] * up[1] * up[2] * up[3];
}

std::array<CMat2, 3> sigma_matrices() {
  std::array<CMat2, 3> out;
  for (int j = 1; j <= 3; ++j) {
    for (int col = 0; col < 2; ++col) {
      CVec2 e = CVec2::Zero();
      e(col) = 1.0;
      Multivector s = complex_to_pauli(e);
      out[j - 1].col(col) = -kI * pauli_to_complex(sp3::B(j) * s);
    }
  }
  return out;
}

double verify_pauli_left(int j, const Multivector& psi) {
  CVec2 lhs = pauli_to_complex(sp3::B(j) * psi);
  CVec2 rhs = kI * dirac_rep::sigma(j) * pauli_to_complex(psi);
  return (lhs - rhs).norm();
}

double verify_pauli_right(int j, const Multivector& psi) {
  CVec2 lhs = pauli_to_complex(psi * sp3::B(j));
  CVec2 z = pauli_to_complex(psi);
  CVec2 rhs;
  switch (j) {
    case 1: rhs = dirac_rep::sigma(2) * z.conjugate(); break;
    case 2: rhs = kI * dirac_rep::sigma(2) * z.conjugate(); break;
    case 3: rhs = kI * z; break;
    default: throw std::invalid_argument("bivector index must be 1..3");
  }
  return (lhs - rhs).norm();
}

double verify_dirac_left(int mu, int nu, const Multivector& psi) {
  CVec4 lhs = dirac_to_complex(st::gamma(mu) * st::gamma(nu) * psi);
  CVec4 rhs = dirac_rep::gamma_lower(mu) * dirac_rep::gamma_lower(nu) *
              dirac_to_complex(psi);
  return (lhs - rhs).norm();
}

CVec4 right_bivector_image(int a, int b, const CVec4& v) {
  if (a == b || a < 0 || a > 3 || b < 0 || b > 3)
    throw std::invalid_argument("right_bivector_image needs distinct indices 0..3");
  if (a > b) return -right_bivector_image(b, a, v);
  const CMat4 g2 = dirac_rep::gamma_lower(2);
  const CMat4 g5 = dirac_rep::gamma5();
  // canonical pairs, from the right-multiplication table
  if (a == 0 && b == 1) return kI * g2 * v.conjugate();
  if (a == 0 && b == 2) return -g2 * v.conjugate();
  if (a == 0 && b == 3) return -g5 * v;
  if (a == 1 && b == 2) return -kI * v;
  if (a == 1 && b == 3) return -kI * g2 * g5 * v.conjugate();
  /* a == 2 && b == 3 */
  return g2 * g5 * v.conjugate();
}

CVec4 right_even_image(const Multivector& even_value, const CVec4& v) {
  if (even_value.signature() != spacetime())
    throw AlgebraError("right_even_image expects a Cl(1,3) element");
  CVec4 out = even_value.coeff(0) * v;
  static constexpr std::pair<std::uint32_t, std::pair<int, int>> kPairs[6] = {
      {0x3, {0, 1}}, {0x5, {0, 2}}, {0x9, {0, 3}},
      {0x6, {1, 2}}, {0xA, {1, 3}}, {0xC, {2, 3}}};
  double covered = even_value.coeff(0) * even_value.coeff(0);
  for (const auto& [mask, ab] : kPairs) {
    double c = even_value.coeff(mask);
    covered += c * c;
    if (c != 0.0) out += c * right_bivector_image(ab.first, ab.second, v);
  }
  double total = even_value.norm();
  if (std::sqrt(covered) < total * (1.0 - 1e-12) - 1e-15)
    throw AlgebraError("right_even_image supports grade <= 2 even values only");
  return out;
}

double verify_dirac_right(int a, int b, const Multivector& psi) {
  CVec4 lhs = dirac_to_complex(psi * st::gamma(a) * st::gamma(b));
  CVec4 rhs = right_bivector_image(a, b, dirac_to_complex(psi));
  return (lhs - rhs).norm();
}

Complex pauli_inner(const Multivector& psi, const Multivector& psi2) {
  static const Multivector kB3 = sp3::B(3);
  Multivector p = reverse(psi) * psi2;
  return {scalar_part(p), -scalar_part(p * kB3)};
}

Complex dirac_inner(const Multivector& psi, const Multivector& psi2) {
  static const Multivector kG21 = st::gamma(2) * st::gamma(1);
  Multivector p = reverse(psi) * psi2;
  return {scalar_part(p), -scalar_part(p * kG21)};
}

std::array<double, 4> dirac_current(const Multivector& psi) {
  Multivector j = psi * st::gamma(0) * reverse(psi);
  double scale = 1.0 + psi.norm() * psi.norm();
  if (!is_pure_grade(j, 1, 1e-13 * scale))
    throw AlgebraError("Psi gamma0 ~Psi is not a vector");
  std::array<double, 4> out;
  for (int a = 0; a < 4; ++a) out[a] = j.coeff(std::uint32_t{1} << a);
  return out;
}

BilinearReport bilinears(const Multivector& psi, const Multivector& psi2) {
  BilinearReport r;
  CVec4 u = dirac_to_complex(psi);
  CVec4 v = dirac_to_complex(psi2);
  r.inner = u.dot(v);
  r.dirac_inner = dirac_inner(psi, psi2);
  r.current = dirac_current(psi);
  return r;
}

CVec4 induced_product(const CVec4& u, const CVec4& v) {
  return dirac_to_complex(complex_to_dirac(u) * complex_to_dirac(v));
}

}  // namespace sta
