#include "sta/gauge.hpp"

#include <cmath>

#include "sta/even.hpp"

namespace sta {

namespace {

const Multivector& g21() {
  static const Multivector m = st::gamma(2) * st::gamma(1);
  return m;
}

const Multivector& g021() {
  static const Multivector m = st::gamma(0) * st::gamma(2) * st::gamma(1);
  return m;
}

}  // namespace

FrameField FrameField::standard() {
  FrameField f;
  for (int a = 0; a < 4; ++a) f.comp[a] = MvField::constant(st::gamma(a));
  return f;
}

Multivector covariant_derivative(const MvField& psi, const GaugeField& omega,
                                 const GaugeField& a, int mu, const Point4& x) {
  return psi.d(mu, x) - omega[mu].value(x) * psi.value(x) +
         psi.value(x) * a[mu].value(x);
}

Multivector covariant_derivative(const Lattice4<Multivector>& psi,
                                 const LatticeGaugeField& omega,
                                 const LatticeGaugeField& a, int mu,
                                 const std::array<int, 4>& site) {
  return psi.deriv(mu, site) - omega.comp[mu].at(site) * psi.at(site) +
         psi.at(site) * a.comp[mu].at(site);
}

CVec4 covariant_derivative_matrix_side(const MvField& psi, const GaugeField& omega,
                                       const GaugeField& a, int mu, const Point4& x) {
  CVec4 z = dirac_to_complex(psi.value(x));
  CVec4 out = dirac_to_complex(psi.d(mu, x));
  Multivector om = omega[mu].value(x);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      if (p == q) continue;
      double c = bivector_component(om, p, q);
      if (c != 0.0)
        out += 0.5 * c *
               (dirac_rep::gamma_lower(p) * dirac_rep::gamma_lower(q) * z);
    }
  out -= right_even_image(a[mu].value(x), z);
  return out;
}

Multivector hestenes_residual(const MvField& psi, const GaugeField& omega,
                              const GaugeField& a, const Tetrad& tetrad, double mass,
                              const Point4& x, const FrameField& frame) {
  Eigen::Matrix4d e = tetrad.components(x);
  Multivector phase = frame[0].value(x) * frame[2].value(x) * frame[1].value(x);
  Multivector acc(psi.signature());
  for (int idx = 0; idx < 4; ++idx) {
    Multivector frame_upper = frame[idx].value(x) * st::eta(idx, idx);
    for (int mu = 0; mu < 4; ++mu) {
      double coeff = e(idx, mu);
      if (coeff == 0.0) continue;
      acc += frame_upper * covariant_derivative(psi, omega, a, mu, x) * coeff;
    }
  }
  return acc * phase - psi.value(x) * mass;
}

CVec4 dirac_residual_matrix_side(const MvField& psi, const GaugeField& omega,
                                 const GaugeField& a, const Tetrad& tetrad,
                                 double mass, const Point4& x) {
  Eigen::Matrix4d e = tetrad.components(x);
  const Complex i{0.0, 1.0};
  CVec4 acc = CVec4::Zero();
  for (int idx = 0; idx < 4; ++idx) {
    CMat4 ga_up = idx == 0 ? dirac_rep::gamma_lower(0)
                           : CMat4(-dirac_rep::gamma_lower(idx));
    for (int mu = 0; mu < 4; ++mu) {
      double coeff = e(idx, mu);
      if (coeff == 0.0) continue;
      acc += coeff * (ga_up * covariant_derivative_matrix_side(psi, omega, a, mu, x));
    }
  }
  return i * acc - mass * dirac_to_complex(psi.value(x));
}

GaugeTransformed gauge_transform(const RotorField& u, const MvField& psi,
                                 const GaugeField& omega, const GaugeField& a,
                                 const FrameField& frame) {
  GaugeTransformed out;
  const MvField& U = u.U();
  const MvField& Ur = u.Urev();
  for (int idx = 0; idx < 4; ++idx) out.frame.comp[idx] = U * frame[idx] * Ur;
  out.psi = U * psi * Ur;
  for (int mu = 0; mu < 4; ++mu) {
    MvField inhomogeneous = MvField::derivative_field(U, mu) * Ur;
    out.omega.comp[mu] = U * omega[mu] * Ur + inhomogeneous;
    out.a.comp[mu] = U * a[mu] * Ur + inhomogeneous;
  }
  return out;
}

namespace {

Multivector strength_value(const GaugeField& g, int mu, int nu, const Point4& x) {
  return g[mu].d(nu, x) * -1.0 + g[nu].d(mu, x) -
         commutator(g[mu].value(x), g[nu].value(x));
}

// d_sigma F_{mu nu}; needs second derivatives of the connection.
Multivector strength_deriv(const GaugeField& g, int sigma, int mu, int nu,
                           const Point4& x) {
  return g[nu].d2(sigma, mu, x) - g[mu].d2(sigma, nu, x) -
         commutator(g[mu].d(sigma, x), g[nu].value(x)) -
         commutator(g[mu].value(x), g[nu].d(sigma, x));
}

}  // namespace

StrengthField field_strength(const GaugeField& g) {
  Signature sig = g[0].signature();
  return StrengthField(sig, [g](int mu, int nu, const Point4& x) {
    return strength_value(g, mu, nu, x);
  });
}

Multivector LatticeStrengthField::at(int mu, int nu,
                                     const std::array<int, 4>& site) const {
  static constexpr int kPairIndex[4][4] = {{-1, 0, 1, 2},
                                           {0, -1, 3, 4},
                                           {1, 3, -1, 5},
                                           {2, 4, 5, -1}};
  if (mu == nu) return Multivector(upper[0].at(site).signature());
  int k = kPairIndex[mu][nu];
  return mu < nu ? upper[k].at(site) : -upper[k].at(site);
}

LatticeStrengthField field_strength(const LatticeGaugeField& g) {
  LatticeStrengthField out;
  const LatticeShape& shape = g.comp[0].at({0, 0, 0, 0}).signature() == spacetime()
                                  ? g.comp[0].shape()
                                  : g.comp[0].shape();
  int k = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu, ++k) {
      Lattice4<Multivector> f(shape, Multivector(spacetime()));
      std::array<int, 4> i{};
      for (i[0] = 0; i[0] < shape.n[0]; ++i[0])
        for (i[1] = 0; i[1] < shape.n[1]; ++i[1])
          for (i[2] = 0; i[2] < shape.n[2]; ++i[2])
            for (i[3] = 0; i[3] < shape.n[3]; ++i[3]) {
              f.at(i) = g.comp[mu].deriv(nu, i) * -1.0 + g.comp[nu].deriv(mu, i) -
                        commutator(g.comp[mu].at(i), g.comp[nu].at(i));
            }
      out.upper[k] = std::move(f);
    }
  return out;
}

double commutator_check(const MvField& psi, const GaugeField& omega,
                        const GaugeField& a, int mu, int nu, const Point4& x) {
  auto cov_of_cov = [&](int m, int n) {
    // D_m applied to the field D_n Psi
    Multivector dn = covariant_derivative(psi, omega, a, n, x);
    Multivector d_m_of_dn = psi.d2(m, n, x) - omega[n].d(m, x) * psi.value(x) -
                            omega[n].value(x) * psi.d(m, x) +
                            psi.d(m, x) * a[n].value(x) +
                            psi.value(x) * a[n].d(m, x);
    return d_m_of_dn - omega[m].value(x) * dn + dn * a[m].value(x);
  };
  Multivector lhs = cov_of_cov(mu, nu) - cov_of_cov(nu, mu);
  Multivector rhs = -strength_value(omega, mu, nu, x) * psi.value(x) +
                    psi.value(x) * strength_value(a, mu, nu, x);
  return (lhs - rhs).norm();
}

Multivector ym_residual(const GaugeField& a, int nu, const Point4& x) {
  Multivector acc(a[0].signature());
  for (int mu = 0; mu < 4; ++mu) {
    double raise = st::eta(mu, mu) * st::eta(nu, nu);
    Multivector f_up = strength_value(a, mu, nu, x) * raise;
    Multivector df_up = strength_deriv(a, mu, mu, nu, x) * raise;
    acc += df_up - commutator(a[mu].value(x), f_up);
  }
  return acc;
}

std::pair<double, double> current_divergence(const MvField& psi, const GaugeField& a,
                                             const Point4& x) {
  Multivector g0 = st::gamma(0);
  double lhs = 0.0, rhs = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    Multivector dj = psi.d(mu, x) * g0 * reverse(psi.value(x)) +
                     psi.value(x) * g0 * reverse(psi.d(mu, x));
    lhs += scalar_part(st::gamma_upper(mu) * dj);
    Multivector a_dot_g0 = contract(a[mu].value(x), g0);
    rhs += scalar_part(st::gamma_upper(mu) *
                       (psi.value(x) * a_dot_g0 * reverse(psi.value(x))));
  }
  return {lhs, rhs};
}

std::array<double, 4> extract_potential(const MvField& psi, double mass,
                                        double charge, const Point4& x,
                                        double grade_tol) {
  if (charge == 0.0) throw AlgebraError("extract_potential needs non-zero charge");
  Multivector value = psi.value(x);
  Multivector inv = even_inverse(value);
  Multivector m(spacetime());
  for (int mu = 0; mu < 4; ++mu)
    m -= st::gamma_upper(mu) * psi.d(mu, x) * g21() * inv;
  m += value * st::gamma(0) * inv * mass;
  Multivector vec = grade_project(m, 1);
  if ((m - vec).norm() > grade_tol * (1.0 + m.norm()))
    throw InconsistentFieldError(
        "field does not solve the EM-coupled equation for any potential");
  std::array<double, 4> out;
  for (int nu = 0; nu < 4; ++nu)
    out[nu] = -scalar_part(vec * st::gamma(nu)) / charge;
  return out;
}

}  // namespace sta
