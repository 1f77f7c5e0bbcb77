#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sta/bridge.hpp"
#include "sta/even.hpp"
#include "sta/frames.hpp"
#include "sta/rng.hpp"

using namespace sta;

namespace {
const Signature kST = spacetime();

Multivector random_pauli_spinor(SplitMix64& rng) { return random_even(rng, cl3()); }
Multivector random_dirac_spinor(SplitMix64& rng) { return random_even(rng, kST); }
}  // namespace

TEST_CASE("pauli bridge point values") {
  CVec2 z = pauli_to_complex(Multivector::scalar(cl3(), 1.0));
  CHECK(z(0) == Complex(1, 0));
  CHECK(z(1) == Complex(0, 0));

  // bridge of B3 agrees with |1 B3> = i |1> = (i, 0)
  CVec2 zb3 = pauli_to_complex(sp3::B(3));
  CHECK(std::abs(zb3(0) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(zb3(1)) < 1e-15);

  CHECK(approx_equal(complex_to_pauli(CVec2(1, 0)),
                     Multivector::scalar(cl3(), 1.0), 1e-15));
  Multivector s01 = complex_to_pauli(CVec2(0, 1));
  CHECK((pauli_to_complex(s01) - CVec2(0, 1)).norm() < 1e-15);
}

TEST_CASE("pauli bridge is a bijection") {
  SplitMix64 rng(101);
  for (int i = 0; i < 100; ++i) {
    Multivector psi = random_pauli_spinor(rng);
    Multivector back = complex_to_pauli(pauli_to_complex(psi));
    CHECK((back - psi).norm() <= 1e-14 * (1 + psi.norm()));
  }
  for (int i = 0; i < 100; ++i) {
    CVec2 v(Complex(rng.normal(), rng.normal()), Complex(rng.normal(), rng.normal()));
    CHECK((pauli_to_complex(complex_to_pauli(v)) - v).norm() <= 1e-14 * (1 + v.norm()));
  }
}

TEST_CASE("pauli left and right multiplication relations") {
  SplitMix64 rng(102);
  CHECK(verify_pauli_right(3, Multivector(cl3())) == 0.0);
  for (int i = 0; i < 100; ++i) {
    Multivector psi = random_pauli_spinor(rng);
    for (int j = 1; j <= 3; ++j) {
      CHECK(verify_pauli_left(j, psi) < 1e-13 * (1 + psi.norm()));
      CHECK(verify_pauli_right(j, psi) < 1e-13 * (1 + psi.norm()));
    }
  }
}

TEST_CASE("recovered sigma matrices match the reference table") {
  auto sigmas = sigma_matrices();
  for (int j = 1; j <= 3; ++j)
    CHECK((sigmas[j - 1] - dirac_rep::sigma(j)).norm() == 0.0);
}

TEST_CASE("pauli inner product matches the C^2 dot product") {
  SplitMix64 rng(103);
  CHECK(pauli_inner(Multivector::scalar(cl3(), 1.0),
                    Multivector::scalar(cl3(), 1.0)) == Complex(1, 0));
  for (int i = 0; i < 100; ++i) {
    Multivector a = random_pauli_spinor(rng);
    Multivector b = random_pauli_spinor(rng);
    Complex lhs = pauli_inner(a, b);
    Complex rhs = pauli_to_complex(a).dot(pauli_to_complex(b));
    CHECK(std::abs(lhs - rhs) < 1e-13 * (1 + std::abs(rhs)));
    CHECK(std::abs(pauli_inner(a, a).imag()) < 1e-14 * (1 + a.norm() * a.norm()));
  }
}

TEST_CASE("dirac bridge point values") {
  CVec4 z = dirac_to_complex(st::one());
  CHECK((z - CVec4(1, 0, 0, 0)).norm() == 0.0);

  CVec4 z21 = dirac_to_complex(st::gamma(2) * st::gamma(1));
  CHECK((z21 - CVec4(Complex(0, 1), 0, 0, 0)).norm() < 1e-15);

  SplitMix64 rng(104);
  for (int i = 0; i < 100; ++i) {
    Multivector psi = random_dirac_spinor(rng);
    Multivector back = complex_to_dirac(dirac_to_complex(psi));
    CHECK((back - psi).norm() <= 1e-14 * (1 + psi.norm()));
  }
}

TEST_CASE("bridge linearity over the reals") {
  SplitMix64 rng(105);
  for (int i = 0; i < 50; ++i) {
    Multivector x = random_dirac_spinor(rng);
    Multivector y = random_dirac_spinor(rng);
    double a = rng.normal(), b = rng.normal();
    CVec4 lhs = dirac_to_complex(x * a + y * b);
    CVec4 rhs = a * dirac_to_complex(x) + b * dirac_to_complex(y);
    CHECK((lhs - rhs).norm() <= 1e-13 * (1 + rhs.norm()));
  }
}

TEST_CASE("computed gamma matrices reproduce the reference table exactly") {
  auto g = gamma_matrices();
  for (int mu = 0; mu < 4; ++mu) {
    CMat4 ref = dirac_rep::gamma_lower(mu);
    CHECK((g[mu] - ref).cwiseAbs().maxCoeff() <= 1e-15);
    // identical zero pattern
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        CHECK((g[mu](r, c) == Complex(0, 0)) == (ref(r, c) == Complex(0, 0)));
  }
  CHECK((gamma5_matrix() - dirac_rep::gamma5()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("computed map is complex linear for the right-gamma21 structure") {
  // images of basis spinors multiplied by gamma2 gamma1 must be i * images
  Multivector g21 = st::gamma(2) * st::gamma(1);
  for (int mu = 0; mu < 4; ++mu)
    for (int col = 0; col < 4; ++col) {
      CVec4 e = CVec4::Zero();
      e(col) = 1.0;
      Multivector s = complex_to_dirac(e);
      CVec4 a = dirac_to_complex(st::gamma(mu) * (s * g21) * st::gamma(0));
      CVec4 b = dirac_to_complex(st::gamma(mu) * s * st::gamma(0));
      CHECK((a - Complex(0, 1) * b).norm() <= 1e-15);
    }
}

TEST_CASE("gamma matrices anticommute to 2 eta") {
  auto g = gamma_matrices();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      CMat4 anti = g[mu] * g[nu] + g[nu] * g[mu];
      CMat4 expected = 2.0 * st::eta(mu, nu) * CMat4::Identity();
      CHECK((anti - expected).cwiseAbs().maxCoeff() <= 1e-14);
    }
  CMat4 g5 = gamma5_matrix();
  CHECK((g5 * g5 - CMat4::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("left bivector relations") {
  SplitMix64 rng(106);
  for (int i = 0; i < 100; ++i) {
    Multivector psi = random_dirac_spinor(rng);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        CHECK(verify_dirac_left(mu, nu, psi) < 1e-13 * (1 + psi.norm()));
  }
}

TEST_CASE("right bivector relations") {
  SplitMix64 rng(107);
  CHECK(verify_dirac_right(2, 1, Multivector(kST)) == 0.0);
  for (int i = 0; i < 100; ++i) {
    Multivector psi = random_dirac_spinor(rng);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (a == b) continue;
        CHECK(verify_dirac_right(a, b, psi) < 1e-13 * (1 + psi.norm()));
      }
  }
}

TEST_CASE("dirac inner product matches the matrix side") {
  SplitMix64 rng(108);
  CHECK(dirac_inner(st::one(), st::one()) == Complex(1, 0));
  CMat4 g0 = dirac_rep::gamma_lower(0);
  for (int i = 0; i < 100; ++i) {
    Multivector a = random_dirac_spinor(rng);
    Multivector b = random_dirac_spinor(rng);
    CVec4 u = dirac_to_complex(a), v = dirac_to_complex(b);
    Complex rhs = (u.adjoint() * g0 * v)(0);
    CHECK(std::abs(dirac_inner(a, b) - rhs) < 1e-13 * (1 + std::abs(rhs)));
    // swaps to the conjugate
    CHECK(std::abs(dirac_inner(b, a) - std::conj(dirac_inner(a, b))) <
          1e-13 * (1 + std::abs(rhs)));
  }
}

TEST_CASE("dirac current") {
  auto j0 = dirac_current(st::one());
  CHECK(j0[0] == doctest::Approx(1.0));
  CHECK(j0[1] == 0.0);
  CHECK(j0[2] == 0.0);
  CHECK(j0[3] == 0.0);

  // boost rotor: current is gamma0 boosted, read off by rotating gamma0
  double alpha = 0.7;
  Multivector boost = exp(st::gamma(1) * st::gamma(0) * (-0.5 * alpha));
  auto jb = dirac_current(boost);
  Rotor u = Rotor::from(boost);
  Multivector expected = lorentz_transform(st::gamma(0), u);
  for (int a = 0; a < 4; ++a)
    CHECK(jb[a] == doctest::Approx(expected.coeff(1u << a)).epsilon(1e-12));
  CHECK(jb[0] == doctest::Approx(std::cosh(alpha)));

  SplitMix64 rng(109);
  CMat4 g0 = dirac_rep::gamma_lower(0);
  for (int i = 0; i < 100; ++i) {
    Multivector psi = random_dirac_spinor(rng);
    auto j = dirac_current(psi);  // throws if any non-vector grade survives
    CVec4 z = dirac_to_complex(psi);
    double n2 = 1 + psi.norm() * psi.norm();
    for (int a = 0; a < 4; ++a) {
      CMat4 ga_up = a == 0 ? g0 : CMat4(-dirac_rep::gamma_lower(a));
      Complex bilinear = (z.adjoint() * g0 * ga_up * z)(0);
      CHECK(std::abs(bilinear.imag()) < 1e-12 * n2);
      CHECK(std::abs(bilinear.real() - j[a]) < 1e-12 * n2);
      // current components are Clifford scalars <gamma^a Psi gamma0 ~Psi>
      Multivector jm = psi * st::gamma(0) * reverse(psi);
      CHECK(std::abs(scalar_part(st::gamma_upper(a) * jm) - j[a]) < 1e-12 * n2);
    }
  }
}

TEST_CASE("bilinear report") {
  SplitMix64 rng(110);
  Multivector a = random_dirac_spinor(rng);
  Multivector b = random_dirac_spinor(rng);
  BilinearReport r = bilinears(a, b);
  CHECK(std::abs(r.inner - dirac_to_complex(a).dot(dirac_to_complex(b))) < 1e-13);
  CHECK(std::abs(r.dirac_inner - dirac_inner(a, b)) == 0.0);
  auto j = dirac_current(a);
  for (int k = 0; k < 4; ++k) CHECK(r.current[k] == j[k]);
}

TEST_CASE("induced product") {
  SplitMix64 rng(111);
  CVec4 unit(1, 0, 0, 0);
  for (int i = 0; i < 50; ++i) {
    CVec4 u, v, w;
    for (int k = 0; k < 4; ++k) {
      u(k) = Complex(rng.normal(), rng.normal());
      v(k) = Complex(rng.normal(), rng.normal());
      w(k) = Complex(rng.normal(), rng.normal());
    }
    CHECK((induced_product(unit, u) - u).norm() < 1e-14 * (1 + u.norm()));
    CHECK((induced_product(u, unit) - u).norm() < 1e-14 * (1 + u.norm()));
    CVec4 lhs = induced_product(induced_product(u, v), w);
    CVec4 rhs = induced_product(u, induced_product(v, w));
    CHECK((lhs - rhs).norm() <= 1e-12 * (1 + u.norm() * v.norm() * w.norm()));
    // right multiplication by gamma2 gamma1 is multiplication by i
    CVec4 img21 = dirac_to_complex(st::gamma(2) * st::gamma(1));
    CHECK((induced_product(u, img21) - Complex(0, 1) * u).norm() <
          1e-13 * (1 + u.norm()));
  }
}

TEST_CASE("bridge rejects wrong algebra or odd elements") {
  CHECK_THROWS_AS(pauli_to_complex(st::one()), AlgebraError);
  CHECK_THROWS_AS(dirac_to_complex(Multivector::scalar(cl3(), 1.0)), AlgebraError);
  CHECK_THROWS_AS(dirac_to_complex(st::gamma(0)), AlgebraError);
  CHECK_THROWS_AS(pauli_to_complex(sp3::e(1)), AlgebraError);
}
