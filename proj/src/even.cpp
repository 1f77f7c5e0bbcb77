#include "sta/even.hpp"

#include <cmath>

namespace sta {

Rotor Rotor::from(Multivector value, double tol) {
  if (!is_even(value))
    throw AlgebraError("rotor must be an even multivector");
  Multivector uu = value * reverse(value);
  Multivector unit = Multivector::scalar(value.signature(), 1.0);
  if (!approx_equal(uu, unit, tol))
    throw AlgebraError("not a rotor: U ~U != 1, |U ~U - 1| = " +
                       std::to_string((uu - unit).norm()));
  return Rotor(std::move(value));
}

Rotor Rotor::from_generator(const Multivector& bivector_half) {
  if (!is_pure_grade(bivector_half, 2))
    throw AlgebraError("rotor generator must be a bivector");
  return Rotor(exp(bivector_half));
}

Rotor Rotor::identity(Signature sig) {
  return Rotor(Multivector::scalar(sig, 1.0));
}

Rotor Rotor::reversed() const { return Rotor(reverse(value_)); }

Multivector Rotor::apply(const Multivector& x) const {
  return value_ * x * reverse(value_);
}

Multivector rotate_vector(const Multivector& v, const Multivector& bivector) {
  if (!is_pure_grade(v, 1)) throw AlgebraError("rotate_vector expects a vector");
  Rotor u = Rotor::from_generator(bivector * -0.5);
  Multivector out = u.apply(v);
  Multivector vec = grade_project(out, 1);
  if ((out - vec).norm() > 1e-10 * (1.0 + out.norm()))
    throw AlgebraError("rotor sandwich failed to preserve grade");
  return vec;
}

Multivector rotate_in_plane(const Multivector& v, const Multivector& bivector) {
  if (!is_pure_grade(v, 1)) throw AlgebraError("rotate_in_plane expects a vector");
  return v * exp(bivector);
}

Multivector lorentz_transform(const Multivector& x, const Rotor& u) {
  return u.apply(x);
}

namespace {

// Psi ~Psi of an even element in Cl(1,3) is scalar + pseudoscalar; read it as
// the complex number s + p i (I^2 = -1, I central in the even subalgebra).
struct EvenNormParts {
  double s;
  double p;
};

EvenNormParts even_norm_parts(const Multivector& psi) {
  if (psi.signature() != spacetime())
    throw AlgebraError("operation defined in Cl(1,3) only");
  if (!is_even(psi)) throw AlgebraError("expected an even multivector");
  Multivector uu = psi * reverse(psi);
  return {uu.coeff(0x0), uu.coeff(0xF)};
}

}  // namespace

Multivector even_inverse(const Multivector& psi, double eps) {
  auto [s, p] = even_norm_parts(psi);
  double rho2 = s * s + p * p;
  if (rho2 < eps * eps)
    throw NonInvertibleError("even element has |Psi ~Psi| below threshold");
  // (s + p I)^{-1} = (s - p I) / (s^2 + p^2)
  Multivector inv_norm =
      (Multivector::scalar(spacetime(), s) + Multivector::blade(spacetime(), 0xF, -p)) *
      (1.0 / rho2);
  return reverse(psi) * inv_norm;
}

Multivector PolarForm::reconstruct() const {
  Multivector phase = exp(Multivector::blade(spacetime(), 0xF, 0.5 * beta));
  return std::sqrt(rho) * phase * rotor.value();
}

PolarForm polar_decompose(const Multivector& psi, double eps) {
  auto [s, p] = even_norm_parts(psi);
  double rho = std::hypot(s, p);
  if (rho < eps)
    throw NonInvertibleError("polar decomposition needs |Psi ~Psi| > 0");
  PolarForm out;
  out.rho = rho;
  out.beta = std::atan2(p, s);
  Multivector unphase = exp(Multivector::blade(spacetime(), 0xF, -0.5 * out.beta));
  out.rotor = Rotor::from(unphase * psi * (1.0 / std::sqrt(rho)));
  return out;
}

std::pair<Multivector, Multivector> idempotent_split(const Multivector& psi,
                                                     const Multivector& f,
                                                     double tol) {
  if (!is_even(f)) throw AlgebraError("projector must be even");
  if (!approx_equal(f * f, f, tol))
    throw AlgebraError("projector is not idempotent: |f^2 - f| = " +
                       std::to_string((f * f - f).norm()));
  Multivector complement = Multivector::scalar(f.signature(), 1.0) - f;
  return {psi * f, psi * complement};
}

}  // namespace sta
