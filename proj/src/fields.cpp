#include "sta/fields.hpp"

#include <cmath>

#include "sta/frames.hpp"

namespace sta {

// ---- ScalarField -----------------------------------------------------------

ScalarField::ScalarField(Value v, Deriv d, Deriv2 d2)
    : value_(std::move(v)), d_(std::move(d)), d2_(std::move(d2)) {
  if (!value_ || !d_) throw FieldError("scalar field needs value and derivative");
}

double ScalarField::value(const Point4& x) const { return value_(x); }
double ScalarField::d(int mu, const Point4& x) const { return d_(mu, x); }

double ScalarField::d2(int mu, int nu, const Point4& x) const {
  if (!d2_) throw FieldError("scalar field has no second derivative evaluator");
  return d2_(mu, nu, x);
}

ScalarField ScalarField::constant(double c) {
  return ScalarField([c](const Point4&) { return c; },
                     [](int, const Point4&) { return 0.0; },
                     [](int, int, const Point4&) { return 0.0; });
}

namespace {

double eval_monomials(const std::vector<ScalarField::Monomial>& ms, const Point4& x) {
  double sum = 0.0;
  for (const auto& m : ms) {
    double term = m.coeff;
    for (int a = 0; a < 4; ++a)
      for (int e = 0; e < m.exps[a]; ++e) term *= x[a];
    sum += term;
  }
  return sum;
}

std::vector<ScalarField::Monomial> diff_monomials(
    const std::vector<ScalarField::Monomial>& ms, int mu) {
  std::vector<ScalarField::Monomial> out;
  for (const auto& m : ms) {
    if (m.exps[mu] == 0) continue;
    ScalarField::Monomial d = m;
    d.coeff *= m.exps[mu];
    d.exps[mu] -= 1;
    out.push_back(d);
  }
  return out;
}

}  // namespace

ScalarField ScalarField::polynomial(std::vector<Monomial> monomials) {
  auto value = [monomials](const Point4& x) { return eval_monomials(monomials, x); };
  auto d = [monomials](int mu, const Point4& x) {
    return eval_monomials(diff_monomials(monomials, mu), x);
  };
  auto d2 = [monomials](int mu, int nu, const Point4& x) {
    return eval_monomials(diff_monomials(diff_monomials(monomials, mu), nu), x);
  };
  return ScalarField(value, d, d2);
}

ScalarField ScalarField::cosine(double amp, Point4 c, double phase) {
  auto arg = [c, phase](const Point4& x) {
    return c[0] * x[0] + c[1] * x[1] + c[2] * x[2] + c[3] * x[3] + phase;
  };
  return ScalarField(
      [amp, arg](const Point4& x) { return amp * std::cos(arg(x)); },
      [amp, arg, c](int mu, const Point4& x) { return -amp * c[mu] * std::sin(arg(x)); },
      [amp, arg, c](int mu, int nu, const Point4& x) {
        return -amp * c[mu] * c[nu] * std::cos(arg(x));
      });
}

ScalarField ScalarField::sine(double amp, Point4 c, double phase) {
  auto arg = [c, phase](const Point4& x) {
    return c[0] * x[0] + c[1] * x[1] + c[2] * x[2] + c[3] * x[3] + phase;
  };
  return ScalarField(
      [amp, arg](const Point4& x) { return amp * std::sin(arg(x)); },
      [amp, arg, c](int mu, const Point4& x) { return amp * c[mu] * std::cos(arg(x)); },
      [amp, arg, c](int mu, int nu, const Point4& x) {
        return -amp * c[mu] * c[nu] * std::sin(arg(x));
      });
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  ScalarField::Deriv2 d2 = nullptr;
  if (a.has_second() && b.has_second())
    d2 = [a, b](int mu, int nu, const Point4& x) {
      return a.d2(mu, nu, x) + b.d2(mu, nu, x);
    };
  return ScalarField([a, b](const Point4& x) { return a.value(x) + b.value(x); },
                     [a, b](int mu, const Point4& x) { return a.d(mu, x) + b.d(mu, x); },
                     d2);
}

ScalarField operator*(const ScalarField& a, double s) {
  ScalarField::Deriv2 d2 = nullptr;
  if (a.has_second())
    d2 = [a, s](int mu, int nu, const Point4& x) { return s * a.d2(mu, nu, x); };
  return ScalarField([a, s](const Point4& x) { return s * a.value(x); },
                     [a, s](int mu, const Point4& x) { return s * a.d(mu, x); }, d2);
}

// ---- MvField ---------------------------------------------------------------

MvField::MvField(Signature sig, Value v, Deriv d, Deriv2 d2)
    : sig_(sig), value_(std::move(v)), d_(std::move(d)), d2_(std::move(d2)) {
  if (!value_ || !d_) throw FieldError("field needs value and derivative evaluators");
}

Multivector MvField::value(const Point4& x) const { return value_(x); }
Multivector MvField::d(int mu, const Point4& x) const { return d_(mu, x); }

Multivector MvField::d2(int mu, int nu, const Point4& x) const {
  if (!d2_) throw FieldError("field has no second derivative evaluator");
  return d2_(mu, nu, x);
}

MvField MvField::constant(const Multivector& m) {
  Multivector zero(m.signature());
  return MvField(
      m.signature(), [m](const Point4&) { return m; },
      [zero](int, const Point4&) { return zero; },
      [zero](int, int, const Point4&) { return zero; });
}

MvField MvField::scaled(const ScalarField& f, const Multivector& m) {
  Deriv2 d2 = nullptr;
  if (f.has_second())
    d2 = [f, m](int mu, int nu, const Point4& x) { return m * f.d2(mu, nu, x); };
  return MvField(
      m.signature(), [f, m](const Point4& x) { return m * f.value(x); },
      [f, m](int mu, const Point4& x) { return m * f.d(mu, x); }, d2);
}

MvField MvField::exp_profile(const ScalarField& phi, const Multivector& bivector) {
  if (!is_pure_grade(bivector, 2))
    throw FieldError("exp_profile needs a constant bivector generator");
  Multivector b = bivector;
  Multivector b2 = b * b;
  auto val = [phi, b](const Point4& x) { return exp(b * phi.value(x)); };
  MvField::Deriv2 d2 = nullptr;
  if (phi.has_second())
    d2 = [phi, b, b2, val](int mu, int nu, const Point4& x) {
      return (b * phi.d2(mu, nu, x) + b2 * (phi.d(mu, x) * phi.d(nu, x))) * val(x);
    };
  return MvField(
      b.signature(), val,
      [phi, b, val](int mu, const Point4& x) { return b * phi.d(mu, x) * val(x); },
      d2);
}

MvField MvField::derivative_field(const MvField& a, int mu) {
  if (!a.has_second())
    throw FieldError("derivative_field needs second derivatives of the parent");
  return MvField(
      a.signature(), [a, mu](const Point4& x) { return a.d(mu, x); },
      [a, mu](int nu, const Point4& x) { return a.d2(nu, mu, x); }, nullptr);
}

MvField operator+(const MvField& a, const MvField& b) {
  if (a.signature() != b.signature()) throw FieldError("field signature mismatch");
  MvField::Deriv2 d2 = nullptr;
  if (a.has_second() && b.has_second())
    d2 = [a, b](int mu, int nu, const Point4& x) {
      return a.d2(mu, nu, x) + b.d2(mu, nu, x);
    };
  return MvField(
      a.signature(), [a, b](const Point4& x) { return a.value(x) + b.value(x); },
      [a, b](int mu, const Point4& x) { return a.d(mu, x) + b.d(mu, x); }, d2);
}

MvField operator-(const MvField& a, const MvField& b) { return a + b * -1.0; }

MvField operator*(const MvField& a, const MvField& b) {
  if (a.signature() != b.signature()) throw FieldError("field signature mismatch");
  MvField::Deriv2 d2 = nullptr;
  if (a.has_second() && b.has_second())
    d2 = [a, b](int mu, int nu, const Point4& x) {
      return a.d2(mu, nu, x) * b.value(x) + a.d(mu, x) * b.d(nu, x) +
             a.d(nu, x) * b.d(mu, x) + a.value(x) * b.d2(mu, nu, x);
    };
  return MvField(
      a.signature(), [a, b](const Point4& x) { return a.value(x) * b.value(x); },
      [a, b](int mu, const Point4& x) {
        return a.d(mu, x) * b.value(x) + a.value(x) * b.d(mu, x);
      },
      d2);
}

MvField operator*(const MvField& a, double s) {
  MvField::Deriv2 d2 = nullptr;
  if (a.has_second())
    d2 = [a, s](int mu, int nu, const Point4& x) { return a.d2(mu, nu, x) * s; };
  return MvField(a.signature(), [a, s](const Point4& x) { return a.value(x) * s; },
                 [a, s](int mu, const Point4& x) { return a.d(mu, x) * s; }, d2);
}

MvField MvField::reversed() const {
  MvField a = *this;
  Deriv2 d2 = nullptr;
  if (a.has_second())
    d2 = [a](int mu, int nu, const Point4& x) { return reverse(a.d2(mu, nu, x)); };
  return MvField(a.signature(), [a](const Point4& x) { return reverse(a.value(x)); },
                 [a](int mu, const Point4& x) { return reverse(a.d(mu, x)); }, d2);
}

double closed_form_consistency(const MvField& f, const std::vector<Point4>& pts,
                               double step) {
  double worst = 0.0;
  for (const Point4& x : pts) {
    for (int mu = 0; mu < 4; ++mu) {
      Point4 xp = x, xm = x;
      xp[mu] += step;
      xm[mu] -= step;
      Multivector fd = (f.value(xp) - f.value(xm)) * (1.0 / (2.0 * step));
      double scale = 1.0 + f.d(mu, x).norm();
      worst = std::max(worst, (fd - f.d(mu, x)).norm() / scale);
    }
  }
  return worst;
}

// ---- RotorField ------------------------------------------------------------

RotorField RotorField::from_factors(std::vector<Factor> factors, Signature sig) {
  MvField u = MvField::constant(Multivector::scalar(sig, 1.0));
  MvField urev = u;
  for (const Factor& f : factors) {
    if (f.generator.signature() != sig)
      throw FieldError("rotor factor signature mismatch");
    u = u * MvField::exp_profile(f.profile, f.generator);
    urev = MvField::exp_profile(f.profile * -1.0, f.generator) * urev;
  }
  return RotorField(std::move(u), std::move(urev));
}

RotorField RotorField::identity(Signature sig) {
  MvField u = MvField::constant(Multivector::scalar(sig, 1.0));
  return RotorField(u, u);
}

// ---- lattice ---------------------------------------------------------------

Lattice4<Multivector> sample_to_lattice(const MvField& f, const LatticeShape& shape) {
  Lattice4<Multivector> lat(shape, Multivector(f.signature()));
  std::array<int, 4> i{};
  for (i[0] = 0; i[0] < shape.n[0]; ++i[0])
    for (i[1] = 0; i[1] < shape.n[1]; ++i[1])
      for (i[2] = 0; i[2] < shape.n[2]; ++i[2])
        for (i[3] = 0; i[3] < shape.n[3]; ++i[3]) lat.at(i) = f.value(lat.point(i));
  return lat;
}

// ---- gauge field -----------------------------------------------------------

GaugeField GaugeField::zero(Signature sig) {
  GaugeField g;
  for (int mu = 0; mu < 4; ++mu) g.comp[mu] = MvField::constant(Multivector(sig));
  return g;
}

GaugeField GaugeField::em(const std::array<ScalarField, 4>& potential, double charge) {
  Multivector g21 = st::gamma(2) * st::gamma(1);
  GaugeField g;
  for (int mu = 0; mu < 4; ++mu)
    g.comp[mu] = MvField::scaled(potential[mu] * charge, g21);
  return g;
}

GaugeField GaugeField::constant(const std::array<Multivector, 4>& values) {
  GaugeField g;
  for (int mu = 0; mu < 4; ++mu) {
    if (!is_pure_grade(values[mu], 2))
      throw FieldError("gauge field components must be bivectors");
    g.comp[mu] = MvField::constant(values[mu]);
  }
  return g;
}

double bivector_component(const Multivector& b, int a, int bb) {
  Multivector wedge_ab = outer(st::gamma_upper(a), st::gamma_upper(bb));
  return scalar_part(b * wedge_ab);
}

Multivector bivector_from_components(const double comps[4][4]) {
  Multivector out(spacetime());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (comps[a][b] == 0.0) continue;
      out += st::gamma(b) * st::gamma(a) * (0.5 * comps[a][b]);
    }
  return out;
}

std::array<double, 4> em_extract(const GaugeField& g, double charge, const Point4& x) {
  if (charge == 0.0) throw FieldError("em_extract needs a non-zero charge");
  std::array<double, 4> a;
  for (int mu = 0; mu < 4; ++mu)
    a[mu] = bivector_component(g[mu].value(x), 1, 2) / charge;
  return a;
}

// ---- tetrad ----------------------------------------------------------------

Tetrad Tetrad::flat() { return constant(Eigen::Matrix4d::Identity()); }

Tetrad Tetrad::constant(const Eigen::Matrix4d& e) {
  return Tetrad([e](const Point4&) { return e; });
}

namespace {
Eigen::Matrix4d eta_matrix() {
  Eigen::Matrix4d eta = Eigen::Matrix4d::Zero();
  eta.diagonal() << 1, -1, -1, -1;
  return eta;
}
}  // namespace

Eigen::Matrix4d Tetrad::metric_lower(const Point4& x) const {
  Eigen::Matrix4d e = components(x);
  Eigen::Matrix4d g_upper = e.transpose() * eta_matrix() * e;
  if (std::abs(g_upper.determinant()) < 1e-12)
    throw FieldError("tetrad is singular, no metric reconstruction");
  return g_upper.inverse();
}

double Tetrad::orthonormality_residual(const Point4& x) const {
  Eigen::Matrix4d e = components(x);
  Eigen::Matrix4d g = metric_lower(x);
  Eigen::Matrix4d probe = e * g * e.transpose();
  return (probe - eta_matrix()).cwiseAbs().maxCoeff();
}

}  // namespace sta

