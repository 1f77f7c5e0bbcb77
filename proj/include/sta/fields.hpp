#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sta/multivector.hpp"

namespace sta {

class FieldError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Point4 = std::array<double, 4>;  // coordinates (x^0 .. x^3)

// ---------------------------------------------------------------------------
// Closed-form backend: fields carry exact derivative evaluators so identity
// checks are free of discretization error.
// ---------------------------------------------------------------------------

class ScalarField {
 public:
  using Value = std::function<double(const Point4&)>;
  using Deriv = std::function<double(int, const Point4&)>;
  using Deriv2 = std::function<double(int, int, const Point4&)>;

  ScalarField() = default;
  ScalarField(Value v, Deriv d, Deriv2 d2 = nullptr);

  static ScalarField constant(double c);
  // coeff * x0^e0 x1^e1 x2^e2 x3^e3 summed over monomials
  struct Monomial {
    double coeff;
    std::array<int, 4> exps;
  };
  static ScalarField polynomial(std::vector<Monomial> monomials);
  // amp * cos(c_mu x^mu + phase) / sin(...)
  static ScalarField cosine(double amp, Point4 c, double phase = 0.0);
  static ScalarField sine(double amp, Point4 c, double phase = 0.0);

  double value(const Point4& x) const;
  double d(int mu, const Point4& x) const;
  double d2(int mu, int nu, const Point4& x) const;
  bool has_second() const { return bool(d2_); }

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, double s);

 private:
  Value value_;
  Deriv d_;
  Deriv2 d2_;
};

// Multivector-valued field with exact first (and optionally second)
// derivatives. Combinators propagate derivatives by linearity and the
// Leibniz rule, so transformed fields stay exact.
class MvField {
 public:
  using Value = std::function<Multivector(const Point4&)>;
  using Deriv = std::function<Multivector(int, const Point4&)>;
  using Deriv2 = std::function<Multivector(int, int, const Point4&)>;

  MvField() = default;
  MvField(Signature sig, Value v, Deriv d, Deriv2 d2 = nullptr);

  static MvField constant(const Multivector& m);
  static MvField scaled(const ScalarField& f, const Multivector& m);  // f(x) m
  // exp(phi(x) B) for a constant bivector B: derivative is exact since B
  // commutes with its own exponential.
  static MvField exp_profile(const ScalarField& phi, const Multivector& bivector);
  // field whose value is the mu-derivative of `a` (second derivatives of the
  // parent become first derivatives; no second derivatives available).
  static MvField derivative_field(const MvField& a, int mu);

  const Signature& signature() const { return sig_; }
  Multivector value(const Point4& x) const;
  Multivector d(int mu, const Point4& x) const;
  Multivector d2(int mu, int nu, const Point4& x) const;
  bool has_second() const { return bool(d2_); }

  friend MvField operator+(const MvField& a, const MvField& b);
  friend MvField operator-(const MvField& a, const MvField& b);
  friend MvField operator*(const MvField& a, const MvField& b);
  friend MvField operator*(const MvField& a, double s);
  MvField reversed() const;

 private:
  Signature sig_{1, 3};
  Value value_;
  Deriv d_;
  Deriv2 d2_;
};

// Spot check that a field's derivative evaluator is consistent with its
// values (central differences, relative tolerance ~1e-6).
double closed_form_consistency(const MvField& f, const std::vector<Point4>& pts,
                               double step = 1e-4);

// Rotor-valued field U(x) with U ~U = 1, built as a product of single-plane
// exponential factors so that all derivatives are exact.
class RotorField {
 public:
  struct Factor {
    ScalarField profile;
    Multivector generator;  // constant bivector
  };

  static RotorField from_factors(std::vector<Factor> factors, Signature sig);
  static RotorField identity(Signature sig);

  const MvField& U() const { return u_; }
  const MvField& Urev() const { return urev_; }

 private:
  RotorField(MvField u, MvField urev) : u_(std::move(u)), urev_(std::move(urev)) {}
  MvField u_;
  MvField urev_;
};

// ---------------------------------------------------------------------------
// Lattice backend: periodic 4D box, 4th-order central differences.
// ---------------------------------------------------------------------------

struct LatticeShape {
  std::array<int, 4> n;       // sites per axis (degenerate axes = 1)
  std::array<double, 4> length;  // periodic extents

  double step(int axis) const { return length[axis] / n[axis]; }
  std::size_t sites() const {
    return std::size_t(n[0]) * n[1] * n[2] * n[3];
  }
};

template <typename T>
class Lattice4 {
 public:
  Lattice4() = default;
  Lattice4(LatticeShape shape, T fill)
      : shape_(shape), data_(shape.sites(), std::move(fill)) {}

  const LatticeShape& shape() const { return shape_; }

  std::size_t index(std::array<int, 4> i) const {
    for (int a = 0; a < 4; ++a) {
      i[a] %= shape_.n[a];
      if (i[a] < 0) i[a] += shape_.n[a];
    }
    return ((std::size_t(i[0]) * shape_.n[1] + i[1]) * shape_.n[2] + i[2]) *
               shape_.n[3] +
           i[3];
  }

  T& at(std::array<int, 4> i) { return data_[index(i)]; }
  const T& at(std::array<int, 4> i) const { return data_[index(i)]; }

  Point4 point(const std::array<int, 4>& i) const {
    Point4 x;
    for (int a = 0; a < 4; ++a) x[a] = i[a] * shape_.step(a);
    return x;
  }

  // (-f[i+2] + 8 f[i+1] - 8 f[i-1] + f[i-2]) / (12 h) along `axis`.
  T deriv(int axis, std::array<int, 4> i) const {
    if (shape_.n[axis] < 5)
      throw FieldError("lattice axis too small for the 5-point stencil");
    auto shifted = [&](int offset) {
      std::array<int, 4> j = i;
      j[axis] += offset;
      return at(j);
    };
    T acc = shifted(2) * -1.0;
    acc += shifted(1) * 8.0;
    acc -= shifted(-1) * 8.0;
    acc += shifted(-2);
    return acc * (1.0 / (12.0 * shape_.step(axis)));
  }

 private:
  LatticeShape shape_{};
  std::vector<T> data_;
};

// Fills a lattice by sampling a closed-form field at the site coordinates.
Lattice4<Multivector> sample_to_lattice(const MvField& f, const LatticeShape& shape);

// ---------------------------------------------------------------------------
// Domain aggregates
// ---------------------------------------------------------------------------

// Bivector-valued connection, one component per spacetime index.
struct GaugeField {
  std::array<MvField, 4> comp;

  static GaugeField zero(Signature sig);
  // A_mu(x) charge gamma2 gamma1 (electromagnetic embedding).
  static GaugeField em(const std::array<ScalarField, 4>& potential, double charge);
  static GaugeField constant(const std::array<Multivector, 4>& values);

  const MvField& operator[](int mu) const { return comp[mu]; }
};

// eA_mu recovered from the gamma2 gamma1 component: inverse of GaugeField::em.
std::array<double, 4> em_extract(const GaugeField& g, double charge, const Point4& x);

// Component extraction a_mu^{ab} = a_mu . (gamma^a wedge gamma^b) and the
// reconstruction a_mu = 1/2 a_mu^{ab} gamma_b gamma_a.
double bivector_component(const Multivector& b, int a, int bb);
Multivector bivector_from_components(const double comps[4][4]);

struct LatticeGaugeField {
  std::array<Lattice4<Multivector>, 4> comp;
};

// Orthonormal frame components e_a^mu (row a, column mu).
class Tetrad {
 public:
  using Fn = std::function<Eigen::Matrix4d(const Point4&)>;

  static Tetrad flat();
  static Tetrad constant(const Eigen::Matrix4d& e);
  explicit Tetrad(Fn fn) : fn_(std::move(fn)) {}

  Eigen::Matrix4d components(const Point4& x) const { return fn_(x); }
  // g_{mu nu}, reconstructed by inverting g^{mu nu} = eta^{ab} e_a^mu e_b^nu.
  Eigen::Matrix4d metric_lower(const Point4& x) const;
  // || g_{mu nu} e_a^mu e_b^nu - eta_{ab} ||_max
  double orthonormality_residual(const Point4& x) const;

 private:
  Fn fn_;
};

// Curvature 2-form F_{mu nu}: antisymmetric by construction, bivector-valued.
class StrengthField {
 public:
  using Fn = std::function<Multivector(int mu, int nu, const Point4&)>;

  StrengthField(Signature sig, Fn upper) : sig_(sig), upper_(std::move(upper)) {}

  Multivector at(int mu, int nu, const Point4& x) const {
    if (mu == nu) return Multivector(sig_);
    return mu < nu ? upper_(mu, nu, x) : -upper_(nu, mu, x);
  }

 private:
  Signature sig_;
  Fn upper_;
};

}  // namespace sta
