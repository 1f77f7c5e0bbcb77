#include "sta/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sta {

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector m(sig);
  m.terms_.push_back({0, value});
  return m;
}

Multivector Multivector::blade(Signature sig, std::uint32_t mask, double coeff) {
  if (mask >= sig.blade_count())
    throw SignatureError("blade mask out of range for signature");
  Multivector m(sig);
  m.terms_.push_back({mask, coeff});
  return m;
}

Multivector Multivector::basis_vector(Signature sig, int i) {
  if (i < 0 || i >= sig.dim()) throw SignatureError("basis index out of range");
  return blade(sig, std::uint32_t{1} << i, 1.0);
}

bool Multivector::is_zero() const {
  for (const Term& t : terms_)
    if (t.coeff != 0.0) return false;
  return true;
}

double Multivector::coeff(std::uint32_t mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, std::uint32_t m) { return t.mask < m; });
  return (it != terms_.end() && it->mask == mask) ? it->coeff : 0.0;
}

void Multivector::add_term(std::uint32_t mask, double coeff) {
  if (mask >= sig_.blade_count())
    throw SignatureError("blade mask out of range for signature");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, std::uint32_t m) { return t.mask < m; });
  if (it != terms_.end() && it->mask == mask)
    it->coeff += coeff;
  else
    terms_.insert(it, {mask, coeff});
}

void Multivector::require_same_signature(const Multivector& other) const {
  if (sig_ != other.sig_)
    throw AlgebraError("operands belong to different Clifford algebras");
}

Multivector Multivector::operator-() const {
  Multivector out(*this);
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_signature(rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto ia = terms_.cbegin();
  auto ib = rhs.terms_.cbegin();
  while (ia != terms_.end() && ib != rhs.terms_.end()) {
    if (ia->mask < ib->mask)
      merged.push_back(*ia++);
    else if (ib->mask < ia->mask)
      merged.push_back(*ib++);
    else {
      merged.push_back({ia->mask, ia->coeff + ib->coeff});
      ++ia, ++ib;
    }
  }
  merged.insert(merged.end(), ia, terms_.cend());
  merged.insert(merged.end(), ib, rhs.terms_.cend());
  terms_ = std::move(merged);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  return *this += -rhs;
}

Multivector& Multivector::operator*=(double s) {
  for (Term& t : terms_) t.coeff *= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature())
    throw AlgebraError("operands belong to different Clifford algebras");
  struct Raw {
    std::uint32_t mask;
    double value;
  };
  std::vector<Raw> raw;
  raw.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      BladeProduct bp = blade_product(Blade(ta.mask), Blade(tb.mask), a.signature());
      raw.push_back({bp.blade.mask, bp.sign * ta.coeff * tb.coeff});
    }
  // Stable sort keeps generation order within a mask: the summation order is
  // a fixed function of the operands.
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Raw& x, const Raw& y) { return x.mask < y.mask; });
  Multivector out(a.signature());
  for (const Raw& r : raw) out.add_term(r.mask, r.value);
  return out;
}

Multivector grade_project(const Multivector& a, int r) {
  Multivector out(a.signature());
  for (const auto& t : a.terms())
    if (std::popcount(t.mask) == r) out.add_term(t.mask, t.coeff);
  return out;
}

double scalar_part(const Multivector& a) { return a.coeff(0); }

bool is_pure_grade(const Multivector& a, int r, double tol) {
  for (const auto& t : a.terms())
    if (std::popcount(t.mask) != r && std::abs(t.coeff) > tol) return false;
  return true;
}

bool is_even(const Multivector& a, double tol) {
  for (const auto& t : a.terms())
    if ((std::popcount(t.mask) & 1) && std::abs(t.coeff) > tol) return false;
  return true;
}

int max_grade(const Multivector& a) {
  int g = 0;
  for (const auto& t : a.terms())
    if (t.coeff != 0.0) g = std::max(g, std::popcount(t.mask));
  return g;
}

Multivector reverse(const Multivector& a) {
  Multivector out(a.signature());
  for (const auto& t : a.terms())
    out.add_term(t.mask, reversion_sign(std::popcount(t.mask)) * t.coeff);
  return out;
}

double inner(const Multivector& a, const Multivector& b) {
  // Rounding dust on other grades (e.g. from a rotor sandwich) is accepted.
  double tol_a = 1e-10 * (1.0 + a.norm());
  double tol_b = 1e-10 * (1.0 + b.norm());
  if (!is_pure_grade(a, 1, tol_a) || !is_pure_grade(b, 1, tol_b))
    throw AlgebraError("inner() expects grade-1 operands");
  Multivector sym = grade_project(a, 1) * grade_project(b, 1) +
                    grade_project(b, 1) * grade_project(a, 1);
  return 0.5 * sym.scalar_part();
}

Multivector outer(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature())
    throw AlgebraError("operands belong to different Clifford algebras");
  Multivector out(a.signature());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      if ((ta.mask & tb.mask) != 0) continue;  // shared factor: no grade-(r+s) part
      BladeProduct bp = blade_product(Blade(ta.mask), Blade(tb.mask), a.signature());
      out.add_term(bp.blade.mask, bp.sign * ta.coeff * tb.coeff);
    }
  return out;
}

Multivector contract(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature())
    throw AlgebraError("operands belong to different Clifford algebras");
  Multivector out(a.signature());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      int ra = std::popcount(ta.mask), rb = std::popcount(tb.mask);
      if (ra == 0 || rb == 0) continue;
      BladeProduct bp = blade_product(Blade(ta.mask), Blade(tb.mask), a.signature());
      if (bp.blade.grade() != std::abs(ra - rb)) continue;
      out.add_term(bp.blade.mask, bp.sign * ta.coeff * tb.coeff);
    }
  return out;
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  return a * b - b * a;
}

double Multivector::norm() const {
  double s = 0.0;
  for (const Term& t : terms_) s += t.coeff * t.coeff;
  return std::sqrt(s);
}

Multivector Multivector::pruned(double eps) const {
  Multivector out(sig_);
  for (const Term& t : terms_)
    if (std::abs(t.coeff) > eps) out.terms_.push_back(t);
  return out;
}

Multivector exp(const Multivector& a) {
  double n = a.norm();
  if (!std::isfinite(n)) throw AlgebraError("exp of non-finite multivector");
  if (n > 1e9) throw AlgebraError("exp argument too large, series would overflow");

  int halvings = 0;
  double scale = 1.0;
  while (n * scale > 0.5) {
    scale *= 0.5;
    ++halvings;
  }
  Multivector x = a * scale;
  Multivector result = Multivector::scalar(a.signature(), 1.0);
  Multivector term = result;
  constexpr int kMaxTerms = 200;
  int k = 1;
  for (; k <= kMaxTerms; ++k) {
    term = term * x * (1.0 / k);
    result += term;
    if (term.norm() < 1e-15 * result.norm()) break;
  }
  if (k > kMaxTerms) throw AlgebraError("exp series did not converge");
  for (int i = 0; i < halvings; ++i) result = result * result;
  return result;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return (a - b).norm() <= tol;
}

bool operator==(const Multivector& a, const Multivector& b) {
  if (a.sig_ != b.sig_) return false;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    while (ia != a.terms_.end() && ia->coeff == 0.0) ++ia;
    while (ib != b.terms_.end() && ib->coeff == 0.0) ++ib;
    if (ia == a.terms_.end() || ib == b.terms_.end())
      return ia == a.terms_.end() && ib == b.terms_.end();
    if (ia->mask != ib->mask || ia->coeff != ib->coeff) return false;
    ++ia, ++ib;
  }
  return true;
}

namespace {

std::string blade_label(std::uint32_t mask, const Signature& sig) {
  const bool st = (sig == spacetime());
  std::string s;
  for (int i = 0; i < sig.dim(); ++i) {
    if (!(mask & (std::uint32_t{1} << i))) continue;
    if (st)
      s += "γ" + std::to_string(i);
    else
      s += "e" + std::to_string(i + 1);
  }
  return s;
}

std::string format_coeff(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", c);
  return buf;
}

}  // namespace

std::string Multivector::to_string() const {
  std::vector<Term> sorted;
  for (const Term& t : terms_)
    if (t.coeff != 0.0) sorted.push_back(t);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Term& a, const Term& b) {
    int ga = std::popcount(a.mask), gb = std::popcount(b.mask);
    return ga != gb ? ga < gb : a.mask < b.mask;
  });
  if (sorted.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : sorted) {
    double c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    double mag = std::abs(c);
    std::string label = blade_label(t.mask, sig_);
    if (label.empty())
      out += format_coeff(mag);
    else if (mag == 1.0)
      out += label;
    else
      out += format_coeff(mag) + "*" + label;
    first = false;
  }
  return out;
}

}  // namespace sta
