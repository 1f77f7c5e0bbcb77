#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sta {

class SignatureError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Upper bound on p+q; keeps full basis enumeration (2^n blades) cheap.
inline constexpr int kMaxDim = 12;

// Metric signature (p,q). Basis vectors are indexed 0..p+q-1; the first p
// square to +1, the remaining q to -1.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxDim)
      throw SignatureError("signature (" + std::to_string(p_) + "," +
                           std::to_string(q_) + ") out of supported range");
  }

  int dim() const { return p + q; }
  std::uint32_t blade_count() const { return std::uint32_t{1} << dim(); }

  // +1 or -1: the square of basis vector i.
  int metric(int i) const {
    if (i < 0 || i >= dim()) throw SignatureError("basis index out of range");
    return i < p ? +1 : -1;
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature cl2() { return {2, 0}; }
inline Signature cl3() { return {3, 0}; }
// Spacetime Cl(1,3): gamma0^2 = +1, gamma1..3 square to -1.
inline Signature spacetime() { return {1, 3}; }

// Basis blade: bit i set means basis vector i participates, factors kept in
// ascending index order.
struct Blade {
  std::uint32_t mask = 0;

  Blade() = default;
  explicit Blade(std::uint32_t m) : mask(m) {}

  int grade() const { return std::popcount(mask); }

  friend bool operator==(const Blade&, const Blade&) = default;
  friend bool operator<(const Blade& a, const Blade& b) { return a.mask < b.mask; }
};

struct BladeProduct {
  Blade blade;
  int sign = 0;  // +1 or -1; never 0 for a non-degenerate metric
};

// Product of two canonical basis blades: result mask is the XOR, the sign
// counts transpositions needed to reorder factors plus the metric signs of
// the repeated indices.
inline BladeProduct blade_product(Blade a, Blade b, const Signature& sig) {
  if (a.mask >= sig.blade_count() || b.mask >= sig.blade_count())
    throw SignatureError("blade mask out of range for signature");
  int sign = 1;
  std::uint32_t rest = a.mask >> 1;
  int swaps = 0;
  while (rest != 0) {
    swaps += std::popcount(rest & b.mask);
    rest >>= 1;
  }
  if (swaps & 1) sign = -sign;
  std::uint32_t common = a.mask & b.mask;
  while (common != 0) {
    sign *= sig.metric(std::countr_zero(common));
    common &= common - 1;
  }
  return {Blade(a.mask ^ b.mask), sign};
}

// Sign of reversion on a grade-r blade: (-1)^(r(r-1)/2).
inline int reversion_sign(int grade) {
  return (grade / 2) % 2 == 0 ? +1 : -1;
}

}  // namespace sta
