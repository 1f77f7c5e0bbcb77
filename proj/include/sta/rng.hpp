#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "sta/frames.hpp"
#include "sta/multivector.hpp"

namespace sta {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 so that
// streams are identical on every platform and cheap to fork per test case.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1).
  double uniform() {
    return (next() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Independent stream for case `index` under the same top-level seed.
  static SplitMix64 fork(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mix.next();
    return mix;
  }

 private:
  std::uint64_t state_;
};

// Standard-normal coefficient on every basis blade.
inline Multivector random_multivector(SplitMix64& rng, const Signature& sig) {
  Multivector m(sig);
  for (std::uint32_t mask = 0; mask < sig.blade_count(); ++mask)
    m.add_term(mask, rng.normal());
  return m;
}

inline Multivector random_even(SplitMix64& rng, const Signature& sig) {
  Multivector m(sig);
  for (std::uint32_t mask = 0; mask < sig.blade_count(); ++mask)
    if (std::popcount(mask) % 2 == 0) m.add_term(mask, rng.normal());
  return m;
}

inline Multivector random_vector(SplitMix64& rng, const Signature& sig) {
  Multivector m(sig);
  for (int i = 0; i < sig.dim(); ++i)
    m.add_term(std::uint32_t{1} << i, rng.normal());
  return m;
}

inline Multivector random_bivector(SplitMix64& rng, const Signature& sig) {
  Multivector m(sig);
  for (std::uint32_t mask = 0; mask < sig.blade_count(); ++mask)
    if (std::popcount(mask) == 2) m.add_term(mask, rng.normal());
  return m;
}

// exp of a random (scaled) bivector: a generic rotor.
inline Multivector random_rotor_value(SplitMix64& rng, const Signature& sig,
                                      double scale = 0.5) {
  return exp(random_bivector(rng, sig) * scale);
}

}  // namespace sta
