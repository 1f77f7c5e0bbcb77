#include "sta/frames.hpp"

namespace sta {

std::vector<Blade> basis_blades(const Signature& sig) {
  std::vector<Blade> out;
  out.reserve(sig.blade_count());
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) out.emplace_back(m);
  return out;
}

std::vector<Blade> even_blades(const Signature& sig) {
  std::vector<Blade> out;
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m)
    if (std::popcount(m) % 2 == 0) out.emplace_back(m);
  return out;
}

Multivector pseudoscalar(Signature sig) {
  return Multivector::blade(sig, sig.blade_count() - 1, 1.0);
}

}  // namespace sta
