#ifndef COCYCLE_SAMPLING_HPP
#define COCYCLE_SAMPLING_HPP

// Seeded random cochains for property tests and the CLI.

#include <cstdint>
#include <random>

#include "cocycle/cochain.hpp"

namespace cocycle {

/// p/q with |p| <= 9 and 1 <= q <= 4, possibly zero.
inline Rational random_rational(std::mt19937_64& rng) {
  const auto p = static_cast<std::int64_t>(rng() % 19) - 9;
  const auto q = static_cast<std::int64_t>(rng() % 4) + 1;
  return make_rational(p, q);
}

/// Every admitted coefficient of the space inside the window gets a random value.
inline HomogeneousCochain random_cochain(const CochainSpace& space, std::int64_t window, std::mt19937_64& rng) {
  HomogeneousCochain out(space);
  for (const auto& id : space.enumerate(window)) out.set(id, random_rational(rng));
  return out;
}

}  // namespace cocycle

#endif  // COCYCLE_SAMPLING_HPP
