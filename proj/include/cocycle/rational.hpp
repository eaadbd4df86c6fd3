#ifndef COCYCLE_RATIONAL_HPP
#define COCYCLE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cocycle {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" text form. Integers are written with an explicit "/1".
std::string to_fraction_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace cocycle

#endif  // COCYCLE_RATIONAL_HPP
