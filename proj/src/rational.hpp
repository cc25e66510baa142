#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace charlab {

// Exact arithmetic substrate. Rational is always kept in lowest terms with a
// positive denominator (gmp canonical form).
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline std::int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) return 0;
  return z.get_si();
}

}  // namespace charlab
