#pragma once

#include <gmpxx.h>

#include <string>

namespace curvecount {

/// Arbitrary-precision integer used for every coefficient and count.
using Integer = mpz_class;

/// Binomial coefficient with the convention C(n, k) = 0 outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
  Integer out;
  if (n < 0 || k < 0 || k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

}  // namespace curvecount
