#pragma once

#include <gmpxx.h>

#include <string>

namespace lcsfi {

// All coefficient arithmetic in the library is exact.
using Integer = mpz_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace lcsfi
