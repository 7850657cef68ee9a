#pragma once

#include <gmpxx.h>

#include <string>

#include "treext/errors.hpp"

namespace treext {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
using Ratio = mpq_class;

inline BigInt binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

inline BigInt factorial(long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// "p/q" when q != 1, plain "p" otherwise.
inline std::string to_string(const Ratio& q) { return q.get_str(); }

/// Parses "p" or "p/q" with optional sign.
inline Ratio ratio_from_string(const std::string& s) {
  Ratio q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("invalid rational '" + s + "'", 0);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  q.canonicalize();
  return q;
}

}  // namespace treext
