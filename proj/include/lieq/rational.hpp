#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lieq {

/// Exact rational scalar. Every quantity in the library is one of these;
/// no floating point is used anywhere.
using Rat = mpq_class;
using Int = mpz_class;

/// Canonical "p/q" (or "p" when q = 1) form. mpq_class keeps values
/// canonicalized, so equal rationals always print identically.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

/// Canonicalized fraction. The two-argument mpq_class constructor stores the
/// pair as given; GMP arithmetic and equality require reduced form, so every
/// fraction built from variable parts must go through here.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace lieq
