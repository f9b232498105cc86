#pragma once

#include <lieq/algebra.hpp>
#include <lieq/poly.hpp>

namespace testutil {

/// Commutator of polynomial vector fields, [X, Y]^i = X(Y^i) - Y(X^i).
inline lieq::PolyVectorField vf_bracket(const lieq::PolyVectorField& X,
                                        const lieq::PolyVectorField& Y) {
  lieq::PolyVectorField r;
  r.d = X.d;
  r.comp.assign(X.d, lieq::Poly(X.d));
  for (int i = 0; i < X.d; ++i) {
    lieq::Poly acc(X.d);
    for (int j = 0; j < X.d; ++j) {
      acc += X.comp[j] * Y.comp[i].dx(j);
      acc -= Y.comp[j] * X.comp[i].dx(j);
    }
    r.comp[i] = acc;
  }
  return r;
}

inline bool vf_equal(const lieq::PolyVectorField& X, const lieq::PolyVectorField& Y) {
  if (X.d != Y.d) return false;
  for (int i = 0; i < X.d; ++i)
    if (!(X.comp[i] == Y.comp[i])) return false;
  return true;
}

/// Deterministic symbol with mixed monomials and fractional coefficients.
inline lieq::Poly sample_symbol(int d, int salt) {
  lieq::Poly p(d);
  long state = 1234 + 97 * salt;
  auto next = [&]() {
    state = (state * 48271) % 2147483647;
    return state;
  };
  for (int t = 0; t < 5; ++t) {
    lieq::Poly::Key key = lieq::Poly::unit_key(d);
    for (int i = 0; i < d; ++i) {
      key[i] = static_cast<char>(next() % 3);
      key[d + i] = static_cast<char>(next() % 3);
    }
    long num = next() % 7 - 3;
    p.add_term(key, lieq::frac(num, 1 + next() % 4));
  }
  return p;
}

/// Deterministic xi-free polynomial.
inline lieq::Poly sample_function(int d, int salt) {
  lieq::Poly p(d);
  long state = 7777 + 31 * salt;
  auto next = [&]() {
    state = (state * 48271) % 2147483647;
    return state;
  };
  for (int t = 0; t < 4; ++t) {
    lieq::Poly::Key key = lieq::Poly::unit_key(d);
    for (int i = 0; i < d; ++i) key[i] = static_cast<char>(next() % 4);
    long num = next() % 9 - 4;
    p.add_term(key, lieq::frac(num, 1 + next() % 3));
  }
  return p;
}

}  // namespace testutil
