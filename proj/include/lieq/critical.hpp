#pragma once

#include <lieq/algebra.hpp>
#include <lieq/ferrers.hpp>
#include <lieq/rational.hpp>

#include <string>
#include <vector>

namespace lieq {

/// A pair of diagrams whose Casimir eigenvalues coincide at some shift:
/// the upper diagram at xi-degree k, a tree descendant at degree l < k.
struct CriticalWitness {
  Ferrers upper;
  int k = 0;
  Ferrers lower;
  int l = 0;
};

/// A critical shift value with every witness pair that produces it.
/// Invariants: each lower diagram is strictly dominated by its upper one,
/// l < k, and delta > 0.
struct CriticalValue {
  Rat delta;
  std::vector<CriticalWitness> witnesses;
};

/// The unique shift at which the eigenvalues of the two labeled submodules
/// coincide. The quadratic terms cancel and the difference is linear in the
/// shift with slope l - k != 0. Closed forms:
///   orthogonal:  n/(n-1) + sum_i (k_i-l_i)(k_i+l_i-2i) / (4(n-1)(k-l)),
///   symplectic:  1       + sum_i (k_i-l_i)(k_i+l_i-2i) / (4(n+1)(k-l)).
/// Throws std::invalid_argument unless l < k and box counts are 2k and 2l.
/// When the lower diagram is dominated by the upper one, the positivity
/// lower bound sum_i (k_i^2 - l_i^2) / (4(n-+1)(k-l)) from the closed-form
/// derivation is asserted; a violation throws InvariantError.
Rat critical_delta(const Ferrers& upper, int k, const Ferrers& lower, int l,
                   const AlgebraSpec& spec);

/// All critical shifts witnessed by roots of degree <= kmax and their
/// tilde-tree descendants, deduplicated by value with witnesses merged,
/// sorted ascending. Every emitted value is > 0. kmax is a mandatory
/// horizon: the untruncated set is infinite.
std::vector<CriticalValue> critical_set(const AlgebraSpec& spec, int kmax);

/// Membership report of mu - lambda in critical_set(spec, kmax).
struct CriticalReport {
  bool critical = false;
  Rat delta;
  std::vector<CriticalWitness> witnesses;
};

CriticalReport is_critical(const Rat& lambda, const Rat& mu, const AlgebraSpec& spec, int kmax);

std::string witness_str(const CriticalWitness& w);

}  // namespace lieq
