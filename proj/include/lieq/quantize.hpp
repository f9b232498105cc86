#pragma once

#include <lieq/critical.hpp>
#include <lieq/spectra.hpp>

#include <string>
#include <vector>

namespace lieq {

/// One eigenvalue of the tensor Casimir on a truncation, with its exact
/// spectral projector and the diagrams predicting it.
struct EigenPair {
  Rat value;
  SpMat projector;
  Int multiplicity;  // trace of the projector
  std::vector<std::pair<int, Ferrers>> sources;  // (xi-degree, diagram)
};

/// Spectral decomposition of C(L^t) on the (K, M) truncation at a fixed
/// shift. Projectors are idempotent, mutually annihilating and sum to the
/// identity; each is a polynomial in the Casimir matrix.
struct EigenDecomposition {
  AlgebraSpec spec;
  Rat delta;
  int K = 0, M = 0;
  SymBasis basis;
  SpMat casimir;
  std::vector<EigenPair> pairs;  // ascending by eigenvalue
};

/// Lagrange interpolation over the closed-form eigenvalue list. Verifies
/// that the projectors sum to the identity, that each is annihilated by its
/// shifted Casimir, and that each trace matches the predicted multiplicity;
/// failures throw InvariantError.
EigenDecomposition eigen_decompose(const AlgebraSpec& spec, const Rat& delta, int K, int M);

/// Quantization of one exact eigenvector P of C(L^t): the unique symbol
/// with principal part P that the operator Casimir maps to alpha times
/// itself, built level by level down the xi-degree, dividing the projected
/// image of the difference operator by the eigenvalue gaps.
/// Throws CriticalityError when mu - lambda is critical at horizon K, and
/// InvariantError on a zero divisor with a nonzero right side (the offending
/// diagram pair is reported; it must be a critical witness).
Poly quantize_symbol(const Poly& P, const AlgebraSpec& spec, const Rat& lambda, const Rat& mu,
                     int K, int M);

/// The quantization map on the whole (K, M) truncation.
struct QuantizationMap {
  OperatorMatrix q;
  bool verified_equivariant = false;
};

/// Assembles quantize_symbol over the spectral decomposition. The result is
/// unit upper triangular in the xi-degree ordering of the basis: Q - Id
/// strictly lowers xi-degree, so det Q = 1. Asserted before returning.
QuantizationMap quantization_matrix(const AlgebraSpec& spec, const Rat& lambda, const Rat& mu,
                                    int K, int M);

/// Exact equivariance check on the margin-safe block: for every g-basis
/// field X and every basis symbol P with x-degree <= M-1 (a Lie derivative
/// along the degree +1 part raises x-degree by one), compare
/// L^op_X(Q(P)) and Q(L^t_X(P)) as polynomials.
struct EquivarianceReport {
  long tested = 0;
  std::vector<std::string> violations;  // "X=<label> P=<monomial>"
};

EquivarianceReport verify_equivariance(const QuantizationMap& qm);

/// Levels of the gamma-tree of the root submodule: iterated spans of the
/// cocycle images gamma(eps_i) starting from the root's eigenspace in the
/// constant-coefficient fiber (x-degree 0, xi-degree k). Level bases are
/// column-reduced exact matrices over the fiber basis; content lists the
/// diagrams whose isotypic projectors hit the level.
struct GammaTreeLevel {
  int xi_degree = 0;
  MatQ basis;  // one column per basis vector, coordinates in SymBasis keys
  std::vector<Ferrers> content;
};

struct GammaTree {
  Ferrers root;
  int k = 0;
  Rat lambda, mu;
  SymBasis basis;  // the (K = k, M = 0) fiber basis the columns refer to
  std::vector<GammaTreeLevel> levels;
};

/// Root must be admissible of degree k. Each level is verified to be an
/// h0-submodule (closed under the fiber action of the traceless linear
/// fields); violations throw InvariantError. Content is computed through
/// the fiber Casimir projectors; a same-degree eigenvalue collision between
/// distinct diagrams cannot be separated this way and throws InvariantError.
GammaTree gamma_tree(const Ferrers& root, int k, const AlgebraSpec& spec, const Rat& lambda,
                     const Rat& mu);

}  // namespace lieq
