#pragma once

#include <lieq/algebra.hpp>
#include <lieq/ferrers.hpp>
#include <lieq/linalg.hpp>
#include <lieq/poly.hpp>
#include <lieq/symbols.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lieq {

/// Quadratic polynomial c2 delta^2 + c1 delta + c0 with exact coefficients.
struct EigenvaluePoly {
  Rat c2, c1, c0;

  Rat eval(const Rat& delta) const { return c2 * delta * delta + c1 * delta + c0; }
  bool operator==(const EigenvaluePoly& o) const {
    return c2 == o.c2 && c1 == o.c1 && c0 == o.c0;
  }
  EigenvaluePoly operator-(const EigenvaluePoly& o) const {
    return {c2 - o.c2, c1 - o.c1, c0 - o.c0};
  }
  std::string str() const;
};

/// Weight in the delta_i coordinates, 1-based rows of a diagram padded with
/// zeros; entries beyond the vector length count as zero.
using WeightVector = std::vector<long>;

/// Scalar product induced by the Killing form of sl(n):
/// (delta_i, delta_j) = (n delta_ij - 1) / (2 n^2).
Rat weight_inner(const WeightVector& mu1, const WeightVector& mu2, int n);

/// (mu, mu + S) for the weight of the diagram, S the sum of positive roots,
/// via the closed double sum over rows. Equals
/// weight_inner(mu, mu) + sum_i k_i (n - 2i + 1) / (2n).
Rat mu_mu_plus_S(const Ferrers& diag, int n);

/// Casimir eigenvalue of the tensor Lie derivative on the submodule labeled
/// by the diagram inside the xi-degree-k symbol space, as a quadratic in the
/// shift: (1/2d)(d delta - k)(d(delta-1) - k) plus the fiber term
/// dim_h0 / (2 (mu_1, mu_1 + S) d + dim_h0) * (mu, mu + S), with mu_1 the
/// weight of the degree -1 module.
EigenvaluePoly eigenvalue_general(const Ferrers& diag, const AlgebraSpec& spec, int k);

/// Closed form for the orthogonal family:
/// n(n-1)/4 delta^2 - (k + n(n-1)/4) delta + nk/(n-1)
///   + sum_i k_i (k_i - 2i) / (4(n-1)),  k = (sum k_i)/2.
/// Throws std::invalid_argument when sum k_i is odd or length > n.
EigenvaluePoly eigenvalue_orthogonal(const Ferrers& diag, int n);

/// Closed form for the symplectic family:
/// n(n+1)/4 delta^2 - (k + n(n+1)/4) delta + k
///   + sum_i k_i (k_i - 2i) / (4(n+1)),  k = (sum k_i)/2.
EigenvaluePoly eigenvalue_symplectic(const Ferrers& diag, int n);

enum class Rep { TensorFields, DiffOps };

/// Ordered monomial basis of the truncated symbol space: xi-degree <= K and
/// x-degree <= M, sorted by xi-degree, then x-degree, then key bytes.
struct SymBasis {
  int K = 0, M = 0, d = 0;
  std::vector<Poly::Key> keys;
  std::map<Poly::Key, int> index;

  static SymBasis build(int d, int K, int M);
  int find(const Poly::Key& k) const;
  size_t size() const { return keys.size(); }
};

/// Exact matrix of a linear operator on the truncated symbol space, with the
/// parameters it was assembled from.
struct OperatorMatrix {
  AlgebraSpec spec;
  Rat lambda, mu;
  int K = 0, M = 0;
  SymBasis basis;
  SpMat mat;
};

/// Expands op over each basis monomial. A nonzero coefficient outside the
/// basis throws TruncationError: results are never silently truncated.
SpMat matrix_of_operator(const SymBasis& basis, const std::function<Poly(const Poly&)>& op);

/// Casimir operator of the tensor (TensorFields, shift mu - lambda) or
/// operator-symbol (DiffOps, pair lambda -> mu) representation, summed over
/// the dual-basis pairs of dual_bases(spec), on the (K, M) truncation. Both
/// preserve the truncation block exactly.
OperatorMatrix casimir_matrix(Rep rep, const AlgebraSpec& spec, const Rat& lambda, const Rat& mu,
                              int K, int M);

/// Difference operator 2 sum_i gamma(eps_i) after the tensor Lie derivative
/// along e_i; equals casimir_matrix(DiffOps) - casimir_matrix(TensorFields).
/// Lowers xi-degree and x-degree by one.
OperatorMatrix n_c_matrix(const AlgebraSpec& spec, const Rat& lambda, const Rat& mu, int K, int M);

/// The tensor Casimir acts on symbols as a scalar plus a pointwise fiber
/// operator: its matrix is block diagonal, one identical fiber block per
/// x-monomial within each xi-degree. CasimirFibers holds those blocks.
struct CasimirFibers {
  bool pointwise = false;           // matrix == sum_k Id_x (x) fiber[k]
  std::vector<MatQ> fiber;          // per xi-degree 0..K, over pure-xi monomials
  std::vector<std::vector<Poly::Key>> fiber_keys;
};

/// Extracts the x-degree-0 block per xi-degree and checks the pointwise
/// product structure entry by entry against the full matrix.
CasimirFibers casimir_fibers(const OperatorMatrix& om);

/// One predicted eigenvalue of the tensor Casimir on a truncation.
struct PredictedEigenvalue {
  int k = 0;                 // xi-degree
  std::vector<Ferrers> diagrams;
  Rat value;
  Int fiber_multiplicity;    // sum of diagram dimensions
};

/// Closed-form spectrum of the (K, M) tensor Casimir at a numeric shift,
/// grouped by xi-degree and eigenvalue (collisions within a degree merge).
std::vector<PredictedEigenvalue> predicted_spectrum(const AlgebraSpec& spec, const Rat& delta,
                                                    int K);

/// Result of checking a tensor Casimir matrix against the closed forms.
struct SpectrumCheck {
  bool pointwise = false;       // fiber product structure held
  bool annihilated = false;     // prod (fiber - value) = 0 per xi-degree
  bool multiplicities = false;  // fiber kernel dims match diagram dimensions
  std::string detail;           // first failure, empty when all hold
};

/// Verifies that the matrix is annihilated by the predicted eigenvalue
/// product with the predicted multiplicities, using the fiber blocks.
SpectrumCheck check_spectrum(const OperatorMatrix& tensor_casimir);

}  // namespace lieq
