#pragma once

#include <lieq/linalg.hpp>
#include <lieq/poly.hpp>
#include <lieq/rational.hpp>

#include <utility>
#include <vector>

namespace lieq {

enum class Family { Orthogonal, Symplectic };

/// Dimension data of one member of the two families of graded Lie algebras
/// the library works with. The degree -1 part is the space of antisymmetric
/// (Orthogonal) or symmetric (Symplectic) n x n matrices, of dimension d; the
/// degree 0 part is gl(n); the degree +1 part is dual to the degree -1 part.
struct AlgebraSpec {
  Family family;
  int n;
  int d;       // dim of the degree -1 (and +1) part
  int dim_g;   // 2d + n^2
  int dim_h0;  // n^2 - 1, the traceless part of degree 0
};

/// Throws std::invalid_argument for n < 2.
AlgebraSpec make_algebra(Family family, int n);

/// Element written by graded blocks: a in degree -1, A in gl(n), w in degree
/// +1. Embedded in gl(2n) as [[A, a], [w, -A^T]]; a and w carry the family's
/// symmetry type.
struct GradedElement {
  MatQ a, A, w;
};

GradedElement ge_zero(const AlgebraSpec& spec);
GradedElement ge_add(const GradedElement& x, const GradedElement& y);
GradedElement ge_scale(const Rat& c, const GradedElement& x);
bool ge_equal(const GradedElement& x, const GradedElement& y);

/// The gl(2n) picture of x.
MatQ embed(const GradedElement& x, const AlgebraSpec& spec);
/// Splits a gl(2n) matrix back into graded blocks, validating the block
/// symmetries. Throws InvariantError if the matrix is not in the algebra.
GradedElement split_blocks(const MatQ& m, const AlgebraSpec& spec);

/// Matrix commutator of the embeddings, split back into blocks.
GradedElement bracket(const GradedElement& x, const GradedElement& y, const AlgebraSpec& spec);

/// Grading element: ad(euler) acts as p on the degree p block. Realized as
/// -1/2 times the identity of gl(n), so that degree -1 matches the constant
/// vector fields of the realization.
GradedElement euler(const AlgebraSpec& spec);

/// Row-major list of the free coordinates of the degree -1 block:
/// pairs (i, j) with i < j (Orthogonal) or i <= j (Symplectic).
const std::vector<std::pair<int, int>>& gm1_coords(const AlgebraSpec& spec);

/// Coordinate basis matrices of the degree -1 space: E_ij - E_ji, or
/// E_ij + E_ji and E_ii, matching gm1_coords order.
std::vector<MatQ> gm1_matrices(const AlgebraSpec& spec);

std::vector<GradedElement> gm1_basis(const AlgebraSpec& spec);
std::vector<GradedElement> g0_basis(const AlgebraSpec& spec);   // all E_pq, row-major
std::vector<GradedElement> g1_basis(const AlgebraSpec& spec);   // coordinate matrices in w
std::vector<GradedElement> h0_basis(const AlgebraSpec& spec);   // traceless degree 0
/// Concatenation gm1 | g0 | g1; the basis every ad matrix refers to.
std::vector<GradedElement> g_basis(const AlgebraSpec& spec);
/// Names matching g_basis order: e1..ed, A11..Ann, eps1..epsd.
std::vector<std::string> g_basis_labels(const AlgebraSpec& spec);

std::vector<Rat> flatten_gm1(const MatQ& a, const AlgebraSpec& spec);
std::vector<Rat> flatten_g(const GradedElement& x, const AlgebraSpec& spec);

/// Killing data computed once from structure constants: ad matrices over
/// g_basis and their trace-form Gram matrix.
class KillingTable {
 public:
  explicit KillingTable(const AlgebraSpec& spec);
  const AlgebraSpec& spec() const { return spec_; }
  const MatQ& gram() const { return gram_; }
  const SpMat& ad(int basis_index) const { return ad_[basis_index]; }
  Rat form(const GradedElement& x, const GradedElement& y) const;

 private:
  AlgebraSpec spec_;
  std::vector<SpMat> ad_;
  MatQ gram_;
};

/// Trace of ad(x) ad(y) on g_basis.
Rat killing_form(const GradedElement& x, const GradedElement& y, const AlgebraSpec& spec);

/// Bases of the degree -1 part, its Killing-dual partner in degree +1, the
/// traceless degree 0 part and its dual, plus the grading element pair.
/// Pairings: form(e[i], eps[j]) = form(h[i], hstar[j]) = delta_ij,
/// form(euler, euler_dual) = 1, and all cross pairings vanish.
struct DualBasisPackage {
  std::vector<GradedElement> e, eps, h, hstar;
  GradedElement euler, euler_dual;
};

/// Uses the coordinate basis for e and the standard traceless basis for h.
/// Verifies the dual-pairing identities and sum_i [e_i, eps_i] = -euler/2
/// before returning; failures throw InvariantError.
DualBasisPackage dual_bases(const AlgebraSpec& spec);
/// Same construction over caller-supplied bases of the degree -1 part and of
/// the traceless degree 0 part.
DualBasisPackage dual_bases(const AlgebraSpec& spec, const std::vector<GradedElement>& e_basis,
                            const std::vector<GradedElement>& h_basis);

/// Polynomial vector field on the flat degree -1 space, one component per
/// coordinate, each a polynomial of degree <= 2 in the x variables.
struct PolyVectorField {
  int d = 0;
  std::vector<Poly> comp;
  Poly divergence() const;
};

/// The infinitesimal fractional-linear action on the degree -1 matrix
/// variable, X' = a - A X - X A^T - X w X, flattened to coordinates. This is
/// a Lie algebra homomorphism: field([x,y]) = [field(x), field(y)], with the
/// grading element mapped to the Euler field sum_i x_i d/dx_i.
PolyVectorField realize_vector_field(const GradedElement& x, const AlgebraSpec& spec);

}  // namespace lieq
