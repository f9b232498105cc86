#include <doctest.h>

#include <lieq/errors.hpp>
#include <lieq/spectra.hpp>

#include <functional>
#include <vector>

#include "helpers.hpp"

using namespace lieq;

namespace {

/// Independent assembly of the tensor Casimir from the dual-basis package:
/// sum over dual pairs of nested derivatives, entirely at the level of
/// polynomials. Mirrors the defining sum, not the library's code path.
std::function<Poly(const Poly&)> casimir_op(const AlgebraSpec& spec, const DualBasisPackage& pkg,
                                            const Rat& delta) {
  auto realize_all = [&](const std::vector<GradedElement>& xs) {
    std::vector<PolyVectorField> out;
    for (const auto& x : xs) out.push_back(realize_vector_field(x, spec));
    return out;
  };
  auto e = realize_all(pkg.e);
  auto eps = realize_all(pkg.eps);
  auto h = realize_all(pkg.h);
  auto hstar = realize_all(pkg.hstar);
  PolyVectorField euler_f = realize_vector_field(pkg.euler, spec);
  PolyVectorField euler_d = realize_vector_field(pkg.euler_dual, spec);
  return [=](const Poly& P) {
    Poly acc(P.dim());
    for (size_t i = 0; i < e.size(); ++i) {
      acc += lie_tensor(e[i], lie_tensor(eps[i], P, delta), delta);
      acc += lie_tensor(eps[i], lie_tensor(e[i], P, delta), delta);
    }
    for (size_t j = 0; j < h.size(); ++j)
      acc += lie_tensor(h[j], lie_tensor(hstar[j], P, delta), delta);
    acc += lie_tensor(euler_f, lie_tensor(euler_d, P, delta), delta);
    return acc;
  };
}

std::vector<Ferrers> diagram_pool() {
  return {Ferrers(),
          Ferrers::parse("2"),
          Ferrers::parse("1,1"),
          Ferrers::parse("2,2"),
          Ferrers::parse("4"),
          Ferrers::parse("3,1"),
          Ferrers::parse("6,4"),
          Ferrers::parse("6,2,2,2"),
          Ferrers::parse("4,2,2")};
}

}  // namespace

TEST_CASE("weight scalar products") {
  CHECK(weight_inner({1}, {1}, 2) == Rat(1, 8));
  CHECK(weight_inner({1}, {0, 1}, 2) == Rat(-1, 8));
  CHECK(weight_inner({1}, {1}, 3) == Rat(1, 9));
  CHECK(weight_inner({1}, {0, 1}, 3) == Rat(-1, 18));
  CHECK(weight_inner({2, 1}, {1, 1, 1}, 3) == Rat(0));  // second factor is central
}

TEST_CASE("shifted square of a weight agrees between the two routes") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& diag : diagram_pool()) {
      if (static_cast<int>(diag.length()) > n) continue;
      WeightVector mu(diag.rows().begin(), diag.rows().end());
      Rat direct = mu_mu_plus_S(diag, n);
      Rat via_inner = weight_inner(mu, mu, n);
      for (size_t i = 1; i <= diag.length(); ++i)
        via_inner += Rat(diag.row(i - 1)) * frac(n - 2 * static_cast<long>(i) + 1, 2 * n);
      CHECK(direct == via_inner);
    }
}

TEST_CASE("closed eigenvalue forms at hand-checked points") {
  EigenvaluePoly s2 = eigenvalue_symplectic(Ferrers::parse("2"), 2);
  CHECK(s2.c2 == Rat(3, 2));
  CHECK(s2.c1 == Rat(-5, 2));
  CHECK(s2.c0 == Rat(1));
  CHECK(s2.eval(0) == Rat(1));
  CHECK(s2.eval(1) == Rat(0));

  // Trivial diagram: (d/2) delta^2 - (d/2) delta for both families.
  for (int n = 2; n <= 5; ++n) {
    int d_o = n * (n - 1) / 2, d_s = n * (n + 1) / 2;
    EigenvaluePoly o = eigenvalue_orthogonal(Ferrers(), n);
    CHECK(o == EigenvaluePoly{frac(d_o, 2), frac(-d_o, 2), 0});
    EigenvaluePoly s = eigenvalue_symplectic(Ferrers(), n);
    CHECK(s == EigenvaluePoly{frac(d_s, 2), frac(-d_s, 2), 0});
  }

  CHECK(eigenvalue_orthogonal(Ferrers::parse("6,4"), 6).eval(0) == Rat(36, 5));
  CHECK(eigenvalue_orthogonal(Ferrers::parse("6,2,2,2"), 6).eval(0) == Rat(36, 5));
  CHECK(eigenvalue_symplectic(Ferrers::parse("6,4"), 5).eval(0) == Rat(6));
  CHECK(eigenvalue_symplectic(Ferrers::parse("6,2,2,2"), 5).eval(0) == Rat(6));

  CHECK_THROWS_AS(eigenvalue_orthogonal(Ferrers::parse("3"), 4), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalue_symplectic(Ferrers::parse("2,2,2"), 2), std::invalid_argument);
}

TEST_CASE("general eigenvalue matches the family closed forms") {
  for (Family fam : {Family::Orthogonal, Family::Symplectic})
    for (int n = 2; n <= 6; ++n) {
      AlgebraSpec spec = make_algebra(fam, n);
      for (int k = 0; k <= 5; ++k)
        for (const auto& diag : admissible_diagrams(spec, k)) {
          EigenvaluePoly general = eigenvalue_general(diag, spec, k);
          EigenvaluePoly closed = fam == Family::Orthogonal ? eigenvalue_orthogonal(diag, n)
                                                            : eigenvalue_symplectic(diag, n);
          CHECK(general == closed);
        }
    }
}

TEST_CASE("symbol basis enumerates the truncation in degree order") {
  SymBasis basis = SymBasis::build(3, 2, 1);
  // (1 + 3 + 6) xi-monomials times (1 + 3) x-monomials.
  CHECK(basis.size() == 40);
  CHECK(basis.keys.front() == Poly::unit_key(3));
  for (size_t i = 0; i < basis.size(); ++i) CHECK(basis.index.at(basis.keys[i]) == (int)i);
  for (size_t i = 1; i < basis.size(); ++i) {
    int prev = Poly::key_xideg(basis.keys[i - 1], 3), cur = Poly::key_xideg(basis.keys[i], 3);
    CHECK(prev <= cur);
    if (prev == cur)
      CHECK(Poly::key_xdeg(basis.keys[i - 1], 3) <= Poly::key_xdeg(basis.keys[i], 3));
  }
  CHECK(basis.find(Poly::unit_key(3)) == 0);
  Poly::Key outside = Poly::unit_key(3);
  outside[0] = 2;  // x-degree 2 > M
  CHECK(basis.find(outside) == -1);
}

TEST_CASE("operator expansion refuses to truncate") {
  SymBasis basis = SymBasis::build(2, 1, 1);
  auto mul_x = [](const Poly& P) { return Poly::x(2, 0) * P; };
  CHECK_THROWS_AS(matrix_of_operator(basis, mul_x), TruncationError);
  auto zero = [](const Poly& P) { return Poly(P.dim()); };
  CHECK(matrix_of_operator(basis, zero).is_zero());
}

TEST_CASE("one-degree fiber block is scalar at the predicted value") {
  AlgebraSpec spec = make_algebra(Family::Symplectic, 2);
  OperatorMatrix om = casimir_matrix(Rep::TensorFields, spec, 0, 0, 1, 0);
  REQUIRE(om.basis.size() == 4);  // 1 constant + 3 linear fiber monomials
  SpMat expected(4, 4);
  for (int i = 1; i < 4; ++i) expected.set(i, i, 1);  // value 1 on the degree-1 block
  CHECK(om.mat == expected);
}

TEST_CASE("library Casimir equals the dual-pair assembly") {
  for (Family fam : {Family::Orthogonal, Family::Symplectic}) {
    AlgebraSpec spec = make_algebra(fam, 2);
    Rat delta(1, 3);
    SymBasis basis = SymBasis::build(spec.d, 2, 1);
    auto mine = casimir_op(spec, dual_bases(spec), delta);
    SpMat reference = matrix_of_operator(basis, mine);
    CHECK(casimir_matrix(Rep::TensorFields, spec, 0, delta, 2, 1).mat == reference);
  }
}

TEST_CASE("Casimir is independent of the chosen dual bases") {
  for (Family fam : {Family::Orthogonal, Family::Symplectic}) {
    AlgebraSpec spec = make_algebra(fam, 2);
    Rat delta(-1, 2);
    // Shear the coordinate bases; dual partners are recomputed inside.
    auto e_basis = gm1_basis(spec);
    e_basis[0] = ge_add(e_basis[0], ge_scale(2, e_basis[e_basis.size() - 1]));
    auto h_basis = h0_basis(spec);
    h_basis[0] = ge_add(h_basis[0], h_basis[1]);
    DualBasisPackage sheared = dual_bases(spec, e_basis, h_basis);

    SymBasis basis = SymBasis::build(spec.d, 2, 1);
    SpMat a = matrix_of_operator(basis, casimir_op(spec, dual_bases(spec), delta));
    SpMat b = matrix_of_operator(basis, casimir_op(spec, sheared, delta));
    CHECK(a == b);
  }
}

TEST_CASE("Casimir commutes with every symbol derivative") {
  for (Family fam : {Family::Orthogonal, Family::Symplectic}) {
    AlgebraSpec spec = make_algebra(fam, 2);
    Rat delta(2, 3);
    auto C = casimir_op(spec, dual_bases(spec), delta);
    for (const auto& x : g_basis(spec)) {
      PolyVectorField X = realize_vector_field(x, spec);
      for (int salt = 0; salt < 3; ++salt) {
        Poly P = testutil::sample_symbol(spec.d, salt);
        CHECK(C(lie_tensor(X, P, delta)) == lie_tensor(X, C(P), delta));
      }
    }
  }
}

TEST_CASE("predicted spectrum lists closed-form values with module dimensions") {
  AlgebraSpec spec = make_algebra(Family::Symplectic, 2);
  auto pred = predicted_spectrum(spec, 0, 2);
  REQUIRE(pred.size() == 4);
  CHECK(pred[0].k == 0);
  CHECK(pred[0].value == Rat(0));
  CHECK(pred[0].fiber_multiplicity == 1);
  CHECK(pred[1].k == 1);
  CHECK(pred[1].value == Rat(1));
  CHECK(pred[1].fiber_multiplicity == 3);
  // Degree 2 splits into (2,2) at 5/3 and (4) at 8/3, ascending per degree.
  CHECK(pred[2].k == 2);
  CHECK(pred[2].value == Rat(5, 3));
  CHECK(pred[2].diagrams == std::vector<Ferrers>{Ferrers::parse("2,2")});
  CHECK(pred[2].fiber_multiplicity == 1);
  CHECK(pred[3].value == Rat(8, 3));
  CHECK(pred[3].fiber_multiplicity == 5);
}

TEST_CASE("explicit matrices realize the predicted spectrum") {
  for (Family fam : {Family::Orthogonal, Family::Symplectic})
    for (const Rat& delta : {Rat(0), Rat(1, 2), Rat(1)}) {
      AlgebraSpec spec = make_algebra(fam, 2);
      OperatorMatrix om = casimir_matrix(Rep::TensorFields, spec, 0, delta, 2, 1);
      SpectrumCheck check = check_spectrum(om);
      INFO(check.detail);
      CHECK(check.pointwise);
      CHECK(check.annihilated);
      CHECK(check.multiplicities);
    }
}

TEST_CASE("fiber blocks repeat across coefficient monomials") {
  AlgebraSpec spec = make_algebra(Family::Symplectic, 2);
  OperatorMatrix om = casimir_matrix(Rep::TensorFields, spec, 0, Rat(1, 2), 2, 2);
  CasimirFibers fibers = casimir_fibers(om);
  REQUIRE(fibers.pointwise);
  REQUIRE(fibers.fiber.size() == 3);
  CHECK(fibers.fiber[0].rows() == 1);
  CHECK(fibers.fiber[1].rows() == 3);
  CHECK(fibers.fiber[2].rows() == 6);
  // The x-degree-0 corner of each xi-degree block is the fiber itself.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(fibers.fiber[1](i, j) == om.mat.get(om.basis.find(Poly::xi(3, i).terms().begin()->first),
                                                om.basis.find(Poly::xi(3, j).terms().begin()->first)));
}

TEST_CASE("operator Casimir differs from the tensor one by the lowering term") {
  std::vector<std::pair<Rat, Rat>> weights = {{0, 0}, {Rat(1, 2), Rat(1, 2)}, {Rat(1, 3), Rat(2, 3)}};
  for (Family fam : {Family::Orthogonal, Family::Symplectic})
    for (const auto& [lambda, mu] : weights) {
      AlgebraSpec spec = make_algebra(fam, 2);
      OperatorMatrix op = casimir_matrix(Rep::DiffOps, spec, lambda, mu, 2, 2);
      OperatorMatrix tens = casimir_matrix(Rep::TensorFields, spec, lambda, mu, 2, 2);
      OperatorMatrix low = n_c_matrix(spec, lambda, mu, 2, 2);
      CHECK(op.mat - tens.mat == low.mat);
      // The correction strictly lowers both degrees by one.
      const SymBasis& basis = low.basis;
      for (int i = 0; i < low.mat.rows(); ++i)
        for (const auto& [j, c] : low.mat.row(i)) {
          CHECK(Poly::key_xideg(basis.keys[i], basis.d) ==
                Poly::key_xideg(basis.keys[j], basis.d) - 1);
          CHECK(Poly::key_xdeg(basis.keys[i], basis.d) ==
                Poly::key_xdeg(basis.keys[j], basis.d) - 1);
        }
      // In particular it annihilates the whole fiber-degree-zero block.
      for (int j = 0; j < low.mat.cols(); ++j)
        if (Poly::key_xideg(basis.keys[j], basis.d) == 0)
          for (int i = 0; i < low.mat.rows(); ++i) CHECK(low.mat.get(i, j) == 0);
    }
}
