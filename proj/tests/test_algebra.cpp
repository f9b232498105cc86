#include <doctest.h>

#include <lieq/algebra.hpp>
#include <lieq/errors.hpp>

#include <vector>

#include "helpers.hpp"

using namespace lieq;
using testutil::vf_bracket;
using testutil::vf_equal;

namespace {

const std::vector<AlgebraSpec>& small_specs() {
  static std::vector<AlgebraSpec> specs = [] {
    std::vector<AlgebraSpec> s;
    for (int n = 2; n <= 4; ++n) {
      s.push_back(make_algebra(Family::Orthogonal, n));
      s.push_back(make_algebra(Family::Symplectic, n));
    }
    return s;
  }();
  return specs;
}

int degree_of_block(const GradedElement& x) {
  bool am1 = !x.a.is_zero(), a0 = !x.A.is_zero(), a1 = !x.w.is_zero();
  if (am1 && !a0 && !a1) return -1;
  if (!am1 && a0 && !a1) return 0;
  if (!am1 && !a0 && a1) return 1;
  return 99;  // mixed or zero
}

}  // namespace

TEST_CASE("algebra dimensions and validation") {
  CHECK_THROWS_AS(make_algebra(Family::Orthogonal, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(Family::Symplectic, 0), std::invalid_argument);
  for (int n = 2; n <= 6; ++n) {
    AlgebraSpec o = make_algebra(Family::Orthogonal, n);
    CHECK(o.d == n * (n - 1) / 2);
    CHECK(o.dim_g == 2 * o.d + n * n);
    CHECK(o.dim_h0 == n * n - 1);
    AlgebraSpec s = make_algebra(Family::Symplectic, n);
    CHECK(s.d == n * (n + 1) / 2);
    CHECK(s.dim_g == 2 * s.d + n * n);
  }
}

TEST_CASE("embedding splits back into graded blocks") {
  for (const auto& spec : small_specs()) {
    for (const auto& x : g_basis(spec)) {
      GradedElement back = split_blocks(embed(x, spec), spec);
      CHECK(ge_equal(back, x));
    }
  }
}

TEST_CASE("bracket respects the grading") {
  for (const auto& spec : small_specs()) {
    auto gm1 = gm1_basis(spec);
    auto g0 = g0_basis(spec);
    auto g1 = g1_basis(spec);
    auto deg_of = [&](const GradedElement& x) { return degree_of_block(x); };
    auto check_pair = [&](const GradedElement& x, int p, const GradedElement& y, int q) {
      GradedElement b = bracket(x, y, spec);
      if (ge_equal(b, ge_zero(spec))) return;
      CHECK(deg_of(b) == p + q);
    };
    // [g_p, g_q] lands in g_{p+q} and vanishes when |p+q| > 1.
    check_pair(gm1[0], -1, g0[1], 0);
    check_pair(g0[0], 0, g0[1], 0);
    check_pair(gm1[0], -1, g1[0], 1);
    for (const auto& a : gm1)
      for (const auto& b : gm1) CHECK(ge_equal(bracket(a, b, spec), ge_zero(spec)));
    for (const auto& a : g1)
      for (const auto& b : g1) CHECK(ge_equal(bracket(a, b, spec), ge_zero(spec)));
  }
}

TEST_CASE("grading element has eigenvalue p on the degree p block") {
  for (const auto& spec : small_specs()) {
    GradedElement E = euler(spec);
    for (const auto& x : gm1_basis(spec))
      CHECK(ge_equal(bracket(E, x, spec), ge_scale(-1, x)));
    for (const auto& x : g0_basis(spec))
      CHECK(ge_equal(bracket(E, x, spec), ge_zero(spec)));
    for (const auto& x : g1_basis(spec)) CHECK(ge_equal(bracket(E, x, spec), x));
  }
}

TEST_CASE("realization is a Lie algebra homomorphism") {
  for (const auto& spec : small_specs()) {
    auto basis = g_basis(spec);
    // A spread of pairs across all degree combinations, plus mixed elements.
    std::vector<std::pair<size_t, size_t>> pairs;
    size_t m = basis.size();
    for (size_t step = 1; step <= 3; ++step)
      for (size_t i = 0; i + step < m; i += 2) pairs.emplace_back(i, i + step);
    pairs.emplace_back(0, m - 1);
    for (auto [i, j] : pairs) {
      GradedElement x = basis[i], y = basis[j];
      PolyVectorField lhs = realize_vector_field(bracket(x, y, spec), spec);
      PolyVectorField rhs =
          vf_bracket(realize_vector_field(x, spec), realize_vector_field(y, spec));
      CHECK(vf_equal(lhs, rhs));
    }
    GradedElement mixed = ge_add(basis[0], ge_add(basis[m / 2], basis[m - 1]));
    GradedElement mixed2 = ge_add(ge_scale(Rat(2, 3), basis[1]), basis[m - 2]);
    PolyVectorField lhs = realize_vector_field(bracket(mixed, mixed2, spec), spec);
    PolyVectorField rhs =
        vf_bracket(realize_vector_field(mixed, spec), realize_vector_field(mixed2, spec));
    CHECK(vf_equal(lhs, rhs));
  }
}

TEST_CASE("degree -1 fields are the coordinate derivations") {
  for (const auto& spec : small_specs()) {
    auto gm1 = gm1_basis(spec);
    for (size_t i = 0; i < gm1.size(); ++i) {
      PolyVectorField f = realize_vector_field(gm1[i], spec);
      for (int j = 0; j < spec.d; ++j) {
        Poly expected =
            static_cast<size_t>(j) == i ? Poly::constant(spec.d, 1) : Poly(spec.d);
        CHECK(f.comp[j] == expected);
      }
    }
  }
}

TEST_CASE("grading element realizes as the Euler field") {
  for (const auto& spec : small_specs()) {
    PolyVectorField f = realize_vector_field(euler(spec), spec);
    for (int j = 0; j < spec.d; ++j) CHECK(f.comp[j] == Poly::x(spec.d, j));
  }
}

TEST_CASE("trace form is symmetric and invariant") {
  for (const auto& spec : small_specs()) {
    auto basis = g_basis(spec);
    size_t m = basis.size();
    std::vector<size_t> probe = {0, 1, m / 3, m / 2, m - 2, m - 1};
    KillingTable table(spec);
    for (size_t i : probe)
      for (size_t j : probe) {
        CHECK(table.form(basis[i], basis[j]) == table.form(basis[j], basis[i]));
        CHECK(killing_form(basis[i], basis[j], spec) == table.form(basis[i], basis[j]));
      }
    // beta([x,y],z) + beta(y,[x,z]) = 0 on sampled triples.
    for (size_t i : {size_t(0), m / 2})
      for (size_t j : {size_t(1), m - 1})
        for (size_t k : {m / 3, m - 2}) {
          Rat lhs = table.form(bracket(basis[i], basis[j], spec), basis[k]);
          Rat rhs = table.form(basis[j], bracket(basis[i], basis[k], spec));
          CHECK(lhs + rhs == 0);
        }
  }
}

TEST_CASE("trace form of the grading element is twice the coordinate count") {
  for (int n = 2; n <= 5; ++n)
    for (Family fam : {Family::Orthogonal, Family::Symplectic}) {
      AlgebraSpec spec = make_algebra(fam, n);
      CHECK(killing_form(euler(spec), euler(spec), spec) == Rat(2 * spec.d));
    }
}

TEST_CASE("dual bases pair to the identity and close the grading relation") {
  for (const auto& spec : small_specs()) {
    DualBasisPackage dual = dual_bases(spec);
    KillingTable table(spec);
    for (size_t i = 0; i < dual.e.size(); ++i)
      for (size_t j = 0; j < dual.eps.size(); ++j)
        CHECK(table.form(dual.e[i], dual.eps[j]) == Rat(i == j ? 1 : 0));
    for (size_t i = 0; i < dual.h.size(); ++i)
      for (size_t j = 0; j < dual.hstar.size(); ++j)
        CHECK(table.form(dual.h[i], dual.hstar[j]) == Rat(i == j ? 1 : 0));
    CHECK(table.form(dual.euler, dual.euler_dual) == Rat(1));
    CHECK(table.form(dual.e[0], dual.euler_dual) == Rat(0));
    CHECK(table.form(dual.h[0], dual.euler_dual) == Rat(0));

    GradedElement acc = ge_zero(spec);
    for (size_t i = 0; i < dual.e.size(); ++i)
      acc = ge_add(acc, bracket(dual.e[i], dual.eps[i], spec));
    CHECK(ge_equal(acc, ge_scale(Rat(-1, 2), euler(spec))));
  }
}

TEST_CASE("basis labels match the basis layout") {
  AlgebraSpec spec = make_algebra(Family::Symplectic, 2);
  auto labels = g_basis_labels(spec);
  REQUIRE(labels.size() == g_basis(spec).size());
  CHECK(labels.front() == "e1");
  CHECK(labels[spec.d] == "A11");
  CHECK(labels.back() == "eps" + std::to_string(spec.d));
}
