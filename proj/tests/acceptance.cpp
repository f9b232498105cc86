#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lieq/critical.hpp>
#include <lieq/quantize.hpp>

#include <chrono>
#include <cstdio>
#include <set>
#include <vector>

#include "helpers.hpp"

using namespace lieq;

namespace {

/// Wall-clock guard for one criterion. Every check is exact rational
/// equality; the only pinned tolerances are the runtime budgets.
class Criterion {
 public:
  Criterion(int index, const char* name, long budget_ms)
      : index_(index), name_(name), budget_ms_(budget_ms),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool condition) { ok_ = ok_ && condition; }

  void finish() {
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    bool pass = ok_ && ms <= budget_ms_;
    std::printf("ACCEPTANCE %d %s: %s (%ld ms, budget %ld ms)\n", index_, name_,
                pass ? "PASS" : "FAIL", ms, budget_ms_);
    std::fflush(stdout);
    CHECK(ok_);
    CHECK(ms <= budget_ms_);
  }

 private:
  int index_;
  const char* name_;
  long budget_ms_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

Int binom(unsigned long a, unsigned long b) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

const std::vector<Family> kFamilies = {Family::Orthogonal, Family::Symplectic};

}  // namespace

TEST_CASE("criterion 1: eigenvalue collision") {
  Criterion c(1, "eigenvalue collision", 1);
  Ferrers a = Ferrers::parse("6,2,2,2"), b = Ferrers::parse("6,4");
  Rat orth_a = eigenvalue_orthogonal(a, 6).eval(0);
  Rat orth_b = eigenvalue_orthogonal(b, 6).eval(0);
  c.expect(orth_a == orth_b);
  c.expect(orth_a == Rat(36, 5));
  Rat symp_a = eigenvalue_symplectic(a, 5).eval(0);
  Rat symp_b = eigenvalue_symplectic(b, 5).eval(0);
  c.expect(symp_a == symp_b);
  c.expect(symp_a == Rat(6));
  c.finish();
}

TEST_CASE("criterion 2: spectrum oracle") {
  Criterion c(2, "spectrum oracle", 60000);
  for (Family fam : kFamilies)
    for (int n : {2, 3}) {
      AlgebraSpec spec = make_algebra(fam, n);
      for (const Rat& delta : {Rat(0), Rat(1, 2), Rat(1), Rat(3)}) {
        OperatorMatrix om = casimir_matrix(Rep::TensorFields, spec, 0, delta, 3, 2);
        SpectrumCheck sc = check_spectrum(om);
        INFO(sc.detail);
        c.expect(sc.pointwise);
        c.expect(sc.annihilated);
        c.expect(sc.multiplicities);
      }
    }
  c.finish();
}

TEST_CASE("criterion 3: casimir difference identity") {
  Criterion c(3, "casimir difference identity", 10000);
  std::vector<std::pair<Rat, Rat>> weights = {{0, 0}, {Rat(1, 2), Rat(1, 2)}, {Rat(1, 3), Rat(2, 3)}};
  for (Family fam : kFamilies)
    for (const auto& [lambda, mu] : weights) {
      AlgebraSpec spec = make_algebra(fam, 2);
      SpMat diff = casimir_matrix(Rep::DiffOps, spec, lambda, mu, 2, 2).mat -
                   casimir_matrix(Rep::TensorFields, spec, lambda, mu, 2, 2).mat;
      c.expect(diff == n_c_matrix(spec, lambda, mu, 2, 2).mat);
    }
  c.finish();
}

TEST_CASE("criterion 4: dual basis identities") {
  Criterion c(4, "dual basis identities", 1000);
  for (Family fam : kFamilies)
    for (int n = 2; n <= 5; ++n) {
      AlgebraSpec spec = make_algebra(fam, n);
      DualBasisPackage pkg = dual_bases(spec);
      c.expect(killing_form(pkg.euler, pkg.euler, spec) == Rat(2 * spec.d));
      GradedElement sum = ge_zero(spec);
      for (size_t i = 0; i < pkg.e.size(); ++i)
        sum = ge_add(sum, bracket(pkg.e[i], pkg.eps[i], spec));
      c.expect(ge_equal(sum, ge_scale(Rat(-1, 2), pkg.euler)));
    }
  c.finish();
}

TEST_CASE("criterion 5: decomposition dimension sums") {
  Criterion c(5, "decomposition dimension sums", 5000);
  for (Family fam : kFamilies)
    for (int n = 2; n <= 6; ++n) {
      AlgebraSpec spec = make_algebra(fam, n);
      for (int k = 0; k <= 6; ++k) {
        Int sum = 0;
        for (const auto& diag : admissible_diagrams(spec, k)) sum += dim_irrep(diag, n);
        c.expect(sum == binom(spec.d + k - 1, k));
      }
    }
  c.finish();
}

TEST_CASE("criterion 6: critical set positivity") {
  Criterion c(6, "critical set positivity", 30000);
  for (Family fam : kFamilies)
    for (int n = 2; n <= 5; ++n) {
      AlgebraSpec spec = make_algebra(fam, n);
      for (const auto& cv : critical_set(spec, 6)) {
        c.expect(cv.delta > 0);
        c.expect(!cv.witnesses.empty());
        for (const auto& w : cv.witnesses) {
          // Independent root of the eigenvalue difference.
          EigenvaluePoly upper = eigenvalue_general(w.upper, spec, w.k);
          EigenvaluePoly lower = eigenvalue_general(w.lower, spec, w.l);
          EigenvaluePoly diff = upper - lower;
          c.expect(diff.c2 == 0);
          c.expect(diff.c1 != 0);
          if (diff.c1 == 0) continue;
          Rat root = -diff.c0 / diff.c1;
          c.expect(root == cv.delta);
          c.expect(upper.eval(root) == lower.eval(root));
          c.expect(critical_delta(w.upper, w.k, w.lower, w.l, spec) == cv.delta);
        }
      }
    }
  c.finish();
}

TEST_CASE("criterion 7: end-to-end quantization") {
  Criterion c(7, "end-to-end quantization", 120000);
  for (Family fam : kFamilies) {
    AlgebraSpec spec = make_algebra(fam, 2);
    QuantizationMap qm = quantization_matrix(spec, Rat(1, 2), Rat(1, 2), 2, 2);
    const SymBasis& basis = qm.q.basis;
    for (int i = 0; i < qm.q.mat.rows(); ++i) {
      c.expect(qm.q.mat.get(i, i) == 1);
      for (const auto& [j, v] : qm.q.mat.row(i))
        if (j != i)
          c.expect(Poly::key_xideg(basis.keys[i], basis.d) <
                   Poly::key_xideg(basis.keys[j], basis.d));
    }
    EquivarianceReport rep = verify_equivariance(qm);
    long safe_keys = 0;
    for (const auto& k : basis.keys)
      if (Poly::key_xdeg(k, basis.d) <= qm.q.M - 1) ++safe_keys;
    c.expect(rep.tested == spec.dim_g * safe_keys);
    c.expect(rep.violations.empty());
  }
  c.finish();
}

TEST_CASE("criterion 8: tree dominance") {
  Criterion c(8, "tree dominance", 30000);
  for (Family fam : kFamilies)
    for (int n = 2; n <= 4; ++n) {
      AlgebraSpec spec = make_algebra(fam, n);
      Ferrers step = fam == Family::Orthogonal ? Ferrers::parse("1,1") : Ferrers::parse("2");
      Ferrers dual_step = dual_diagram(step, n);
      for (int k = 1; k <= 4; ++k)
        for (const auto& root : admissible_diagrams(spec, k)) {
          TildeTree tt = tilde_tree(root, k, spec);
          c.expect(tt.levels.at(0) == std::vector<Ferrers>{root});
          for (size_t l = 1; l < tt.levels.size(); ++l) {
            std::vector<Ferrers> lower = admissible_diagrams(spec, k - static_cast<int>(l));
            std::set<Ferrers> lower_set(lower.begin(), lower.end());
            for (const auto& child : tt.levels[l]) {
              c.expect(lower_set.count(child) == 1);
              bool has_parent = false;
              for (const auto& parent : tt.levels[l - 1]) {
                if (lr_tensor(parent, dual_step, n).count(normalize(child, n)) == 0) continue;
                has_parent = true;
                // Every parent-child edge respects strict dominance.
                c.expect(dominance_lt(child, parent));
              }
              c.expect(has_parent);
            }
          }
        }
    }
  // The cocycle tree never leaves the combinatorial tree.
  for (Family fam : kFamilies) {
    AlgebraSpec spec = make_algebra(fam, 2);
    for (int k = 1; k <= 2; ++k)
      for (const auto& root : admissible_diagrams(spec, k)) {
        GammaTree gt = gamma_tree(root, k, spec, Rat(1, 2), Rat(1, 2));
        TildeTree tt = tilde_tree(root, k, spec);
        c.expect(gt.levels.size() <= tt.levels.size());
        for (size_t l = 0; l < gt.levels.size(); ++l) {
          std::set<Ferrers> allowed(tt.levels[l].begin(), tt.levels[l].end());
          for (const auto& diag : gt.levels[l].content) c.expect(allowed.count(diag) == 1);
        }
      }
  }
  c.finish();
}

TEST_CASE("criterion 9: affine coincidence") {
  Criterion c(9, "affine coincidence", 5000);
  std::vector<std::pair<Rat, Rat>> weights = {
      {0, 0}, {Rat(1, 2), Rat(1, 2)}, {Rat(1, 3), Rat(2, 3)}, {Rat(2, 5), Rat(-1, 3)}};
  for (Family fam : kFamilies)
    for (int n = 2; n <= 3; ++n) {
      AlgebraSpec spec = make_algebra(fam, n);
      std::vector<GradedElement> affine = gm1_basis(spec);
      for (const auto& x : g0_basis(spec)) affine.push_back(x);
      for (const auto& [lambda, mu] : weights)
        for (const auto& x : affine) {
          PolyVectorField X = realize_vector_field(x, spec);
          for (int salt = 0; salt < 2; ++salt) {
            Poly P = testutil::sample_symbol(spec.d, salt);
            c.expect(lie_diffop(X, P, lambda, mu) == lie_tensor(X, P, mu - lambda));
          }
        }
    }
  c.finish();
}
