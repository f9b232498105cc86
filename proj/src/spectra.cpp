#include <lieq/errors.hpp>
#include <lieq/spectra.hpp>

#include <algorithm>

namespace lieq {

std::string EigenvaluePoly::str() const {
  return rat_str(c2) + "*delta^2 + " + rat_str(c1) + "*delta + " + rat_str(c0);
}

Rat weight_inner(const WeightVector& mu1, const WeightVector& mu2, int n) {
  auto at = [](const WeightVector& w, int i) -> long {
    return i < static_cast<int>(w.size()) ? w[static_cast<size_t>(i)] : 0;
  };
  Rat dot = 0, s1 = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    dot += Rat(at(mu1, i)) * at(mu2, i);
    s1 += at(mu1, i);
    s2 += at(mu2, i);
  }
  return (Rat(n) * dot - s1 * s2) / (Rat(2) * n * n);
}

Rat mu_mu_plus_S(const Ferrers& diag, int n) {
  if (static_cast<int>(diag.length()) > n)
    throw std::invalid_argument("diagram has more rows than n");
  Rat sum = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const long ki = diag.row(static_cast<size_t>(i - 1));
      const long kj = diag.row(static_cast<size_t>(j - 1));
      const long kron = i == j ? n : 0;
      sum += Rat(ki * kj + 2 * ki * (n - j)) * (kron - 1);
    }
  return sum / (Rat(2) * n * n);
}

EigenvaluePoly eigenvalue_general(const Ferrers& diag, const AlgebraSpec& spec, int k) {
  const Rat d(spec.d);
  EigenvaluePoly out;
  out.c2 = d / 2;
  out.c1 = -(d + 2 * k) / Rat(2);
  out.c0 = Rat(k) * (d + k) / (2 * d);
  const Ferrers mu1 =
      spec.family == Family::Orthogonal ? Ferrers({1, 1}) : Ferrers({2});
  const Rat coef =
      Rat(spec.dim_h0) / (2 * mu_mu_plus_S(mu1, spec.n) * d + spec.dim_h0);
  out.c0 += coef * mu_mu_plus_S(diag, spec.n);
  return out;
}

EigenvaluePoly eigenvalue_orthogonal(const Ferrers& diag, int n) {
  if (static_cast<int>(diag.length()) > n)
    throw std::invalid_argument("diagram has more rows than n");
  if (diag.boxes() % 2 != 0) throw std::invalid_argument("odd box count");
  const Rat k = Rat(diag.boxes()) / 2;
  EigenvaluePoly out;
  out.c2 = Rat(n) * (n - 1) / 4;
  out.c1 = -(k + out.c2);
  Rat rows = 0;
  for (size_t i = 0; i < diag.length(); ++i)
    rows += Rat(diag.row(i)) * (diag.row(i) - 2 * static_cast<long>(i + 1));
  out.c0 = Rat(n) * k / (n - 1) + rows / (4 * (n - 1));
  return out;
}

EigenvaluePoly eigenvalue_symplectic(const Ferrers& diag, int n) {
  if (static_cast<int>(diag.length()) > n)
    throw std::invalid_argument("diagram has more rows than n");
  if (diag.boxes() % 2 != 0) throw std::invalid_argument("odd box count");
  const Rat k = Rat(diag.boxes()) / 2;
  EigenvaluePoly out;
  out.c2 = Rat(n) * (n + 1) / 4;
  out.c1 = -(k + out.c2);
  Rat rows = 0;
  for (size_t i = 0; i < diag.length(); ++i)
    rows += Rat(diag.row(i)) * (diag.row(i) - 2 * static_cast<long>(i + 1));
  out.c0 = k + rows / (4 * (n + 1));
  return out;
}

namespace {

void multiindices(int d, int deg, std::string& acc,
                  const std::function<void(const std::string&)>& emit) {
  if (static_cast<int>(acc.size()) == d - 1) {
    acc.push_back(static_cast<char>(deg));
    emit(acc);
    acc.pop_back();
    return;
  }
  for (int v = 0; v <= deg; ++v) {
    acc.push_back(static_cast<char>(v));
    multiindices(d, deg - v, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

SymBasis SymBasis::build(int d, int K, int M) {
  SymBasis b;
  b.d = d;
  b.K = K;
  b.M = M;
  std::vector<std::string> xparts, xiparts;
  std::string acc;
  for (int m = 0; m <= M; ++m)
    multiindices(d, m, acc, [&](const std::string& s) { xparts.push_back(s); });
  for (int k = 0; k <= K; ++k)
    multiindices(d, k, acc, [&](const std::string& s) { xiparts.push_back(s); });
  for (const auto& xi : xiparts)
    for (const auto& x : xparts) b.keys.push_back(x + xi);
  std::sort(b.keys.begin(), b.keys.end(), [d](const Poly::Key& a, const Poly::Key& c) {
    const int ka = Poly::key_xideg(a, d), kc = Poly::key_xideg(c, d);
    if (ka != kc) return ka < kc;
    const int ma = Poly::key_xdeg(a, d), mc = Poly::key_xdeg(c, d);
    if (ma != mc) return ma < mc;
    return a < c;
  });
  for (size_t i = 0; i < b.keys.size(); ++i) b.index[b.keys[i]] = static_cast<int>(i);
  return b;
}

int SymBasis::find(const Poly::Key& k) const {
  auto it = index.find(k);
  return it == index.end() ? -1 : it->second;
}

SpMat matrix_of_operator(const SymBasis& basis, const std::function<Poly(const Poly&)>& op) {
  const int n = static_cast<int>(basis.size());
  SpMat mat(n, n);
  for (int j = 0; j < n; ++j) {
    Poly pj(basis.d);
    pj.add_term(basis.keys[static_cast<size_t>(j)], 1);
    const Poly image = op(pj);
    for (const auto& [key, c] : image.terms()) {
      const int i = basis.find(key);
      if (i < 0)
        throw TruncationError("operator image leaves the truncated basis at monomial " +
                              Poly::key_str(key, basis.d));
      mat.add(i, j, c);
    }
  }
  return mat;
}

namespace {

struct DualPairFields {
  std::vector<std::pair<PolyVectorField, PolyVectorField>> pairs;  // (b, b*)
  std::vector<PolyVectorField> e, eps;                             // coordinate and dual
};

DualPairFields realize_dual_pairs(const AlgebraSpec& spec) {
  const DualBasisPackage dual = dual_bases(spec);
  DualPairFields out;
  auto realize = [&](const GradedElement& x) { return realize_vector_field(x, spec); };
  for (int i = 0; i < spec.d; ++i) {
    out.e.push_back(realize(dual.e[static_cast<size_t>(i)]));
    out.eps.push_back(realize(dual.eps[static_cast<size_t>(i)]));
    out.pairs.emplace_back(out.e.back(), out.eps.back());
  }
  out.pairs.emplace_back(realize(dual.euler), realize(dual.euler_dual));
  for (int j = 0; j < spec.dim_h0; ++j)
    out.pairs.emplace_back(realize(dual.h[static_cast<size_t>(j)]),
                           realize(dual.hstar[static_cast<size_t>(j)]));
  for (int i = 0; i < spec.d; ++i)
    out.pairs.emplace_back(out.eps[static_cast<size_t>(i)], out.e[static_cast<size_t>(i)]);
  return out;
}

}  // namespace

OperatorMatrix casimir_matrix(Rep rep, const AlgebraSpec& spec, const Rat& lambda, const Rat& mu,
                              int K, int M) {
  const DualPairFields fields = realize_dual_pairs(spec);
  const Rat delta = mu - lambda;
  OperatorMatrix om;
  om.spec = spec;
  om.lambda = lambda;
  om.mu = mu;
  om.K = K;
  om.M = M;
  om.basis = SymBasis::build(spec.d, K, M);
  auto op = [&](const Poly& P) {
    Poly acc(spec.d);
    for (const auto& [b, bstar] : fields.pairs) {
      if (rep == Rep::TensorFields)
        acc += lie_tensor(b, lie_tensor(bstar, P, delta), delta);
      else
        acc += lie_diffop(b, lie_diffop(bstar, P, lambda, mu), lambda, mu);
    }
    return acc;
  };
  om.mat = matrix_of_operator(om.basis, op);
  return om;
}

OperatorMatrix n_c_matrix(const AlgebraSpec& spec, const Rat& lambda, const Rat& mu, int K,
                          int M) {
  const DualPairFields fields = realize_dual_pairs(spec);
  const Rat delta = mu - lambda;
  OperatorMatrix om;
  om.spec = spec;
  om.lambda = lambda;
  om.mu = mu;
  om.K = K;
  om.M = M;
  om.basis = SymBasis::build(spec.d, K, M);
  auto op = [&](const Poly& P) {
    Poly acc(spec.d);
    for (int i = 0; i < spec.d; ++i) {
      const size_t ui = static_cast<size_t>(i);
      acc += gamma_op(fields.eps[ui], lie_tensor(fields.e[ui], P, delta), lambda, mu);
    }
    return Rat(2) * acc;
  };
  om.mat = matrix_of_operator(om.basis, op);
  return om;
}

CasimirFibers casimir_fibers(const OperatorMatrix& om) {
  const SymBasis& basis = om.basis;
  const int d = basis.d;
  CasimirFibers cf;
  cf.fiber.resize(static_cast<size_t>(om.K) + 1);
  cf.fiber_keys.resize(static_cast<size_t>(om.K) + 1);

  // Fiber positions: pure-xi monomials per xi-degree, in basis order.
  std::map<Poly::Key, std::pair<int, int>> slot;  // xi-part -> (k, position)
  for (const auto& key : basis.keys) {
    if (Poly::key_xdeg(key, d) != 0) continue;
    const int k = Poly::key_xideg(key, d);
    const std::string xi = key.substr(static_cast<size_t>(d));
    slot[xi] = {k, static_cast<int>(cf.fiber_keys[static_cast<size_t>(k)].size())};
    cf.fiber_keys[static_cast<size_t>(k)].push_back(key);
  }
  for (int k = 0; k <= om.K; ++k) {
    const int sz = static_cast<int>(cf.fiber_keys[static_cast<size_t>(k)].size());
    cf.fiber[static_cast<size_t>(k)] = MatQ(sz, sz);
  }

  // Pass 1: read the fiber blocks off the x-degree-0 columns.
  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i)
    for (const auto& [j, v] : om.mat.row(i)) {
      const Poly::Key& ck = basis.keys[static_cast<size_t>(j)];
      if (Poly::key_xdeg(ck, d) != 0) continue;
      const Poly::Key& rk = basis.keys[static_cast<size_t>(i)];
      if (Poly::key_xdeg(rk, d) != 0 ||
          Poly::key_xideg(rk, d) != Poly::key_xideg(ck, d)) {
        cf.pointwise = false;
        return cf;
      }
      const auto [k, col] = slot.at(ck.substr(static_cast<size_t>(d)));
      const int row = slot.at(rk.substr(static_cast<size_t>(d))).second;
      cf.fiber[static_cast<size_t>(k)](row, col) = v;
    }

  // Pass 2: every entry must match the fiber block of its column, with equal
  // x-parts; per-column nonzero counts must match the fiber column.
  std::vector<long> colcount(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, v] : om.mat.row(i)) {
      const Poly::Key& rk = basis.keys[static_cast<size_t>(i)];
      const Poly::Key& ck = basis.keys[static_cast<size_t>(j)];
      if (rk.substr(0, static_cast<size_t>(d)) != ck.substr(0, static_cast<size_t>(d))) {
        cf.pointwise = false;
        return cf;
      }
      const auto [kr, row] = slot.at(rk.substr(static_cast<size_t>(d)));
      const auto [kc, col] = slot.at(ck.substr(static_cast<size_t>(d)));
      if (kr != kc || cf.fiber[static_cast<size_t>(kc)](row, col) != v) {
        cf.pointwise = false;
        return cf;
      }
      ++colcount[static_cast<size_t>(j)];
    }
  std::vector<std::vector<long>> fibercount(static_cast<size_t>(om.K) + 1);
  for (int k = 0; k <= om.K; ++k) {
    const MatQ& F = cf.fiber[static_cast<size_t>(k)];
    fibercount[static_cast<size_t>(k)].assign(static_cast<size_t>(F.cols()), 0);
    for (int i = 0; i < F.rows(); ++i)
      for (int j = 0; j < F.cols(); ++j)
        if (F(i, j) != 0) ++fibercount[static_cast<size_t>(k)][static_cast<size_t>(j)];
  }
  for (int j = 0; j < n; ++j) {
    const auto [k, col] = slot.at(basis.keys[static_cast<size_t>(j)].substr(static_cast<size_t>(d)));
    if (colcount[static_cast<size_t>(j)] != fibercount[static_cast<size_t>(k)][static_cast<size_t>(col)]) {
      cf.pointwise = false;
      return cf;
    }
  }
  cf.pointwise = true;
  return cf;
}

std::vector<PredictedEigenvalue> predicted_spectrum(const AlgebraSpec& spec, const Rat& delta,
                                                    int K) {
  std::vector<PredictedEigenvalue> out;
  for (int k = 0; k <= K; ++k) {
    std::map<Rat, PredictedEigenvalue> by_value;
    for (const Ferrers& diag : admissible_diagrams(spec, k)) {
      const Rat value = eigenvalue_general(diag, spec, k).eval(delta);
      auto& slot = by_value[value];
      slot.k = k;
      slot.value = value;
      slot.diagrams.push_back(diag);
      slot.fiber_multiplicity += dim_irrep(diag, spec.n);
    }
    for (auto& [value, pe] : by_value) out.push_back(pe);
  }
  return out;
}

SpectrumCheck check_spectrum(const OperatorMatrix& tensor_casimir) {
  SpectrumCheck sc;
  const CasimirFibers cf = casimir_fibers(tensor_casimir);
  sc.pointwise = cf.pointwise;
  if (!sc.pointwise) {
    sc.detail = "matrix is not a pointwise fiber operator";
    return sc;
  }
  const Rat delta = tensor_casimir.mu - tensor_casimir.lambda;
  const auto pred = predicted_spectrum(tensor_casimir.spec, delta, tensor_casimir.K);

  sc.annihilated = true;
  sc.multiplicities = true;
  for (int k = 0; k <= tensor_casimir.K; ++k) {
    const MatQ& F = cf.fiber[static_cast<size_t>(k)];
    const int sz = F.rows();
    MatQ prod = MatQ::identity(sz);
    Int mult_total = 0;
    for (const auto& pe : pred) {
      if (pe.k != k) continue;
      MatQ shifted = F;
      for (int i = 0; i < sz; ++i) shifted(i, i) -= pe.value;
      prod = prod * shifted;
      const Int mult = sz - shifted.rank();
      mult_total += mult;
      if (mult != pe.fiber_multiplicity) {
        sc.multiplicities = false;
        if (sc.detail.empty())
          sc.detail = "xi-degree " + std::to_string(k) + " value " + rat_str(pe.value) +
                      ": kernel dimension " + mult.get_str() + ", expected " +
                      pe.fiber_multiplicity.get_str();
      }
    }
    if (!prod.is_zero()) {
      sc.annihilated = false;
      if (sc.detail.empty())
        sc.detail = "xi-degree " + std::to_string(k) + ": eigenvalue product does not annihilate";
    }
    if (mult_total != sz) {
      sc.multiplicities = false;
      if (sc.detail.empty())
        sc.detail = "xi-degree " + std::to_string(k) + ": multiplicities sum to " +
                    mult_total.get_str() + " of " + std::to_string(sz);
    }
  }
  return sc;
}

}  // namespace lieq
