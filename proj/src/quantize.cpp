#include <lieq/errors.hpp>
#include <lieq/quantize.hpp>

#include <algorithm>

namespace lieq {

namespace {

/// Number of x-monomials of degree at most M in d variables.
Int x_monomial_count(int d, int M) {
  Int total = 0;
  for (int m = 0; m <= M; ++m) total += binomial(d + m - 1, m);
  return total;
}

std::string sources_str(const std::vector<std::pair<int, Ferrers>>& sources) {
  std::string s;
  for (const auto& [k, diag] : sources) {
    if (!s.empty()) s += ", ";
    s += "(" + diag.str() + ")@" + std::to_string(k);
  }
  return s;
}

}  // namespace

EigenDecomposition eigen_decompose(const AlgebraSpec& spec, const Rat& delta, int K, int M) {
  EigenDecomposition ed;
  ed.spec = spec;
  ed.delta = delta;
  ed.K = K;
  ed.M = M;
  OperatorMatrix cm = casimir_matrix(Rep::TensorFields, spec, 0, delta, K, M);
  ed.basis = std::move(cm.basis);
  ed.casimir = std::move(cm.mat);

  const Int xcount = x_monomial_count(spec.d, M);
  std::map<Rat, EigenPair> by_value;
  for (const PredictedEigenvalue& pe : predicted_spectrum(spec, delta, K)) {
    EigenPair& pair = by_value[pe.value];
    pair.value = pe.value;
    pair.multiplicity += pe.fiber_multiplicity * xcount;
    for (const Ferrers& diag : pe.diagrams) pair.sources.emplace_back(pe.k, diag);
  }

  const int N = static_cast<int>(ed.basis.size());
  SpMat sum(N, N);
  for (auto& [value, pair] : by_value) {
    SpMat proj = SpMat::identity(N);
    Rat denom = 1;
    for (const auto& [other, op] : by_value) {
      if (other == value) continue;
      proj = proj * ed.casimir.shifted(-other);
      denom *= value - other;
    }
    pair.projector = (Rat(1) / denom) * proj;
    if (!(ed.casimir.shifted(-value) * pair.projector).is_zero())
      throw InvariantError(
          "Casimir matrix is not annihilated by its predicted eigenvalue product at value " +
          rat_str(value));
    if (pair.projector.trace() != Rat(pair.multiplicity))
      throw InvariantError("projector trace " + rat_str(pair.projector.trace()) +
                           " does not match predicted multiplicity " +
                           pair.multiplicity.get_str() + " at eigenvalue " + rat_str(value));
    sum = sum + pair.projector;
    ed.pairs.push_back(std::move(pair));
  }
  if (!(sum == SpMat::identity(N)))
    throw InvariantError("Casimir eigenprojectors do not sum to the identity");
  return ed;
}

namespace {

using Vec = std::map<int, Rat>;

void axpy(Vec& out, const Rat& c, const Vec& v) {
  if (c == 0) return;
  for (const auto& [i, x] : v) {
    auto [it, fresh] = out.emplace(i, c * x);
    if (!fresh) {
      it->second += c * x;
      if (it->second == 0) out.erase(it);
    }
  }
}

/// Solves the descending triangular system for one homogeneous eigenvector
/// given by coordinates `top` at xi-degree k0 with eigenvalue alpha.
Vec solve_hat(const EigenDecomposition& ed, const SpMat& nc, const Vec& top, int k0,
              const Rat& alpha) {
  Vec hat = top;
  Vec level = top;
  for (int l = k0 - 1; l >= 0; --l) {
    const Vec rhs = nc.apply(level);
    level.clear();
    if (rhs.empty()) break;
    for (const EigenPair& pair : ed.pairs) {
      const Vec comp = pair.projector.apply(rhs);
      if (comp.empty()) continue;
      if (pair.value == alpha)
        throw InvariantError("zero divisor in the triangular solve at xi-degree " +
                             std::to_string(l) + ": eigenvalue " + rat_str(alpha) +
                             " recurs below the root; colliding labels " +
                             sources_str(pair.sources));
      axpy(level, Rat(1) / (alpha - pair.value), comp);
    }
    axpy(hat, 1, level);
  }
  return hat;
}

int homogeneous_xideg(const SymBasis& basis, const Vec& v) {
  int deg = -1;
  for (const auto& [i, c] : v) {
    const int k = Poly::key_xideg(basis.keys[static_cast<size_t>(i)], basis.d);
    if (deg < 0) deg = k;
    if (k != deg) return -2;
  }
  return deg;
}

}  // namespace

Poly quantize_symbol(const Poly& P, const AlgebraSpec& spec, const Rat& lambda, const Rat& mu,
                     int K, int M) {
  const CriticalReport crit = is_critical(lambda, mu, spec, K);
  if (crit.critical) {
    std::string msg = "shift " + rat_str(crit.delta) + " is critical at horizon " +
                      std::to_string(K) + "; witnesses:";
    for (const auto& w : crit.witnesses) msg += " " + witness_str(w);
    throw CriticalityError(msg);
  }
  const EigenDecomposition ed = eigen_decompose(spec, mu - lambda, K, M);
  const OperatorMatrix ncm = n_c_matrix(spec, lambda, mu, K, M);

  Vec coords;
  for (const auto& [key, c] : P.terms()) {
    const int i = ed.basis.find(key);
    if (i < 0)
      throw TruncationError("symbol leaves the truncated basis at monomial " +
                            Poly::key_str(key, spec.d));
    coords[i] = c;
  }
  if (coords.empty()) return Poly(spec.d);
  const int k0 = homogeneous_xideg(ed.basis, coords);
  if (k0 == -2) throw std::invalid_argument("symbol is not homogeneous in xi-degree");

  // Identify the eigenvalue: C P must be an exact multiple of P.
  const Vec image = ed.casimir.apply(coords);
  Rat alpha = 0;
  if (!image.empty()) {
    const auto lead = coords.find(image.begin()->first);
    if (lead == coords.end())
      throw std::invalid_argument("symbol is not an exact eigenvector of the tensor Casimir");
    alpha = image.begin()->second / lead->second;
  }
  {
    Vec check = image;
    axpy(check, -alpha, coords);
    if (!check.empty())
      throw std::invalid_argument("symbol is not an exact eigenvector of the tensor Casimir");
  }

  const Vec hat = solve_hat(ed, ncm.mat, coords, k0, alpha);
  Poly out(spec.d);
  for (const auto& [i, c] : hat) out.add_term(ed.basis.keys[static_cast<size_t>(i)], c);
  return out;
}

QuantizationMap quantization_matrix(const AlgebraSpec& spec, const Rat& lambda, const Rat& mu,
                                    int K, int M) {
  const CriticalReport crit = is_critical(lambda, mu, spec, K);
  if (crit.critical) {
    std::string msg = "shift " + rat_str(crit.delta) + " is critical at horizon " +
                      std::to_string(K) + "; witnesses:";
    for (const auto& w : crit.witnesses) msg += " " + witness_str(w);
    throw CriticalityError(msg);
  }
  const EigenDecomposition ed = eigen_decompose(spec, mu - lambda, K, M);
  const OperatorMatrix ncm = n_c_matrix(spec, lambda, mu, K, M);
  const int N = static_cast<int>(ed.basis.size());

  // Columns of each projector, so eigencomponents of basis vectors are cheap.
  std::vector<std::vector<Vec>> proj_cols(ed.pairs.size());
  for (size_t p = 0; p < ed.pairs.size(); ++p) {
    proj_cols[p].resize(static_cast<size_t>(N));
    const SpMat& proj = ed.pairs[p].projector;
    for (int i = 0; i < N; ++i)
      for (const auto& [j, c] : proj.row(i)) proj_cols[p][static_cast<size_t>(j)][i] = c;
  }

  QuantizationMap qm;
  qm.q.spec = spec;
  qm.q.lambda = lambda;
  qm.q.mu = mu;
  qm.q.K = K;
  qm.q.M = M;
  qm.q.basis = ed.basis;
  qm.q.mat = SpMat(N, N);
  for (int j = 0; j < N; ++j) {
    const int kj = Poly::key_xideg(ed.basis.keys[static_cast<size_t>(j)], ed.basis.d);
    Vec total;
    for (size_t p = 0; p < ed.pairs.size(); ++p) {
      const Vec& w = proj_cols[p][static_cast<size_t>(j)];
      if (w.empty()) continue;
      const Vec hat = solve_hat(ed, ncm.mat, w, kj, ed.pairs[p].value);
      axpy(total, 1, hat);
    }
    for (const auto& [i, c] : total) qm.q.mat.add(i, j, c);
  }

  // Unit triangular in the xi-degree filtration: identity on each diagonal
  // block, zero at or above the block diagonal elsewhere, so det = 1.
  for (int i = 0; i < N; ++i) {
    const int ki = Poly::key_xideg(ed.basis.keys[static_cast<size_t>(i)], ed.basis.d);
    for (const auto& [j, c] : qm.q.mat.row(i)) {
      const int kj = Poly::key_xideg(ed.basis.keys[static_cast<size_t>(j)], ed.basis.d);
      const bool ok = (i == j && c == 1) || ki < kj;
      if (!ok)
        throw InvariantError("quantization matrix is not unit triangular at entry (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    if (qm.q.mat.get(i, i) != 1)
      throw InvariantError("quantization matrix diagonal is not the identity at index " +
                           std::to_string(i));
  }
  return qm;
}

EquivarianceReport verify_equivariance(const QuantizationMap& qm) {
  const AlgebraSpec& spec = qm.q.spec;
  const SymBasis& basis = qm.q.basis;
  const Rat delta = qm.q.mu - qm.q.lambda;
  const int N = static_cast<int>(basis.size());

  std::vector<Vec> q_cols(static_cast<size_t>(N));
  for (int i = 0; i < N; ++i)
    for (const auto& [j, c] : qm.q.mat.row(i)) q_cols[static_cast<size_t>(j)][i] = c;
  auto apply_q = [&](const Poly& P) {
    Vec out;
    for (const auto& [key, c] : P.terms()) {
      const int j = basis.find(key);
      if (j < 0)
        throw TruncationError("equivariance check left the truncation at monomial " +
                              Poly::key_str(key, basis.d));
      axpy(out, c, q_cols[static_cast<size_t>(j)]);
    }
    Poly p(basis.d);
    for (const auto& [i, c] : out) p.add_term(basis.keys[static_cast<size_t>(i)], c);
    return p;
  };

  const auto fields = g_basis(spec);
  const auto labels = g_basis_labels(spec);
  std::vector<PolyVectorField> realized;
  realized.reserve(fields.size());
  for (const auto& x : fields) realized.push_back(realize_vector_field(x, spec));

  EquivarianceReport report;
  for (int j = 0; j < N; ++j) {
    const Poly::Key& key = basis.keys[static_cast<size_t>(j)];
    if (Poly::key_xdeg(key, basis.d) > qm.q.M - 1) continue;
    Poly P(basis.d);
    P.add_term(key, 1);
    const Poly qp = apply_q(P);
    for (size_t f = 0; f < realized.size(); ++f) {
      const Poly lhs = lie_diffop(realized[f], qp, qm.q.lambda, qm.q.mu);
      const Poly rhs = apply_q(lie_tensor(realized[f], P, delta));
      ++report.tested;
      if (!(lhs == rhs))
        report.violations.push_back("X=" + labels[f] + " P=" + Poly::key_str(key, basis.d));
    }
  }
  return report;
}

GammaTree gamma_tree(const Ferrers& root, int k, const AlgebraSpec& spec, const Rat& lambda,
                     const Rat& mu) {
  const auto adm = admissible_diagrams(spec, k);
  if (std::find(adm.begin(), adm.end(), root) == adm.end())
    throw std::invalid_argument("root diagram is not admissible at degree " + std::to_string(k));
  const Rat delta = mu - lambda;

  GammaTree tree;
  tree.root = root;
  tree.k = k;
  tree.lambda = lambda;
  tree.mu = mu;
  tree.basis = SymBasis::build(spec.d, k, 0);
  const SymBasis& basis = tree.basis;
  const int N = static_cast<int>(basis.size());

  // Fiber slices per xi-degree and their Casimir eigenprojectors.
  OperatorMatrix cm = casimir_matrix(Rep::TensorFields, spec, 0, delta, k, 0);
  std::vector<std::vector<int>> slice(static_cast<size_t>(k) + 1);
  for (int i = 0; i < N; ++i)
    slice[static_cast<size_t>(Poly::key_xideg(basis.keys[static_cast<size_t>(i)], basis.d))]
        .push_back(i);
  std::vector<MatQ> fiber(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    const auto& idx = slice[static_cast<size_t>(j)];
    MatQ F(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) F(static_cast<int>(a), static_cast<int>(b)) =
          cm.mat.get(idx[a], idx[b]);
    fiber[static_cast<size_t>(j)] = std::move(F);
  }
  // Per degree: diagram -> eigenvalue; collisions make projectors unusable.
  auto diagram_projector = [&](int j, const Ferrers& diag) {
    const auto diagrams = admissible_diagrams(spec, j);
    std::map<Rat, int> value_count;
    Rat target;
    std::vector<Rat> values;
    for (const Ferrers& d2 : diagrams) {
      const Rat v = eigenvalue_general(d2, spec, j).eval(delta);
      ++value_count[v];
      values.push_back(v);
      if (d2 == diag) target = v;
    }
    if (value_count[target] > 1)
      throw InvariantError("two diagrams of degree " + std::to_string(j) +
                           " share the Casimir eigenvalue " + rat_str(target) +
                           "; the fiber projector cannot separate them");
    const MatQ& F = fiber[static_cast<size_t>(j)];
    MatQ proj = MatQ::identity(F.rows());
    Rat denom = 1;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (const Rat& v : values) {
      if (v == target) continue;
      MatQ shifted = F;
      for (int i = 0; i < F.rows(); ++i) shifted(i, i) -= v;
      proj = proj * shifted;
      denom *= target - v;
    }
    return (Rat(1) / denom) * proj;
  };

  // Root basis: image of the root's projector at xi-degree k.
  {
    const MatQ proj = diagram_projector(k, root);
    MatQ b = column_space(proj);
    if (Int(b.cols()) != dim_irrep(root, spec.n))
      throw InvariantError("root eigenspace dimension " + std::to_string(b.cols()) +
                           " does not match the diagram dimension");
    // Lift to full fiber coordinates.
    MatQ lifted(N, b.cols());
    const auto& idx = slice[static_cast<size_t>(k)];
    for (size_t a = 0; a < idx.size(); ++a)
      for (int j = 0; j < b.cols(); ++j) lifted(idx[a], j) = b(static_cast<int>(a), j);
    tree.levels.push_back({k, std::move(lifted), {root}});
  }

  // Cocycle matrices on the fiber basis.
  const DualBasisPackage dual = dual_bases(spec);
  std::vector<MatQ> gammas;
  for (int i = 0; i < spec.d; ++i) {
    const PolyVectorField f = realize_vector_field(dual.eps[static_cast<size_t>(i)], spec);
    gammas.push_back(
        matrix_of_operator(basis, [&](const Poly& P) { return gamma_op(f, P, lambda, mu); })
            .to_dense());
  }
  // Fiber matrices of the traceless linear fields, for the submodule check.
  std::vector<MatQ> h_mats;
  for (const GradedElement& h : h0_basis(spec)) {
    const PolyVectorField f = realize_vector_field(h, spec);
    h_mats.push_back(
        matrix_of_operator(basis, [&](const Poly& P) { return lie_tensor(f, P, delta); })
            .to_dense());
  }

  while (true) {
    const GammaTreeLevel& prev = tree.levels.back();
    if (prev.xi_degree == 0) break;
    MatQ stacked(N, prev.basis.cols() * spec.d);
    for (int g = 0; g < spec.d; ++g) {
      const MatQ img = gammas[static_cast<size_t>(g)] * prev.basis;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < prev.basis.cols(); ++j)
          stacked(i, g * prev.basis.cols() + j) = img(i, j);
    }
    MatQ next = column_space(stacked);
    if (next.cols() == 0) break;

    GammaTreeLevel level;
    level.xi_degree = prev.xi_degree - 1;
    level.basis = std::move(next);
    // Every column must be homogeneous at the expected degree.
    for (int j = 0; j < level.basis.cols(); ++j)
      for (int i = 0; i < N; ++i)
        if (level.basis(i, j) != 0 &&
            Poly::key_xideg(basis.keys[static_cast<size_t>(i)], basis.d) != level.xi_degree)
          throw InvariantError("gamma image is not homogeneous of the expected xi-degree");
    // h0-submodule check.
    const int r = level.basis.rank();
    for (const MatQ& hm : h_mats)
      if (hcat(level.basis, hm * level.basis).rank() != r)
        throw InvariantError("gamma-tree level is not closed under the traceless linear action");
    // Content via the isotypic projectors of the slice.
    const auto& idx = slice[static_cast<size_t>(level.xi_degree)];
    MatQ restricted(static_cast<int>(idx.size()), level.basis.cols());
    for (size_t a = 0; a < idx.size(); ++a)
      for (int j = 0; j < level.basis.cols(); ++j)
        restricted(static_cast<int>(a), j) = level.basis(idx[a], j);
    for (const Ferrers& diag : admissible_diagrams(spec, level.xi_degree)) {
      const MatQ proj = diagram_projector(level.xi_degree, diag);
      if (!(proj * restricted).is_zero()) level.content.push_back(diag);
    }
    tree.levels.push_back(std::move(level));
  }
  return tree;
}

}  // namespace lieq
