#include <lieq/algebra.hpp>
#include <lieq/errors.hpp>

#include <map>

namespace lieq {

namespace {

int sym_sign(const AlgebraSpec& spec) {
  return spec.family == Family::Orthogonal ? -1 : 1;
}

void check_block_symmetry(const MatQ& m, const AlgebraSpec& spec, const char* which) {
  const int s = sym_sign(spec);
  for (int i = 0; i < spec.n; ++i)
    for (int j = i; j < spec.n; ++j)
      if (m(j, i) != Rat(s) * m(i, j))
        throw InvariantError(std::string(which) + " block breaks the family symmetry");
}

}  // namespace

AlgebraSpec make_algebra(Family family, int n) {
  if (n < 2) throw std::invalid_argument("algebra requires n >= 2");
  const int d = family == Family::Orthogonal ? n * (n - 1) / 2 : n * (n + 1) / 2;
  return {family, n, d, 2 * d + n * n, n * n - 1};
}

GradedElement ge_zero(const AlgebraSpec& spec) {
  return {MatQ(spec.n, spec.n), MatQ(spec.n, spec.n), MatQ(spec.n, spec.n)};
}

GradedElement ge_add(const GradedElement& x, const GradedElement& y) {
  return {x.a + y.a, x.A + y.A, x.w + y.w};
}

GradedElement ge_scale(const Rat& c, const GradedElement& x) {
  return {c * x.a, c * x.A, c * x.w};
}

bool ge_equal(const GradedElement& x, const GradedElement& y) {
  return x.a == y.a && x.A == y.A && x.w == y.w;
}

MatQ embed(const GradedElement& x, const AlgebraSpec& spec) {
  const int n = spec.n;
  MatQ m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = x.A(i, j);
      m(i, n + j) = x.a(i, j);
      m(n + i, j) = x.w(i, j);
      m(n + i, n + j) = -x.A(j, i);
    }
  return m;
}

GradedElement split_blocks(const MatQ& m, const AlgebraSpec& spec) {
  const int n = spec.n;
  if (m.rows() != 2 * n || m.cols() != 2 * n)
    throw InvariantError("split_blocks expects a 2n x 2n matrix");
  GradedElement x = ge_zero(spec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      x.A(i, j) = m(i, j);
      x.a(i, j) = m(i, n + j);
      x.w(i, j) = m(n + i, j);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(n + i, n + j) != -x.A(j, i))
        throw InvariantError("lower right block is not minus the transpose");
  check_block_symmetry(x.a, spec, "degree -1");
  check_block_symmetry(x.w, spec, "degree +1");
  return x;
}

GradedElement bracket(const GradedElement& x, const GradedElement& y, const AlgebraSpec& spec) {
  const MatQ mx = embed(x, spec), my = embed(y, spec);
  return split_blocks(mx * my - my * mx, spec);
}

GradedElement euler(const AlgebraSpec& spec) {
  GradedElement e = ge_zero(spec);
  for (int i = 0; i < spec.n; ++i) e.A(i, i) = Rat(-1, 2);
  return e;
}

const std::vector<std::pair<int, int>>& gm1_coords(const AlgebraSpec& spec) {
  static std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cache;
  auto key = std::make_pair(static_cast<int>(spec.family), spec.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<int, int>> coords;
  for (int i = 0; i < spec.n; ++i)
    for (int j = (spec.family == Family::Orthogonal ? i + 1 : i); j < spec.n; ++j)
      coords.emplace_back(i, j);
  return cache.emplace(key, std::move(coords)).first->second;
}

std::vector<MatQ> gm1_matrices(const AlgebraSpec& spec) {
  std::vector<MatQ> mats;
  const int s = sym_sign(spec);
  for (auto [i, j] : gm1_coords(spec)) {
    MatQ m(spec.n, spec.n);
    m(i, j) = 1;
    if (j != i) m(j, i) = s;
    mats.push_back(std::move(m));
  }
  return mats;
}

std::vector<GradedElement> gm1_basis(const AlgebraSpec& spec) {
  std::vector<GradedElement> basis;
  for (auto& m : gm1_matrices(spec)) {
    GradedElement x = ge_zero(spec);
    x.a = m;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<GradedElement> g1_basis(const AlgebraSpec& spec) {
  std::vector<GradedElement> basis;
  for (auto& m : gm1_matrices(spec)) {
    GradedElement x = ge_zero(spec);
    x.w = m;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<GradedElement> g0_basis(const AlgebraSpec& spec) {
  std::vector<GradedElement> basis;
  for (int p = 0; p < spec.n; ++p)
    for (int q = 0; q < spec.n; ++q) {
      GradedElement x = ge_zero(spec);
      x.A(p, q) = 1;
      basis.push_back(std::move(x));
    }
  return basis;
}

std::vector<GradedElement> h0_basis(const AlgebraSpec& spec) {
  std::vector<GradedElement> basis;
  for (int p = 0; p < spec.n; ++p)
    for (int q = 0; q < spec.n; ++q) {
      if (p == q) continue;
      GradedElement x = ge_zero(spec);
      x.A(p, q) = 1;
      basis.push_back(std::move(x));
    }
  for (int i = 0; i + 1 < spec.n; ++i) {
    GradedElement x = ge_zero(spec);
    x.A(i, i) = 1;
    x.A(i + 1, i + 1) = -1;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<GradedElement> g_basis(const AlgebraSpec& spec) {
  std::vector<GradedElement> basis = gm1_basis(spec);
  for (auto& x : g0_basis(spec)) basis.push_back(std::move(x));
  for (auto& x : g1_basis(spec)) basis.push_back(std::move(x));
  return basis;
}

std::vector<std::string> g_basis_labels(const AlgebraSpec& spec) {
  std::vector<std::string> labels;
  for (int i = 0; i < spec.d; ++i) labels.push_back("e" + std::to_string(i + 1));
  for (int p = 0; p < spec.n; ++p)
    for (int q = 0; q < spec.n; ++q)
      labels.push_back("A" + std::to_string(p + 1) + std::to_string(q + 1));
  for (int i = 0; i < spec.d; ++i) labels.push_back("eps" + std::to_string(i + 1));
  return labels;
}

std::vector<Rat> flatten_gm1(const MatQ& a, const AlgebraSpec& spec) {
  std::vector<Rat> v;
  v.reserve(spec.d);
  for (auto [i, j] : gm1_coords(spec)) v.push_back(a(i, j));
  return v;
}

std::vector<Rat> flatten_g(const GradedElement& x, const AlgebraSpec& spec) {
  std::vector<Rat> v = flatten_gm1(x.a, spec);
  v.reserve(spec.dim_g);
  for (int p = 0; p < spec.n; ++p)
    for (int q = 0; q < spec.n; ++q) v.push_back(x.A(p, q));
  for (auto& c : flatten_gm1(x.w, spec)) v.push_back(std::move(c));
  return v;
}

KillingTable::KillingTable(const AlgebraSpec& spec) : spec_(spec) {
  const auto basis = g_basis(spec);
  const int m = spec.dim_g;
  ad_.reserve(m);
  for (int i = 0; i < m; ++i) {
    SpMat ad(m, m);
    for (int j = 0; j < m; ++j) {
      auto col = flatten_g(bracket(basis[i], basis[j], spec), spec);
      for (int r = 0; r < m; ++r) ad.add(r, j, col[r]);
    }
    ad_.push_back(std::move(ad));
  }
  gram_ = MatQ(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Rat t = 0;
      for (int k = 0; k < m; ++k)
        for (const auto& [l, v] : ad_[i].row(k)) t += v * ad_[j].get(l, k);
      gram_(i, j) = t;
      gram_(j, i) = t;
    }
}

Rat KillingTable::form(const GradedElement& x, const GradedElement& y) const {
  const auto vx = flatten_g(x, spec_), vy = flatten_g(y, spec_);
  Rat t = 0;
  for (int i = 0; i < spec_.dim_g; ++i) {
    if (vx[i] == 0) continue;
    Rat s = 0;
    for (int j = 0; j < spec_.dim_g; ++j)
      if (vy[j] != 0) s += gram_(i, j) * vy[j];
    t += vx[i] * s;
  }
  return t;
}

namespace {

const KillingTable& killing_table(const AlgebraSpec& spec) {
  static std::map<std::pair<int, int>, KillingTable> cache;
  auto key = std::make_pair(static_cast<int>(spec.family), spec.n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, KillingTable(spec)).first;
  return it->second;
}

}  // namespace

Rat killing_form(const GradedElement& x, const GradedElement& y, const AlgebraSpec& spec) {
  return killing_table(spec).form(x, y);
}

DualBasisPackage dual_bases(const AlgebraSpec& spec) {
  return dual_bases(spec, gm1_basis(spec), h0_basis(spec));
}

DualBasisPackage dual_bases(const AlgebraSpec& spec, const std::vector<GradedElement>& e_basis,
                            const std::vector<GradedElement>& h_basis) {
  const auto& table = killing_table(spec);
  const int d = spec.d, nh = spec.dim_h0;
  if (static_cast<int>(e_basis.size()) != d || static_cast<int>(h_basis.size()) != nh)
    throw std::invalid_argument("dual_bases: basis sizes do not match the algebra");

  DualBasisPackage pkg;
  pkg.e = e_basis;
  pkg.h = h_basis;
  pkg.euler = euler(spec);

  const Rat bee = table.form(pkg.euler, pkg.euler);
  if (bee != Rat(2 * d)) throw InvariantError("killing form of the grading element is not 2d");
  pkg.euler_dual = ge_scale(Rat(1, 2 * d), pkg.euler);

  const auto g1b = g1_basis(spec);
  MatQ g1gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g1gram(i, j) = table.form(pkg.e[i], g1b[j]);
  MatQ c1 = MatQ::solve(g1gram, MatQ::identity(d));
  for (int i = 0; i < d; ++i) {
    GradedElement eps = ge_zero(spec);
    for (int j = 0; j < d; ++j) eps = ge_add(eps, ge_scale(c1(j, i), g1b[j]));
    pkg.eps.push_back(std::move(eps));
  }

  MatQ hgram(nh, nh);
  for (int i = 0; i < nh; ++i)
    for (int j = 0; j < nh; ++j) hgram(i, j) = table.form(pkg.h[i], pkg.h[j]);
  MatQ ch = MatQ::solve(hgram, MatQ::identity(nh));
  for (int i = 0; i < nh; ++i) {
    GradedElement hs = ge_zero(spec);
    for (int j = 0; j < nh; ++j) hs = ge_add(hs, ge_scale(ch(j, i), pkg.h[j]));
    pkg.hstar.push_back(std::move(hs));
  }

  // Full duality audit: the two ordered lists must pair to the identity.
  std::vector<const GradedElement*> lhs, rhs;
  for (const auto& x : pkg.e) lhs.push_back(&x);
  lhs.push_back(&pkg.euler);
  for (const auto& x : pkg.h) lhs.push_back(&x);
  for (const auto& x : pkg.eps) lhs.push_back(&x);
  for (const auto& x : pkg.eps) rhs.push_back(&x);
  rhs.push_back(&pkg.euler_dual);
  for (const auto& x : pkg.hstar) rhs.push_back(&x);
  for (const auto& x : pkg.e) rhs.push_back(&x);
  for (size_t i = 0; i < lhs.size(); ++i)
    for (size_t j = 0; j < rhs.size(); ++j)
      if (table.form(*lhs[i], *rhs[j]) != Rat(i == j ? 1 : 0))
        throw InvariantError("dual basis pairing is not the identity");

  GradedElement s = ge_zero(spec);
  for (int i = 0; i < d; ++i) s = ge_add(s, bracket(pkg.e[i], pkg.eps[i], spec));
  if (!ge_equal(s, ge_scale(Rat(-1, 2), pkg.euler)))
    throw InvariantError("sum of [e_i, eps_i] is not -euler/2");

  return pkg;
}

Poly PolyVectorField::divergence() const {
  Poly s(d);
  for (int i = 0; i < d; ++i) s += comp[i].dx(i);
  return s;
}

PolyVectorField realize_vector_field(const GradedElement& x, const AlgebraSpec& spec) {
  const int n = spec.n, d = spec.d;
  const int s = sym_sign(spec);
  const auto& coords = gm1_coords(spec);

  // Symbolic degree -1 matrix variable.
  std::vector<std::vector<Poly>> X(n, std::vector<Poly>(n, Poly(d)));
  for (int c = 0; c < d; ++c) {
    auto [i, j] = coords[c];
    X[i][j] = Poly::x(d, c);
    if (j != i) X[j][i] = Rat(s) * X[i][j];
  }

  auto mat_mul = [&](const std::vector<std::vector<Poly>>& L,
                     const std::vector<std::vector<Poly>>& R) {
    std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n, Poly(d)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (L[i][k].is_zero()) continue;
        for (int j = 0; j < n; ++j)
          if (!R[k][j].is_zero()) out[i][j] += L[i][k] * R[k][j];
      }
    return out;
  };
  auto const_mat = [&](const MatQ& m) {
    std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n, Poly(d)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m(i, j) != 0) out[i][j] = Poly::constant(d, m(i, j));
    return out;
  };

  // F = a - A X - X A^T - X w X
  auto F = const_mat(x.a);
  auto AX = mat_mul(const_mat(x.A), X);
  MatQ At = x.A.transpose();
  auto XAt = mat_mul(X, const_mat(At));
  auto XwX = mat_mul(X, mat_mul(const_mat(x.w), X));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      F[i][j] -= AX[i][j];
      F[i][j] -= XAt[i][j];
      F[i][j] -= XwX[i][j];
    }

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!(F[j][i] - Rat(s) * F[i][j]).is_zero())
        throw InvariantError("realized field breaks the family symmetry");

  PolyVectorField field;
  field.d = d;
  for (auto [i, j] : coords) field.comp.push_back(F[i][j]);
  return field;
}

}  // namespace lieq
