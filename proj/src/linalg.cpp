#include <lieq/linalg.hpp>

#include <numeric>
#include <stdexcept>

namespace lieq {

MatQ MatQ::operator*(const MatQ& o) const {
  if (nc_ != o.nr_) throw std::logic_error("matrix product shape mismatch");
  MatQ r(nr_, o.nc_);
  for (int i = 0; i < nr_; ++i)
    for (int k = 0; k < nc_; ++k) {
      const Rat& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.nc_; ++j) {
        const Rat& bkj = o(k, j);
        if (bkj != 0) r(i, j) += aik * bkj;
      }
    }
  return r;
}

MatQ MatQ::operator+(const MatQ& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw std::logic_error("matrix sum shape mismatch");
  MatQ r(nr_, nc_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw std::logic_error("matrix diff shape mismatch");
  MatQ r(nr_, nc_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

MatQ MatQ::transpose() const {
  MatQ r(nc_, nr_);
  for (int i = 0; i < nr_; ++i)
    for (int j = 0; j < nc_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

MatQ operator*(const Rat& c, const MatQ& m) {
  MatQ r(m.nr_, m.nc_);
  for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
  return r;
}

namespace {

/// Row-echelon elimination in place; returns (rank, det sign swaps) and,
/// when wanted, applies the same row operations to an augmented block.
int eliminate(MatQ& m, MatQ* aug, Rat* det) {
  int nr = m.rows(), nc = m.cols();
  if (det) *det = 1;
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int piv = -1;
    for (int i = rank; i < nr; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int j = 0; j < nc; ++j) std::swap(m(piv, j), m(rank, j));
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) std::swap((*aug)(piv, j), (*aug)(rank, j));
      if (det) *det = -*det;
    }
    const Rat p = m(rank, col);
    if (det) *det *= p;
    for (int i = 0; i < nr; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      Rat f = m(i, col) / p;
      for (int j = col; j < nc; ++j) m(i, j) -= f * m(rank, j);
      if (aug)
        for (int j = 0; j < aug->cols(); ++j) (*aug)(i, j) -= f * (*aug)(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int MatQ::rank() const {
  MatQ m = *this;
  return eliminate(m, nullptr, nullptr);
}

Rat MatQ::det() const {
  if (nr_ != nc_) throw std::logic_error("determinant of non-square matrix");
  MatQ m = *this;
  Rat d;
  int rank = eliminate(m, nullptr, &d);
  return rank == nr_ ? d : Rat(0);
}

MatQ MatQ::solve(const MatQ& A, const MatQ& B) {
  if (A.nr_ != A.nc_ || A.nr_ != B.nr_) throw std::logic_error("solve shape mismatch");
  MatQ m = A, aug = B;
  int rank = eliminate(m, &aug, nullptr);
  if (rank != A.nr_) throw std::domain_error("singular linear system");
  // m is now diagonal up to column permutation; since it is square and of
  // full rank the pivot of row i sits at column i.
  MatQ x(A.nc_, B.nc_);
  for (int i = 0; i < A.nr_; ++i)
    for (int j = 0; j < B.nc_; ++j) x(i, j) = aug(i, j) / m(i, i);
  return x;
}

MatQ MatQ::inverse() const { return solve(*this, identity(nr_)); }

MatQ hcat(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows()) throw std::logic_error("hcat row mismatch");
  MatQ m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

MatQ column_space(const MatQ& m) {
  MatQ w = m;
  std::vector<int> pivots;
  const int nr = w.rows(), nc = w.cols();
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int piv = -1;
    for (int i = rank; i < nr; ++i)
      if (w(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < nc; ++j) std::swap(w(piv, j), w(rank, j));
    const Rat p = w(rank, col);
    for (int i = rank + 1; i < nr; ++i) {
      if (w(i, col) == 0) continue;
      Rat f = w(i, col) / p;
      for (int j = col; j < nc; ++j) w(i, j) -= f * w(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  MatQ out(nr, static_cast<int>(pivots.size()));
  for (int j = 0; j < static_cast<int>(pivots.size()); ++j)
    for (int i = 0; i < nr; ++i) out(i, j) = m(i, pivots[static_cast<size_t>(j)]);
  return out;
}

SpMat SpMat::operator*(const SpMat& o) const {
  if (nc_ != o.nr_) throw std::logic_error("matrix product shape mismatch");
  SpMat r(nr_, o.nc_);
  for (int i = 0; i < nr_; ++i) {
    auto& out = r.rows_[i];
    for (const auto& [k, aik] : rows_[i])
      for (const auto& [j, bkj] : o.rows_[k]) {
        auto [it, fresh] = out.emplace(j, aik * bkj);
        if (!fresh) it->second += aik * bkj;
      }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return r;
}

SpMat SpMat::operator+(const SpMat& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw std::logic_error("matrix sum shape mismatch");
  SpMat r = *this;
  for (int i = 0; i < nr_; ++i)
    for (const auto& [j, c] : o.rows_[i]) r.add(i, j, c);
  return r;
}

SpMat SpMat::operator-(const SpMat& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw std::logic_error("matrix diff shape mismatch");
  SpMat r = *this;
  for (int i = 0; i < nr_; ++i)
    for (const auto& [j, c] : o.rows_[i]) r.add(i, j, -c);
  return r;
}

SpMat operator*(const Rat& c, const SpMat& m) {
  SpMat r(m.nr_, m.nc_);
  if (c == 0) return r;
  for (int i = 0; i < m.nr_; ++i)
    for (const auto& [j, v] : m.rows_[i]) r.rows_[i].emplace(j, c * v);
  return r;
}

SpMat SpMat::shifted(const Rat& c) const {
  SpMat r = *this;
  for (int i = 0; i < std::min(nr_, nc_); ++i) r.add(i, i, c);
  return r;
}

Rat SpMat::trace() const {
  Rat t = 0;
  for (int i = 0; i < std::min(nr_, nc_); ++i) t += get(i, i);
  return t;
}

std::map<int, Rat> SpMat::apply(const std::map<int, Rat>& v) const {
  std::map<int, Rat> r;
  for (int i = 0; i < nr_; ++i) {
    Rat s = 0;
    for (const auto& [j, c] : rows_[i]) {
      auto it = v.find(j);
      if (it != v.end()) s += c * it->second;
    }
    if (s != 0) r.emplace(i, s);
  }
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int SpMat::rank() const {
  // Bipartite union-find: node i is row i, node nr_+j is column j.
  UnionFind uf(nr_ + nc_);
  for (int i = 0; i < nr_; ++i)
    for (const auto& [j, c] : rows_[i]) uf.unite(i, nr_ + j);

  std::map<int, std::vector<int>> comp_rows;
  for (int i = 0; i < nr_; ++i)
    if (!rows_[i].empty()) comp_rows[uf.find(i)].push_back(i);

  int rank = 0;
  for (auto& [root, rws] : comp_rows) {
    std::map<int, int> colidx;
    for (int i : rws)
      for (const auto& [j, c] : rows_[i]) colidx.emplace(j, 0);
    int ci = 0;
    for (auto& [j, idx] : colidx) idx = ci++;
    MatQ block(static_cast<int>(rws.size()), ci);
    for (size_t bi = 0; bi < rws.size(); ++bi)
      for (const auto& [j, c] : rows_[rws[bi]]) block(static_cast<int>(bi), colidx[j]) = c;
    rank += block.rank();
  }
  return rank;
}

MatQ SpMat::to_dense() const {
  MatQ m(nr_, nc_);
  for (int i = 0; i < nr_; ++i)
    for (const auto& [j, c] : rows_[i]) m(i, j) = c;
  return m;
}

}  // namespace lieq
