#pragma once

#include <lieq/rational.hpp>

#include <map>
#include <vector>

namespace lieq {

/// Dense matrix of exact rationals, used for the small block computations
/// (Gram matrices, fiber blocks, projector verification).
class MatQ {
 public:
  MatQ() : nr_(0), nc_(0) {}
  MatQ(int nr, int nc) : nr_(nr), nc_(nc), a_(static_cast<size_t>(nr) * nc) {}

  static MatQ identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return nr_; }
  int cols() const { return nc_; }
  Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * nc_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * nc_ + j]; }

  bool operator==(const MatQ& o) const { return nr_ == o.nr_ && nc_ == o.nc_ && a_ == o.a_; }
  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  MatQ operator*(const MatQ& o) const;
  MatQ operator+(const MatQ& o) const;
  MatQ operator-(const MatQ& o) const;
  MatQ transpose() const;
  friend MatQ operator*(const Rat& c, const MatQ& m);

  int rank() const;
  Rat det() const;
  MatQ inverse() const;
  /// Solves A X = B; throws std::domain_error when A is singular.
  static MatQ solve(const MatQ& A, const MatQ& B);

 private:
  int nr_, nc_;
  std::vector<Rat> a_;
};

/// Sparse matrix of exact rationals with row maps. Operator matrices on
/// truncated symbol spaces live here; products of block-structured matrices
/// stay within their blocks at no extra cost.
class SpMat {
 public:
  using Row = std::map<int, Rat>;

  SpMat() : nr_(0), nc_(0) {}
  SpMat(int nr, int nc) : nr_(nr), nc_(nc), rows_(static_cast<size_t>(nr)) {}

  static SpMat identity(int n) {
    SpMat m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[i][i] = 1;
    return m;
  }

  int rows() const { return nr_; }
  int cols() const { return nc_; }
  const Row& row(int i) const { return rows_[i]; }

  void add(int i, int j, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = rows_[i].emplace(j, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) rows_[i].erase(it);
    }
  }
  void set(int i, int j, const Rat& c) {
    if (c == 0)
      rows_[i].erase(j);
    else
      rows_[i][j] = c;
  }
  Rat get(int i, int j) const {
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? Rat(0) : it->second;
  }

  size_t nnz() const {
    size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool is_zero() const { return nnz() == 0; }
  bool operator==(const SpMat& o) const {
    return nr_ == o.nr_ && nc_ == o.nc_ && rows_ == o.rows_;
  }

  SpMat operator*(const SpMat& o) const;
  SpMat operator+(const SpMat& o) const;
  SpMat operator-(const SpMat& o) const;
  friend SpMat operator*(const Rat& c, const SpMat& m);
  /// A + c*I
  SpMat shifted(const Rat& c) const;

  Rat trace() const;
  std::map<int, Rat> apply(const std::map<int, Rat>& v) const;

  /// Exact rank: splits the nonzero pattern into connected components and
  /// eliminates each dense block separately, so block-diagonal matrices cost
  /// only the sum of their blocks.
  int rank() const;

  MatQ to_dense() const;

 private:
  int nr_, nc_;
  std::vector<Row> rows_;
};

/// Columns of a side by side with columns of b.
MatQ hcat(const MatQ& a, const MatQ& b);

/// A basis of the column space: the pivot columns of m, in order.
MatQ column_space(const MatQ& m);

}  // namespace lieq
