#pragma once

#include <lieq/algebra.hpp>
#include <lieq/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace lieq {

/// Ferrers diagram: non-increasing positive row lengths. The empty diagram
/// labels the trivial representation.
class Ferrers {
 public:
  Ferrers() = default;
  explicit Ferrers(std::vector<long> rows);

  /// Parses "6,4,2"; "" and "0" give the empty diagram.
  static Ferrers parse(const std::string& text);
  std::string str() const;  // "6,4,2"; empty diagram -> ""

  const std::vector<long>& rows() const { return rows_; }
  size_t length() const { return rows_.size(); }
  long row(size_t i) const { return i < rows_.size() ? rows_[i] : 0; }
  long boxes() const;
  bool empty() const { return rows_.empty(); }

  bool operator==(const Ferrers& o) const { return rows_ == o.rows_; }
  bool operator!=(const Ferrers& o) const { return rows_ != o.rows_; }
  bool operator<(const Ferrers& o) const { return rows_ < o.rows_; }

 private:
  std::vector<long> rows_;
};

/// Strict dominance: a <= b in every row (padded with zeros) and a != b.
bool dominance_lt(const Ferrers& a, const Ferrers& b);

/// gl(n) label to sl(n) label: removes full height-n columns. Throws
/// std::invalid_argument when the diagram has more than n rows.
Ferrers normalize(const Ferrers& diag, int n);

/// Dual (contragredient) sl(n) label: the complement of the diagram in the
/// n x first-row rectangle, read in reverse, then normalized.
Ferrers dual_diagram(const Ferrers& diag, int n);

/// Dimension of the irreducible gl(n) module with this highest weight, by the
/// hook content formula prod (n + col - row) / hook over the boxes.
Int dim_irrep(const Ferrers& diag, int n);

/// Diagrams of the irreducible summands of the degree-k symmetric power of
/// the degree -1 module, in canonical (sorted) order. Orthogonal family:
/// 2k boxes, rows paired k_1 = k_2, k_3 = k_4, ..., last row zero for odd n.
/// Symplectic family: 2k boxes, all row lengths even.
std::vector<Ferrers> admissible_diagrams(const AlgebraSpec& spec, int k);

/// Littlewood-Richardson product of sl(n) labels: multiset of normalized
/// diagrams with multiplicities, results taller than n discarded.
std::map<Ferrers, long> lr_tensor(const Ferrers& a, const Ferrers& b, int n);

/// Tree of lower-degree admissible diagrams reachable from the root by
/// repeated tensoring with the dual of the degree -1 diagram. Level l holds
/// admissible diagrams of degree k - l; level 0 is the root alone.
struct TildeTree {
  Ferrers root;
  int k = 0;
  std::vector<std::vector<Ferrers>> levels;
};

/// Root must be admissible of degree k. Every diagram in levels >= 1 is
/// strictly dominated by the root.
TildeTree tilde_tree(const Ferrers& root, int k, const AlgebraSpec& spec);

}  // namespace lieq
