#include <lieq/errors.hpp>
#include <lieq/ferrers.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace lieq {

Ferrers::Ferrers(std::vector<long> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("diagram rows must be non-increasing");
  }
}

Ferrers Ferrers::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "0") return Ferrers();
  std::vector<long> rows;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad diagram literal: " + text);
    rows.push_back(std::stol(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Ferrers(rows);
}

std::string Ferrers::str() const {
  std::string s;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return s;
}

long Ferrers::boxes() const {
  long b = 0;
  for (long r : rows_) b += r;
  return b;
}

bool dominance_lt(const Ferrers& a, const Ferrers& b) {
  const size_t len = std::max(a.length(), b.length());
  bool strict = false;
  for (size_t i = 0; i < len; ++i) {
    if (a.row(i) > b.row(i)) return false;
    if (a.row(i) < b.row(i)) strict = true;
  }
  return strict;
}

Ferrers normalize(const Ferrers& diag, int n) {
  if (static_cast<int>(diag.length()) > n)
    throw std::invalid_argument("diagram has more rows than n");
  if (static_cast<int>(diag.length()) < n) return diag;
  const long m = diag.row(n - 1);
  std::vector<long> rows;
  for (int i = 0; i < n; ++i) rows.push_back(diag.row(i) - m);
  return Ferrers(rows);
}

Ferrers dual_diagram(const Ferrers& diag, int n) {
  if (static_cast<int>(diag.length()) > n)
    throw std::invalid_argument("diagram has more rows than n");
  const long width = diag.row(0);
  std::vector<long> rows;
  for (int i = 0; i < n; ++i) rows.push_back(width - diag.row(n - 1 - i));
  return normalize(Ferrers(rows), n);
}

Int dim_irrep(const Ferrers& diag, int n) {
  if (static_cast<int>(diag.length()) > n)
    throw std::invalid_argument("diagram has more rows than n");
  std::vector<long> cols(static_cast<size_t>(diag.row(0)), 0);
  for (size_t r = 0; r < diag.length(); ++r)
    for (long c = 0; c < diag.row(r); ++c) ++cols[c];
  Int num = 1, den = 1;
  for (size_t r = 0; r < diag.length(); ++r)
    for (long c = 0; c < diag.row(r); ++c) {
      num *= n + c - static_cast<long>(r);
      den *= (diag.row(r) - c) + (cols[c] - static_cast<long>(r)) - 1;
    }
  Rat q(num, den);
  q.canonicalize();
  if (q.get_den() != 1) throw InvariantError("hook content product is not an integer");
  return q.get_num();
}

namespace {

/// Partitions of k into at most max_parts parts, each at most max_first.
void partitions(long k, long max_parts, long max_first, std::vector<long>& acc,
                const std::function<void(const std::vector<long>&)>& emit) {
  if (k == 0) {
    emit(acc);
    return;
  }
  if (max_parts == 0) return;
  for (long p = std::min(k, max_first); p >= 1; --p) {
    acc.push_back(p);
    partitions(k - p, max_parts - 1, p, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Ferrers> admissible_diagrams(const AlgebraSpec& spec, int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  std::vector<Ferrers> out;
  std::vector<long> acc;
  if (spec.family == Family::Orthogonal) {
    partitions(k, spec.n / 2, k, acc, [&](const std::vector<long>& p) {
      std::vector<long> rows;
      for (long v : p) {
        rows.push_back(v);
        rows.push_back(v);
      }
      out.push_back(Ferrers(rows));
    });
  } else {
    partitions(k, spec.n, k, acc, [&](const std::vector<long>& p) {
      std::vector<long> rows;
      for (long v : p) rows.push_back(2 * v);
      out.push_back(Ferrers(rows));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct LRState {
  std::vector<long> shape;                  // current shape, length n
  std::vector<std::vector<int>> value;      // value[r][c]: 0 for boxes of a, else strip number
};

/// Reverse reading word (rows top to bottom, right to left) is a ballot
/// sequence: every prefix has at least as many r's as (r+1)'s.
bool ballot(const LRState& st, int nvalues) {
  std::vector<long> count(static_cast<size_t>(nvalues) + 1, 0);
  for (const auto& row : st.value)
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const int v = *it;
      if (v == 0) continue;
      ++count[v];
      if (v > 1 && count[v] > count[v - 1]) return false;
    }
  return true;
}

}  // namespace

std::map<Ferrers, long> lr_tensor(const Ferrers& a, const Ferrers& b, int n) {
  if (static_cast<int>(a.length()) > n || static_cast<int>(b.length()) > n)
    throw std::invalid_argument("diagram has more rows than n");

  std::map<Ferrers, long> out;
  LRState st;
  st.shape.resize(n);
  st.value.resize(n);
  for (int r = 0; r < n; ++r) {
    st.shape[r] = a.row(r);
    st.value[r].assign(static_cast<size_t>(a.row(r)), 0);
  }

  const int m = static_cast<int>(b.length());
  // Adds the horizontal strip of value v row by row, then recurses into the
  // next strip; leaves take the finished tableau. above_old is the length of
  // the row above before this strip touched it: a cell of the current value
  // may not sit in the same column as one placed just above, so the cap is
  // the pre-strip length of the upper row, not its current length.
  std::function<void(int)> strip_done;
  std::function<void(int, int, long, long)> place;  // (v, row, remaining, above_old)
  strip_done = [&](int v) {
    if (v == m) {
      if (ballot(st, m)) {
        std::vector<long> rows = st.shape;
        out[normalize(Ferrers(rows), n)] += 1;
      }
      return;
    }
    place(v + 1, 0, b.row(v), 0);
  };
  place = [&](int v, int row, long remaining, long above_old) {
    if (row == n) {
      if (remaining == 0) strip_done(v);
      return;
    }
    const long old_len = st.shape[row];
    const long cap =
        row == 0 ? remaining : std::min(remaining, std::max<long>(0, above_old - old_len));
    for (long add = 0; add <= cap; ++add) {
      if (add > 0) {
        st.shape[row] += add;
        for (long c = 0; c < add; ++c) st.value[row].push_back(v);
      }
      place(v, row + 1, remaining - add, old_len);
      if (add > 0) {
        st.shape[row] -= add;
        for (long c = 0; c < add; ++c) st.value[row].pop_back();
      }
    }
  };
  strip_done(0);
  return out;
}

TildeTree tilde_tree(const Ferrers& root, int k, const AlgebraSpec& spec) {
  const auto adm = admissible_diagrams(spec, k);
  if (std::find(adm.begin(), adm.end(), root) == adm.end())
    throw std::invalid_argument("root diagram is not admissible at degree " + std::to_string(k));

  const Ferrers gm1 = spec.family == Family::Orthogonal ? Ferrers({1, 1}) : Ferrers({2});
  const Ferrers dual = dual_diagram(gm1, spec.n);

  TildeTree tree;
  tree.root = root;
  tree.k = k;
  tree.levels.push_back({root});
  for (int l = 0; l + 1 <= k; ++l) {
    const auto lower_adm = admissible_diagrams(spec, k - l - 1);
    std::set<Ferrers> next;
    for (const Ferrers& d : tree.levels[l]) {
      const auto prod = lr_tensor(d, dual, spec.n);
      for (const Ferrers& cand : lower_adm)
        if (prod.count(normalize(cand, spec.n))) next.insert(cand);
    }
    if (next.empty()) break;
    tree.levels.emplace_back(next.begin(), next.end());
  }
  return tree;
}

}  // namespace lieq
