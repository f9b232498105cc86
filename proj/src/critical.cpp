#include <lieq/critical.hpp>
#include <lieq/errors.hpp>

#include <algorithm>
#include <map>

namespace lieq {

Rat critical_delta(const Ferrers& upper, int k, const Ferrers& lower, int l,
                   const AlgebraSpec& spec) {
  if (l >= k) throw std::invalid_argument("lower degree must be smaller than upper degree");
  if (upper.boxes() != 2 * k || lower.boxes() != 2 * l)
    throw std::invalid_argument("diagram box counts must be twice the degrees");
  const int n = spec.n;
  const long denom_shift = spec.family == Family::Orthogonal ? n - 1 : n + 1;
  Rat sum = 0, square_sum = 0;
  const size_t len = std::max(upper.length(), lower.length());
  for (size_t i = 0; i < len; ++i) {
    const long ki = upper.row(i), li = lower.row(i);
    const long row = static_cast<long>(i) + 1;
    sum += Rat(ki - li) * (ki + li - 2 * row);
    square_sum += Rat(ki) * ki - Rat(li) * li;
  }
  const Rat lead = spec.family == Family::Orthogonal ? Rat(n) / (n - 1) : Rat(1);
  const Rat value = lead + sum / (Rat(4) * denom_shift * (k - l));

  if (dominance_lt(lower, upper)) {
    // Row by row k_i >= l_i with at least one strict inequality, so the
    // square-difference bound must be strictly positive and the value must
    // sit above it; both follow from the closed form.
    const Rat bound = square_sum / (Rat(4) * denom_shift * (k - l));
    if (!(bound > 0) || value < bound)
      throw InvariantError("critical shift " + rat_str(value) + " for (" + upper.str() + ")/(" +
                           lower.str() + ") violates its positivity bound " + rat_str(bound));
  }
  return value;
}

std::vector<CriticalValue> critical_set(const AlgebraSpec& spec, int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
  std::map<Rat, std::vector<CriticalWitness>> by_delta;
  for (int k = 1; k <= kmax; ++k)
    for (const Ferrers& root : admissible_diagrams(spec, k)) {
      const TildeTree tree = tilde_tree(root, k, spec);
      for (size_t level = 1; level < tree.levels.size(); ++level)
        for (const Ferrers& lower : tree.levels[level]) {
          if (!dominance_lt(lower, root))
            throw InvariantError("tree descendant (" + lower.str() +
                                 ") is not dominated by its root (" + root.str() + ")");
          const int l = k - static_cast<int>(level);
          const Rat delta = critical_delta(root, k, lower, l, spec);
          if (!(delta > 0))
            throw InvariantError("critical shift " + rat_str(delta) + " for (" + root.str() +
                                 ")/(" + lower.str() + ") is not positive");
          by_delta[delta].push_back({root, k, lower, l});
        }
    }
  std::vector<CriticalValue> out;
  for (auto& [delta, witnesses] : by_delta) out.push_back({delta, std::move(witnesses)});
  return out;
}

CriticalReport is_critical(const Rat& lambda, const Rat& mu, const AlgebraSpec& spec, int kmax) {
  CriticalReport report;
  report.delta = mu - lambda;
  for (const CriticalValue& cv : critical_set(spec, kmax))
    if (cv.delta == report.delta) {
      report.critical = true;
      report.witnesses = cv.witnesses;
      break;
    }
  return report;
}

std::string witness_str(const CriticalWitness& w) {
  return w.upper.str() + "@" + std::to_string(w.k) + " vs " + w.lower.str() + "@" +
         std::to_string(w.l);
}

}  // namespace lieq
