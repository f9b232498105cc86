#include "lieq/cli.hpp"

#include "lieq/critical.hpp"
#include "lieq/errors.hpp"
#include "lieq/ferrers.hpp"
#include "lieq/quantize.hpp"
#include "lieq/spectra.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace lieq {

namespace {

Family parse_family(const std::string& name) {
  if (name == "o") return Family::Orthogonal;
  if (name == "sp") return Family::Symplectic;
  throw std::invalid_argument("unknown family: \"" + name + "\" (expected \"o\" or \"sp\")");
}

std::string side_tag(const Ferrers& diag, int degree) {
  return diag.str() + "@" + std::to_string(degree);
}

void error_payload(nlohmann::json& payload, const std::string& type, const std::string& message) {
  payload["error"] = {{"type", type}, {"message", message}};
  payload["columns"] = {"error_type", "message"};
  payload["rows"] = nlohmann::json::array({{type, message}});
}

/// Runs the payload builder and maps exceptions to exit codes. The builder
/// returns the exit code for non-exceptional refusals (criticality).
CmdResult run(const std::string& command, OutFormat fmt,
              const std::function<int(nlohmann::json&)>& fill) {
  CmdResult res;
  res.doc.format = fmt;
  nlohmann::json payload;
  payload["version"] = 1;
  payload["command"] = command;
  try {
    res.exit_code = fill(payload);
  } catch (const CriticalityError& e) {
    error_payload(payload, "criticality", e.what());
    res.exit_code = 3;
  } catch (const InvariantError& e) {
    error_payload(payload, "invariant_violation", e.what());
    res.exit_code = 4;
  } catch (const TruncationError& e) {
    error_payload(payload, "truncation", e.what());
    res.exit_code = 2;
  } catch (const std::invalid_argument& e) {
    error_payload(payload, "invalid_argument", e.what());
    res.exit_code = 2;
  }
  res.doc.payload = std::move(payload);
  return res;
}

/// Writes the refusal payload shared by quantize and verify and returns 3.
int criticality_refusal(nlohmann::json& payload, const CriticalReport& crit) {
  payload["critical"] = true;
  payload["delta"] = rat_str(crit.delta);
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& w : crit.witnesses) {
    witnesses.push_back({{"upper", side_tag(w.upper, w.k)}, {"lower", side_tag(w.lower, w.l)}});
    rows.push_back({rat_str(crit.delta), side_tag(w.upper, w.k), side_tag(w.lower, w.l)});
  }
  payload["witnesses"] = witnesses;
  payload["columns"] = {"delta", "upper", "lower"};
  payload["rows"] = rows;
  return 3;
}

void require_nonneg(int value, const std::string& flag) {
  if (value < 0) throw std::invalid_argument(flag + " must be >= 0");
}

}  // namespace

CmdResult cmd_decompose(const std::string& family, int n, int k, OutFormat fmt) {
  return run("decompose", fmt, [&](nlohmann::json& payload) {
    AlgebraSpec spec = make_algebra(parse_family(family), n);
    require_nonneg(k, "--k");
    payload["family"] = family;
    payload["n"] = n;
    payload["k"] = k;
    payload["d"] = spec.d;

    Int total = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (const Ferrers& diag : admissible_diagrams(spec, k)) {
      Int dim = dim_irrep(diag, n);
      total += dim;
      rows.push_back({diag.str(), dim.get_str()});
    }
    Int expected = binomial(spec.d + k - 1, k);
    rows.push_back({"total", total.get_str()});
    rows.push_back({"expected_total", expected.get_str()});

    payload["columns"] = {"diagram", "dimension"};
    payload["rows"] = rows;
    payload["total"] = total.get_str();
    payload["expected_total"] = expected.get_str();
    return 0;
  });
}

CmdResult cmd_eigenvalue(const std::string& family, int n, const std::string& diagram,
                         const std::string& delta, OutFormat fmt) {
  return run("eigenvalue", fmt, [&](nlohmann::json& payload) {
    AlgebraSpec spec = make_algebra(parse_family(family), n);
    Ferrers diag = Ferrers::parse(diagram);
    EigenvaluePoly poly = spec.family == Family::Orthogonal ? eigenvalue_orthogonal(diag, n)
                                                            : eigenvalue_symplectic(diag, n);
    payload["family"] = family;
    payload["n"] = n;
    payload["diagram"] = diag.str();
    payload["k"] = diag.boxes() / 2;

    if (delta.empty() || delta == "symbolic") {
      payload["mode"] = "symbolic";
      payload["c2"] = rat_str(poly.c2);
      payload["c1"] = rat_str(poly.c1);
      payload["c0"] = rat_str(poly.c0);
      payload["columns"] = {"diagram", "c2", "c1", "c0"};
      payload["rows"] = nlohmann::json::array(
          {{diag.str(), rat_str(poly.c2), rat_str(poly.c1), rat_str(poly.c0)}});
    } else {
      Rat d = rat_parse(delta);
      Rat value = poly.eval(d);
      payload["mode"] = "value";
      payload["delta"] = rat_str(d);
      payload["value"] = rat_str(value);
      payload["columns"] = {"diagram", "delta", "value"};
      payload["rows"] = nlohmann::json::array({{diag.str(), rat_str(d), rat_str(value)}});
    }
    return 0;
  });
}

CmdResult cmd_critical(const std::string& family, int n, int kmax, OutFormat fmt) {
  return run("critical", fmt, [&](nlohmann::json& payload) {
    AlgebraSpec spec = make_algebra(parse_family(family), n);
    if (kmax < 1) throw std::invalid_argument("--kmax must be >= 1");
    payload["family"] = family;
    payload["n"] = n;
    payload["kmax"] = kmax;

    nlohmann::json values = nlohmann::json::array();
    nlohmann::json rows = nlohmann::json::array();
    auto set = critical_set(spec, kmax);
    for (const auto& cv : set) {
      nlohmann::json witnesses = nlohmann::json::array();
      for (const auto& w : cv.witnesses) {
        witnesses.push_back(
            {{"upper", side_tag(w.upper, w.k)}, {"lower", side_tag(w.lower, w.l)}});
        rows.push_back({rat_str(cv.delta), side_tag(w.upper, w.k), side_tag(w.lower, w.l)});
      }
      values.push_back({{"delta", rat_str(cv.delta)}, {"witnesses", witnesses}});
    }
    payload["count"] = set.size();
    payload["values"] = values;
    payload["columns"] = {"delta", "upper", "lower"};
    payload["rows"] = rows;
    return 0;
  });
}

CmdResult cmd_quantize(const std::string& family, int n, const std::string& lambda,
                       const std::string& mu, int K, int M, OutFormat fmt) {
  return run("quantize", fmt, [&](nlohmann::json& payload) {
    AlgebraSpec spec = make_algebra(parse_family(family), n);
    require_nonneg(K, "--K");
    require_nonneg(M, "--M");
    Rat l = rat_parse(lambda);
    Rat m = rat_parse(mu);
    payload["family"] = family;
    payload["n"] = n;
    payload["lambda"] = rat_str(l);
    payload["mu"] = rat_str(m);
    payload["K"] = K;
    payload["M"] = M;

    CriticalReport crit = is_critical(l, m, spec, K);
    if (crit.critical) return criticality_refusal(payload, crit);

    QuantizationMap qm = quantization_matrix(spec, l, m, K, M);
    EquivarianceReport report = verify_equivariance(qm);

    const SymBasis& basis = qm.q.basis;
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < qm.q.mat.rows(); ++i)
      for (const auto& [j, c] : qm.q.mat.row(i))
        rows.push_back({std::to_string(i), std::to_string(j), rat_str(c),
                        Poly::key_str(basis.keys[i], basis.d),
                        Poly::key_str(basis.keys[j], basis.d)});

    payload["critical"] = false;
    payload["size"] = basis.size();
    payload["nnz"] = qm.q.mat.nnz();
    payload["tested"] = report.tested;
    payload["violations"] = report.violations.size();
    payload["columns"] = {"row", "col", "value", "row_monomial", "col_monomial"};
    payload["rows"] = rows;
    return report.violations.empty() ? 0 : 4;
  });
}

CmdResult cmd_tree(const std::string& family, int n, const std::string& diagram, int k,
                   OutFormat fmt) {
  return run("tree", fmt, [&](nlohmann::json& payload) {
    AlgebraSpec spec = make_algebra(parse_family(family), n);
    require_nonneg(k, "--k");
    Ferrers root = Ferrers::parse(diagram);
    TildeTree tree = tilde_tree(root, k, spec);
    payload["family"] = family;
    payload["n"] = n;
    payload["root"] = root.str();
    payload["k"] = k;

    nlohmann::json levels = nlohmann::json::array();
    nlohmann::json rows = nlohmann::json::array();
    for (size_t level = 0; level < tree.levels.size(); ++level) {
      nlohmann::json names = nlohmann::json::array();
      for (const Ferrers& diag : tree.levels[level]) {
        names.push_back(diag.str());
        std::string flag =
            level == 0 ? "root" : (dominance_lt(diag, root) ? "true" : "false");
        rows.push_back({std::to_string(level), std::to_string(k - static_cast<int>(level)),
                        diag.str(), flag});
      }
      levels.push_back(names);
    }
    payload["levels"] = levels;
    payload["columns"] = {"level", "xi_degree", "diagram", "strictly_dominated"};
    payload["rows"] = rows;
    return 0;
  });
}

CmdResult cmd_verify(const std::string& family, int n, const std::string& lambda,
                     const std::string& mu, int K, int M, OutFormat fmt) {
  return run("verify", fmt, [&](nlohmann::json& payload) {
    AlgebraSpec spec = make_algebra(parse_family(family), n);
    require_nonneg(K, "--K");
    require_nonneg(M, "--M");
    Rat l = rat_parse(lambda);
    Rat m = rat_parse(mu);
    payload["family"] = family;
    payload["n"] = n;
    payload["lambda"] = rat_str(l);
    payload["mu"] = rat_str(m);
    payload["K"] = K;
    payload["M"] = M;

    CriticalReport crit = is_critical(l, m, spec, K);
    if (crit.critical) return criticality_refusal(payload, crit);

    QuantizationMap qm = quantization_matrix(spec, l, m, K, M);
    EquivarianceReport report = verify_equivariance(qm);

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : report.violations) rows.push_back({v});

    payload["critical"] = false;
    payload["tested"] = report.tested;
    payload["violation_count"] = report.violations.size();
    payload["verified"] = report.violations.empty();
    payload["columns"] = {"violation"};
    payload["rows"] = rows;
    return report.violations.empty() ? 0 : 4;
  });
}

}  // namespace lieq
