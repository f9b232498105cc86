#pragma once

#include <lieq/output.hpp>

#include <string>

namespace lieq {

/// Exit codes shared by every subcommand: 0 success, 2 invalid arguments or
/// truncation bounds, 3 criticality refusal, 4 internal invariant violation.
struct CmdResult {
  int exit_code = 0;
  OutputDocument doc;
};

/// Admissible diagrams of the degree-k symbol space with dimensions, the
/// dimension total and the closed-form count it must equal.
CmdResult cmd_decompose(const std::string& family, int n, int k, OutFormat fmt);

/// Casimir eigenvalue of one labeled submodule: the value at a numeric shift,
/// or the three quadratic coefficients when delta is "symbolic" or empty.
CmdResult cmd_eigenvalue(const std::string& family, int n, const std::string& diagram,
                         const std::string& delta, OutFormat fmt);

/// All critical shift values at the given horizon, each with its witness
/// pairs serialized as "diagram@degree".
CmdResult cmd_critical(const std::string& family, int n, int kmax, OutFormat fmt);

/// Quantization matrix on the (K, M) truncation as sparse triplets plus an
/// equivariance summary. Refuses with the witness list (exit 3) when mu -
/// lambda is a critical shift at horizon K.
CmdResult cmd_quantize(const std::string& family, int n, const std::string& lambda,
                       const std::string& mu, int K, int M, OutFormat fmt);

/// Levels of the tilde-tree below an admissible root diagram, with the
/// strict-dominance flag per entry.
CmdResult cmd_tree(const std::string& family, int n, const std::string& diagram, int k,
                   OutFormat fmt);

/// Full equivariance report of the quantization map: every degree-bounded
/// pair of basis field and basis symbol, with any violating pairs listed.
CmdResult cmd_verify(const std::string& family, int n, const std::string& lambda,
                     const std::string& mu, int K, int M, OutFormat fmt);

}  // namespace lieq
