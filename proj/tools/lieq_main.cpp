#include <CLI11.hpp>

#include "lieq/cli.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{"Exact Casimir spectra, critical shifts and equivariant quantization "
               "for the orthogonal and symplectic graded families"};
  app.require_subcommand(1);

  std::string family, diagram, delta = "symbolic", lambda, mu, format = "json";
  int n = 0, k = 0, kmax = 1, K = 0, M = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "Family: o (orthogonal) or sp (symplectic)")
        ->required();
    cmd->add_option("--n", n, "Matrix size n of the realization")->required();
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  CLI::App* dec = app.add_subcommand(
      "decompose", "Irreducible summands of a symbol degree with dimensions");
  add_common(dec);
  dec->add_option("--k", k, "Fiber degree")->required();

  CLI::App* eig = app.add_subcommand(
      "eigenvalue", "Casimir eigenvalue of one labeled summand, numeric or symbolic");
  add_common(eig);
  eig->add_option("--diagram", diagram, "Diagram, e.g. 6,4,2 (empty for trivial)")->required();
  eig->add_option("--delta", delta, "Shift value p/q, or \"symbolic\" for coefficients")
      ->capture_default_str();

  CLI::App* crit = app.add_subcommand(
      "critical", "Critical shift values with witness pairs up to a degree horizon");
  add_common(crit);
  crit->add_option("--kmax", kmax, "Degree horizon (>= 1)")->required();

  CLI::App* quant = app.add_subcommand(
      "quantize", "Quantization matrix on a truncation, as sparse triplets");
  add_common(quant);
  quant->add_option("--lambda", lambda, "Input density weight p/q")->required();
  quant->add_option("--mu", mu, "Output density weight p/q")->required();
  quant->add_option("--K", K, "Fiber degree bound")->required();
  quant->add_option("--M", M, "Coefficient degree bound")->required();

  CLI::App* tree = app.add_subcommand(
      "tree", "Lower-degree summands reachable from a root diagram");
  add_common(tree);
  tree->add_option("--diagram", diagram, "Admissible root diagram")->required();
  tree->add_option("--k", k, "Fiber degree of the root")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Equivariance report of the quantization map on a truncation");
  add_common(verify);
  verify->add_option("--lambda", lambda, "Input density weight p/q")->required();
  verify->add_option("--mu", mu, "Output density weight p/q")->required();
  verify->add_option("--K", K, "Fiber degree bound")->required();
  verify->add_option("--M", M, "Coefficient degree bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  lieq::CmdResult result;
  lieq::OutFormat fmt = lieq::parse_format(format);
  if (app.got_subcommand(dec)) {
    result = lieq::cmd_decompose(family, n, k, fmt);
  } else if (app.got_subcommand(eig)) {
    result = lieq::cmd_eigenvalue(family, n, diagram, delta, fmt);
  } else if (app.got_subcommand(crit)) {
    result = lieq::cmd_critical(family, n, kmax, fmt);
  } else if (app.got_subcommand(quant)) {
    result = lieq::cmd_quantize(family, n, lambda, mu, K, M, fmt);
  } else if (app.got_subcommand(tree)) {
    result = lieq::cmd_tree(family, n, diagram, k, fmt);
  } else {
    result = lieq::cmd_verify(family, n, lambda, mu, K, M, fmt);
  }

  std::cout << result.doc.render();
  return result.exit_code;
}
