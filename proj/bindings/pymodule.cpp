#include <pybind11/pybind11.h>

#include "lieq/cli.hpp"
#include "lieq/errors.hpp"

#include <stdexcept>

namespace py = pybind11;

namespace {

/// Runs a subcommand and returns its JSON payload as Python objects.
/// Nonzero exit codes are re-raised as the exceptions the payload encodes.
py::object payload_of(const lieq::CmdResult& result) {
  const auto& payload = result.doc.payload;
  if (result.exit_code != 0) {
    std::string message;
    if (payload.contains("error")) {
      message = payload["error"]["message"].get<std::string>();
    } else if (payload.value("critical", false)) {
      message = "critical shift " + payload["delta"].get<std::string>();
      std::string sep = ": ";
      for (const auto& w : payload["witnesses"]) {
        message += sep + w["upper"].get<std::string>() + " vs " + w["lower"].get<std::string>();
        sep = "; ";
      }
    } else {
      message = payload.dump();
    }
    switch (result.exit_code) {
      case 3:
        throw lieq::CriticalityError(message);
      case 4:
        throw lieq::InvariantError(message);
      default:
        throw std::invalid_argument(message);
    }
  }
  py::object loads = py::module_::import("json").attr("loads");
  return loads(payload.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Casimir spectra, critical shifts and equivariant quantization "
            "for the orthogonal and symplectic graded families";

  py::register_exception<lieq::CriticalityError>(m, "CriticalityError", PyExc_ArithmeticError);
  py::register_exception<lieq::InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<lieq::TruncationError>(m, "TruncationError", PyExc_ValueError);

  m.def(
      "decompose",
      [](const std::string& family, int n, int k) {
        return payload_of(lieq::cmd_decompose(family, n, k, lieq::OutFormat::Json));
      },
      py::arg("family"), py::arg("n"), py::arg("k"),
      "Irreducible summands of the degree-k symbol space, with dimensions and totals.");

  m.def(
      "eigenvalue",
      [](const std::string& family, int n, const std::string& diagram,
         const std::string& delta) {
        return payload_of(lieq::cmd_eigenvalue(family, n, diagram, delta, lieq::OutFormat::Json));
      },
      py::arg("family"), py::arg("n"), py::arg("diagram"), py::arg("delta") = "symbolic",
      "Casimir eigenvalue of one labeled summand at a shift, or its quadratic coefficients.");

  m.def(
      "critical_set",
      [](const std::string& family, int n, int kmax) {
        return payload_of(lieq::cmd_critical(family, n, kmax, lieq::OutFormat::Json));
      },
      py::arg("family"), py::arg("n"), py::arg("kmax"),
      "Critical shift values with witness pairs, up to the degree horizon.");

  m.def(
      "tilde_tree",
      [](const std::string& family, int n, const std::string& diagram, int k) {
        return payload_of(lieq::cmd_tree(family, n, diagram, k, lieq::OutFormat::Json));
      },
      py::arg("family"), py::arg("n"), py::arg("diagram"), py::arg("k"),
      "Lower-degree summands reachable from an admissible root diagram.");

  m.def(
      "quantize",
      [](const std::string& family, int n, const std::string& lam, const std::string& mu, int K,
         int M) {
        return payload_of(lieq::cmd_quantize(family, n, lam, mu, K, M, lieq::OutFormat::Json));
      },
      py::arg("family"), py::arg("n"), py::arg("lam"), py::arg("mu"), py::arg("K"),
      py::arg("M"),
      "Quantization matrix on the (K, M) truncation as sparse triplets. Raises "
      "CriticalityError when mu - lam is a critical shift at horizon K.");

  m.def(
      "verify",
      [](const std::string& family, int n, const std::string& lam, const std::string& mu, int K,
         int M) {
        return payload_of(lieq::cmd_verify(family, n, lam, mu, K, M, lieq::OutFormat::Json));
      },
      py::arg("family"), py::arg("n"), py::arg("lam"), py::arg("mu"), py::arg("K"),
      py::arg("M"),
      "Equivariance report of the quantization map over all degree-bounded pairs.");
}
