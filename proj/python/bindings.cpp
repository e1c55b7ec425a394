// Python bindings. Documents cross the boundary as JSON text, matching the
// CLI file formats; laxforge errors become Python exceptions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "laxforge/error.hpp"
#include "laxforge/shell.hpp"

namespace py = pybind11;
using namespace laxforge;

namespace {

SigmaSet vector_sigma(int m, int n) { return extend_sigma(init_simple_sigma(build_vector_rep(build_algebra(m, n)))); }

std::string verify(int m, int n, const std::vector<std::string>& suites, int samples, std::uint64_t seed) {
  JobConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.suites = suites;
  cfg.samples = samples;
  cfg.seed = seed;
  std::ostringstream out, err;
  cmd_verify(cfg, out, err);
  return out.str();
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact U_q[osp(m|n)] Lax operators and R-matrices";

  // Translators run newest first, so subclasses are registered after the base.
  auto& base = py::register_exception<Error>(m, "LaxforgeError");
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<UnsupportedRank>(m, "UnsupportedRank", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<RelationViolation>(m, "RelationViolation", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<SamplingError>(m, "SamplingError", base.ptr());

  m.def("algebra", [](int m_, int n_) { return dump(algebra_to_json(*build_algebra(m_, n_))); },
        py::arg("m"), py::arg("n"), "Root data, layout and rho as JSON.");
  m.def("vector_rep", [](int m_, int n_) { return dump(representation_to_json(*build_vector_rep(build_algebra(m_, n_)))); },
        py::arg("m"), py::arg("n"), "The vector module as JSON.");
  m.def("sigma", [](int m_, int n_) { return dump(sigma_to_json(vector_sigma(m_, n_))); }, py::arg("m"), py::arg("n"),
        "All sigma operators on the vector module as JSON.");
  m.def("r_matrix",
        [](int m_, int n_) {
          const SigmaSet s = vector_sigma(m_, n_);
          return dump(rtensor_to_json(assemble_R(s), *s.algebra, s.rep->name));
        },
        py::arg("m"), py::arg("n"), "The constant R-matrix on V (x) V as JSON.");
  m.def("evaluate_r",
        [](int m_, int n_, const std::string& s0) {
          const SigmaSet s = vector_sigma(m_, n_);
          const Rational v = parse_rational(s0);
          if (v == 0) throw InvalidInput("s must be nonzero");
          return dump(rational_matrix_doc(*s.algebra, s.rep->name, evaluate(assemble_R(s).matrix, v), s0, ""));
        },
        py::arg("m"), py::arg("n"), py::arg("s"), "R at a rational s = q^{1/2} as JSON.");
  m.def("spectral",
        [](int m_, int n_, const std::string& kind) {
          return dump(spectral_to_json(build_spectral_R(build_algebra(m_, n_), spectral_kind_from_string(kind))));
        },
        py::arg("m"), py::arg("n"), py::arg("kind") = "untwisted", "The spectral R-matrix r(z) as JSON.");
  m.def("suite_names", &suite_names);
  m.def("verify", &verify, py::arg("m"), py::arg("n"), py::arg("suites"), py::arg("samples") = 20,
        py::arg("seed") = 1, "Runs verification suites; returns a JSON array of reports.");
  m.def("fingerprint", &fingerprint, py::arg("text"));
  m.def("run_cli", &run, py::arg("args"), "Runs a CLI command line; returns (exit_code, stdout, stderr).");
}
