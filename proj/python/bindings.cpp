#include "ovk/cli.hpp"
#include "ovk/errors.hpp"
#include "ovk/hodge.hpp"
#include "ovk/localization.hpp"
#include "ovk/maslov.hpp"
#include "ovk/open_invariants.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ovk;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator_str())), py::int_(py::str(r.denominator_str())));
}

py::list to_fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_fraction(v));
  return out;
}

MatrixLoop loop_from_strings(const std::vector<std::vector<std::string>>& matrix, int samples) {
  std::vector<std::vector<LoopEntry>> entries;
  for (const auto& row : matrix) {
    std::vector<LoopEntry> parsed;
    for (const auto& cell : row) parsed.push_back(parse_loop_entry(cell));
    entries.push_back(std::move(parsed));
  }
  return MatrixLoop(std::move(entries), samples);
}

ExampleBundle bundle_from_name(const std::string& name) {
  if (name == "L") return ExampleBundle::Line;
  if (name == "L-dual") return ExampleBundle::DualLine;
  if (name == "N") return ExampleBundle::Normal;
  throw InvalidArgument("bundle must be 'L', 'L-dual' or 'N'");
}

}  // namespace

PYBIND11_MODULE(_ovk, m) {
  m.doc() = "Exact framed disc and sphere multiple-cover invariants";

  static py::exception<Error> base(m, "OvkError");
  static py::exception<UnsupportedRegime> unsupported(m, "UnsupportedRegime", base.ptr());
  static py::exception<DegenerateFrame> degenerate(m, "DegenerateFrame", base.ptr());
  static py::exception<NonConvergent> nonconvergent(m, "NonConvergent", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const UnsupportedRegime& e) {
      unsupported(e.what());
    } catch (const DegenerateFrame& e) {
      degenerate(e.what());
    } catch (const NonConvergent& e) {
      nonconvergent(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("open_invariant",
        [](int g, std::vector<int> parts, long a) { return to_fraction(open_invariant(OpenInvariantKey::from_parts(g, parts, a))); },
        py::arg("g"), py::arg("parts"), py::arg("a"), "Closed-form C(g;h|d;parts|a).");
  m.def("localize_open",
        [](int g, std::vector<int> parts, long a) { return to_fraction(localize_open(OpenInvariantKey::from_parts(g, parts, a))); },
        py::arg("g"), py::arg("parts"), py::arg("a"), "C(g;h|d;parts|a) by U(1) localization.");
  m.def("symbolic_integrand",
        [](int g, std::vector<int> parts, long a) { return symbolic_integrand(OpenInvariantKey::from_parts(g, parts, a)).str(); },
        py::arg("g"), py::arg("parts"), py::arg("a"));
  m.def("winding_factor", [](int n, long a) { return to_fraction(winding_factor(n, a)); }, py::arg("n"), py::arg("a"));
  m.def("verify_framing_symmetry",
        [](int g, std::vector<int> parts, long a) { return verify_framing_symmetry(OpenInvariantKey::from_parts(g, parts, a)); },
        py::arg("g"), py::arg("parts"), py::arg("a"));
  m.def("integer_invariants", [](int dmax, long a) { return to_fractions(integer_invariants(dmax, a).values); },
        py::arg("dmax"), py::arg("a"), "N_1..N_dmax.");
  m.def("verify_disc_ov", &verify_disc_ov, py::arg("d"), py::arg("gmax"));
  m.def("verify_sphere_ov", &verify_sphere_ov, py::arg("d"), py::arg("gmax"));

  m.def("bg", [](int g) { return to_fraction(bg(g)); }, py::arg("g"));
  m.def("bg_table", [](int gmax) { return to_fractions(bg_table(gmax).values()); }, py::arg("gmax"));
  m.def("closed_cover_contribution", [](int g, int d) { return to_fraction(closed_cover_contribution(g, d)); },
        py::arg("g"), py::arg("d"));
  m.def("psi_integral_genus0", [](const std::vector<int>& k) { return to_fraction(psi_integral_genus0(k)); }, py::arg("k"));
  m.def("psi_integral_oracle", [](const std::vector<int>& k) { return to_fraction(psi_integral_oracle(k)); }, py::arg("k"));
  m.def("lambda_product_identity", &lambda_product_identity, py::arg("g"));

  m.def("maslov_index",
        [](const std::vector<std::vector<std::string>>& matrix, int samples) {
          return maslov_index(loop_from_strings(matrix, samples));
        },
        py::arg("matrix"), py::arg("samples") = 64, "Sampled winding of det(A conj(A)^-1); entries like 'i*e^(1/2)'.");
  m.def("maslov_index_exact",
        [](const std::vector<std::vector<std::string>>& matrix) { return maslov_index_exact(loop_from_strings(matrix, 64)); },
        py::arg("matrix"));
  m.def("example_cohomology_dims",
        [](const std::string& bundle, int parameter) {
          const auto dims = example_cohomology_dims(bundle_from_name(bundle), parameter);
          return py::make_tuple(dims.h0, dims.h1);
        },
        py::arg("bundle"), py::arg("parameter"));
  m.def("bordered_rr_chi", [](long mu, int rank, int g, int h) { return bordered_rr_chi(mu, rank, {g, h}); },
        py::arg("mu"), py::arg("rank"), py::arg("g"), py::arg("h"));

  m.def("run_suite",
        [](const std::string& suite) {
          py::list out;
          std::vector<cli::CaseResult> results;
          {
            py::gil_scoped_release release;
            results = cli::run_suite(suite, {});
          }
          for (const auto& r : results) out.append(py::make_tuple(r.id, r.pass, r.detail));
          return out;
        },
        py::arg("suite"), "Runs a verification suite with default ranges; returns (case, passed, detail) tuples.");
}
