#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "capitulation/arithmetic.hpp"
#include "capitulation/errors.hpp"
#include "capitulation/report.hpp"
#include "capitulation/structure.hpp"
#include "capitulation/verify.hpp"

namespace py = pybind11;
namespace cap = capitulation;

namespace {

// Results cross the boundary as JSON text; the package decodes them.
std::string analyze(const cap::Presentation& p, std::size_t max_cosets) {
  return cap::report::analyze(p, max_cosets).doc.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Capitulation in 2-groups with abelianization of type (2,4)";

  auto base = py::register_exception<cap::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<cap::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<cap::CatalogError>(m, "CatalogError", base.ptr());
  py::register_exception<cap::CosetLimitExceeded>(m, "CosetLimitExceeded", base.ptr());
  py::register_exception<cap::OrderTooLarge>(m, "OrderTooLarge", base.ptr());
  py::register_exception<cap::InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<cap::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<cap::UndefinedSymbol>(m, "UndefinedSymbol", base.ptr());
  py::register_exception<cap::OutsideHypothesis>(m, "OutsideHypothesis", base.ptr());

  m.attr("DEFAULT_MAX_COSETS") = cap::kDefaultMaxCosets;

  m.def("render", [](const std::string& text) { return cap::render(cap::parse(text)); },
        py::arg("text"), "Parse a presentation and print it in normal form.");
  m.def("catalog",
        [](const std::string& name, const std::vector<int>& params) {
          return cap::render(cap::catalog(name, params));
        },
        py::arg("name"), py::arg("params") = std::vector<int>{});
  m.def("order",
        [](const std::string& text, std::size_t max_cosets) {
          return cap::enumerate(cap::parse(text), max_cosets).order();
        },
        py::arg("text"), py::arg("max_cosets") = cap::kDefaultMaxCosets);
  m.def("classify",
        [](const std::string& text) {
          return cap::to_string(cap::classify(cap::enumerate(cap::parse(text))));
        },
        py::arg("text"));
  m.def("_analyze",
        [](const std::string& text, std::size_t max_cosets) { return analyze(cap::parse(text), max_cosets); },
        py::arg("text"), py::arg("max_cosets"));
  m.def("_analyze_catalog",
        [](const std::string& name, const std::vector<int>& params, std::size_t max_cosets) {
          return analyze(cap::catalog(name, params), max_cosets);
        },
        py::arg("name"), py::arg("params"), py::arg("max_cosets"));

  m.def("is_prime", &cap::arith::is_prime, py::arg("n"));
  m.def("legendre", &cap::arith::legendre, py::arg("a"), py::arg("p"));
  m.def("quartic", &cap::arith::quartic, py::arg("a"), py::arg("q"));
  m.def("quartic_two", &cap::arith::quartic_two, py::arg("p"));
  m.def("rank_l", &cap::arith::rank_l, py::arg("p"), py::arg("q"), py::arg("r"));
  m.def("_predict_real", [](std::uint64_t p1, std::uint64_t p2, std::uint64_t p3) {
    return cap::report::prediction_json(cap::arith::predict_real(p1, p2, p3), "real", {p1, p2, p3}).dump();
  });
  m.def("_predict_biquadratic", [](std::uint64_t p, int n) {
    return cap::report::prediction_json(cap::arith::predict_biquadratic(p, n), "biq",
                                        {p, static_cast<std::uint64_t>(n)})
        .dump();
  });
  m.def("_verify", [](int max_n, const std::vector<std::string>& families) {
    return cap::report::outcomes_json(cap::verify::run(max_n, families)).dump();
  });
}
