#include "mig/errors.hpp"
#include "mig/ops.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

mig::Json from_py(const py::object &doc) {
  const auto text = py::module_::import("json").attr("dumps")(doc).cast<std::string>();
  return mig::parse_json_text(text, "<python>");
}

py::object to_py(const mig::Json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(pymig, m) {
  m.doc() = "Multiple-interval reductions, exact oracles and the verification harness";

  py::register_exception<mig::Error>(m, "Error", PyExc_ValueError);

  m.def("reduction_names", &mig::reduction_names);
  m.def("verify_names", &mig::verify_names);
  m.def("solve_problem_names", &mig::solve_problem_names);

  m.def(
      "gen",
      [](const std::string &kind, std::size_t n, std::size_t k, std::size_t blues, double p, const std::string &planted,
         std::uint64_t seed) {
        mig::GenRequest req;
        req.kind = kind;
        req.n = n;
        req.k = k;
        req.blues = blues;
        req.p = p;
        req.planted = mig::planted_from_string(planted);
        req.seed = seed;
        return to_py(mig::generate_document(req));
      },
      py::arg("kind"), py::arg("n"), py::arg("k"), py::arg("blues") = 0, py::arg("p") = 0.5,
      py::arg("planted") = "random", py::arg("seed") = 1);

  m.def(
      "reduce",
      [](const std::string &name, const py::object &source, std::optional<std::size_t> d,
         std::optional<std::size_t> k) { return to_py(mig::to_json(mig::reduce_by_name(name, from_py(source), d, k))); },
      py::arg("name"), py::arg("source"), py::arg("d") = py::none(), py::arg("k") = py::none());

  m.def(
      "solve",
      [](const std::string &problem, const py::object &doc, std::size_t k, std::optional<std::size_t> l,
         std::optional<std::size_t> d, const std::string &variant, bool exact, bool complement) {
        mig::SolveRequest req;
        req.problem = problem;
        req.k = k;
        req.l = l;
        req.d = d;
        req.variant = mig::dom_variant_from_string(variant);
        req.exact = exact;
        req.complement = complement;
        return to_py(mig::solve_document(req, from_py(doc)));
      },
      py::arg("problem"), py::arg("doc"), py::arg("k"), py::arg("l") = py::none(), py::arg("d") = py::none(),
      py::arg("variant") = "plain", py::arg("exact") = false, py::arg("complement") = false);

  m.def(
      "verify",
      [](const std::string &name, std::size_t trials, std::uint64_t seed, std::optional<std::size_t> d) {
        mig::VerifyOptions opt;
        opt.trials = trials;
        opt.seed = seed;
        opt.d = d;
        mig::VerifyReport rep;
        {
          py::gil_scoped_release release;
          rep = mig::verify_reduction(name, opt);
        }
        return to_py(mig::to_json(rep));
      },
      py::arg("name"), py::arg("trials") = 25, py::arg("seed") = 1, py::arg("d") = py::none());

  m.def(
      "render",
      [](const py::object &doc, const std::string &format, int density) {
        return mig::render_document(from_py(doc), mig::render_format_from_string(format), density);
      },
      py::arg("doc"), py::arg("format") = "ascii", py::arg("density") = 0);
}
