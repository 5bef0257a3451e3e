#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "irlab/cohomology.hpp"
#include "irlab/errors.hpp"
#include "irlab/golden.hpp"
#include "irlab/groebner.hpp"
#include "irlab/report.hpp"

namespace py = pybind11;

namespace {

irlab::Problem problem_from(const std::string& spec_json) {
  irlab::Json j;
  try {
    j = irlab::Json::parse(spec_json);
  } catch (const irlab::Json::parse_error& e) {
    throw irlab::InputError(e.what());
  }
  return irlab::make_problem(irlab::parse_ring_spec(j));
}

std::string analyze(const std::string& spec, std::uint64_t seed) {
  const auto P = problem_from(spec);
  py::gil_scoped_release nogil;
  return irlab::analyze_report(P, seed).dump();
}

std::string stable(const std::string& spec, std::uint64_t seed, int trials) {
  const auto P = problem_from(spec);
  py::gil_scoped_release nogil;
  auto r = irlab::analyze_report(P, seed);
  irlab::add_stable_value(r, P, seed, trials);
  return r.dump();
}

std::string limit(const std::string& spec, std::uint64_t seed, int n_max, int samples) {
  const auto P = problem_from(spec);
  py::gil_scoped_release nogil;
  auto r = irlab::analyze_report(P, seed);
  irlab::add_alpha_profile(r, P, seed, n_max, samples);
  return r.dump();
}

std::string ir(const std::string& spec, std::uint64_t seed, const std::vector<std::string>& params) {
  const auto P = problem_from(spec);
  py::gil_scoped_release nogil;
  auto r = irlab::analyze_report(P, seed);
  irlab::add_ir(r, P, seed, params);
  return r.dump();
}

std::vector<int> socle_dimensions(const std::string& spec) {
  const auto P = problem_from(spec);
  py::gil_scoped_release nogil;
  return irlab::socle_dimensions(irlab::ModulePresentation::cyclic(P.ideal));
}

std::vector<py::dict> reproduce(const std::string& corpus_dir, std::uint64_t seed, const std::string& filter) {
  std::vector<irlab::GoldenResult> results;
  {
    py::gil_scoped_release nogil;
    const auto corpus = irlab::load_corpus(corpus_dir.empty() ? irlab::default_corpus_dir() : corpus_dir);
    results = irlab::run_golden(corpus, seed, filter);
  }
  std::vector<py::dict> out;
  for (const auto& r : results) {
    py::dict d;
    d["id"] = r.id;
    d["title"] = r.title;
    d["passed"] = r.pass;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_irlab, m) {
  m.doc() = "Native core of irlab; the irlab package wraps these JSON-in, JSON-out entry points.";

  // Registered base first: translators run newest first, so subclasses win.
  auto& base = py::register_exception<irlab::Error>(m, "IrlabError");
  auto& input = py::register_exception<irlab::InputError>(m, "InputError", base.ptr());
  py::register_exception<irlab::ParseError>(m, "ParseError", input.ptr());
  py::register_exception<irlab::ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<irlab::SearchExhausted>(m, "SearchExhausted", base.ptr());
  auto& pre = py::register_exception<irlab::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<irlab::NotSystemOfParameters>(m, "NotSystemOfParameters", pre.ptr());
  py::register_exception<irlab::InternalError>(m, "InternalError", base.ptr());

  m.def("analyze", &analyze, py::arg("spec"), py::arg("seed") = 1);
  m.def("stable", &stable, py::arg("spec"), py::arg("seed") = 1, py::arg("trials") = 5);
  m.def("limit", &limit, py::arg("spec"), py::arg("seed") = 1, py::arg("n_max") = 4, py::arg("samples") = 50);
  m.def("ir", &ir, py::arg("spec"), py::arg("seed") = 1, py::arg("params") = std::vector<std::string>{});
  m.def("socle_dimensions", &socle_dimensions, py::arg("spec"));
  m.def("reproduce", &reproduce, py::arg("corpus_dir") = "", py::arg("seed") = 1, py::arg("filter") = "");
  m.def("set_spair_budget", &irlab::set_spair_budget, py::arg("budget"));
  m.def("spair_budget", &irlab::spair_budget);
  m.attr("__version__") = irlab::version();
}
