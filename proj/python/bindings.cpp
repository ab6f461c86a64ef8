// Thin string-in, string-out bindings; formulas and terms travel as text.
#include "fixkit/extract.hpp"
#include "fixkit/goedel.hpp"
#include "fixkit/hierarchy.hpp"
#include "fixkit/pipeline.hpp"
#include "fixkit/satisfaction.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fixkit;

namespace {

py::int_ to_py(const Nat& n) {
  std::string s = n.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

Nat from_py(const py::int_& i) { return Nat(py::str(i).cast<std::string>()); }

Semantics semantics(unsigned bound, std::uint64_t fuel) {
  Semantics s;
  s.bound = bound;
  s.fuel = Fuel{fuel};
  return s;
}

py::dict eval_term(const std::string& text, std::uint64_t fuel) {
  EvalResult r = eval(parse_term(text), Fuel{fuel});
  py::dict out;
  const char* status = r.ok() ? "value" : r.status == EvalResult::Status::stuck ? "stuck" : "fuel_exhausted";
  out["status"] = status;
  out["steps"] = r.steps;
  if (r.is_nat())
    out["value"] = to_py(r.value->n);
  else if (r.ok())
    out["value"] = to_string(r.value);
  else
    out["value"] = py::none();
  return out;
}

std::string eval_formula_text(const std::string& text, const std::map<unsigned, py::int_>& env, unsigned bound,
                              std::uint64_t fuel) {
  std::map<Var, Nat> e;
  for (const auto& [k, v] : env) e.emplace(Var{k}, from_py(v));
  return truth_name(eval_formula(parse_formula(text), e, semantics(bound, fuel)));
}

py::dict check_text(const std::string& text) {
  CheckResult r = check(parse_derivation(text));
  py::dict out;
  out["ok"] = r.ok;
  out["line"] = r.ok ? py::object(py::none()) : py::object(py::int_(r.line + 1));
  out["reason"] = r.reason;
  return out;
}

py::dict pipeline_text(const std::string& text) {
  Derivation d = parse_derivation(text);
  PipelineReport r = pipeline(d.conclusion(), d);
  py::dict out;
  for (const auto& s : r.sections) {
    py::dict sec;
    for (const auto& [k, v] : s.entries) sec[py::str(k)] = v;
    out[py::str(s.name)] = sec;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fixkit core: partial terms, realizability and the Lambda hierarchy";

  py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  py::register_exception<KernelError>(m, "KernelError", PyExc_ValueError);
  py::register_exception<PipelineError>(m, "PipelineError", PyExc_RuntimeError);

  m.def("normal_form", [](const std::string& s) { return to_string(parse_formula(s)); },
        "Parse a formula and print it back.");
  m.def("free_vars", [](const std::string& s) {
    std::vector<unsigned> out;
    for (Var v : free_vars(parse_formula(s))) out.push_back(v.index);
    return out;
  });
  m.def("classify", [](const std::string& s) { return classify(parse_formula(s)); },
        "Least n with the formula in level n, or None outside the almost negative fragment.");
  m.def("is_nf", [](const std::string& s, unsigned n) { return is_nf(parse_formula(s), n); });
  m.def("normalize", [](const std::string& s, unsigned n) { return to_string(normalize(parse_formula(s), n)); });

  m.def("encode_formula", [](const std::string& s) { return to_py(encode(parse_formula(s)).value); });
  m.def("encode_term", [](const std::string& s) { return to_py(encode(parse_term(s)).value); });
  m.def("decode_formula", [](const py::int_& c) { return to_string(decode_formula(Code{from_py(c)})); });
  m.def("decode_term", [](const py::int_& c) { return to_string(decode_term(Code{from_py(c)})); });

  m.def("eval_term", &eval_term, py::arg("term"), py::arg("fuel") = 100000);
  m.def("eval_formula", &eval_formula_text, py::arg("formula"), py::arg("env") = std::map<unsigned, py::int_>{},
        py::arg("bound") = 6, py::arg("fuel") = 100000);
  m.def("lambda_abstract", [](unsigned x, const std::string& t) {
    return to_string(lambda_abstract(Var{x}, parse_term(t)));
  });

  m.def("realize", [](const std::string& tau, const std::string& phi) {
    return to_string(realize(parse_term(tau), parse_formula(phi)));
  });
  m.def("diagonalize", [](const std::string& phi, unsigned n) {
    return to_string(diagonalize(parse_formula(phi), n));
  });

  m.def("check", &check_text, "Check a derivation given in the text format.");
  m.def("extract", [](const std::string& text) { return to_string(extract(parse_derivation(text)).realizer); });
  m.def("pipeline", &pipeline_text, "Run the pipeline on a derivation's own conclusion.");
}
