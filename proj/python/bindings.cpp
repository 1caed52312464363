#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadcomp/binomial_det.hpp"
#include "quadcomp/decomposition.hpp"
#include "quadcomp/dickson.hpp"
#include "quadcomp/diophantine.hpp"
#include "quadcomp/errors.hpp"
#include "quadcomp/poly_core.hpp"
#include "quadcomp/poly_io.hpp"

namespace py = pybind11;
using namespace quadcomp;

namespace {

// Rationals cross the boundary as fractions.Fraction; polynomials as text.
py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator().get_str())), py::int_(py::str(r.denominator().get_str())));
}

Rational from_py(const py::handle& value) { return Rational::parse(py::str(value).cast<std::string>()); }

py::dict decomposition_dict(const Decomposition& d) {
  py::dict params;
  if (const auto* c = std::get_if<case_tag::Cyclic>(&d.tag)) params["d"] = c->d;
  if (const auto* c = std::get_if<case_tag::CaseFour>(&d.tag)) params["c"] = to_fraction(c->c);
  py::dict out;
  out["g"] = format_poly(d.g);
  out["h"] = format_poly(d.h);
  out["case"] = case_name(d.tag);
  out["params"] = params;
  return out;
}

py::list decomposition_list(const std::vector<Decomposition>& ds) {
  py::list out;
  for (const auto& d : ds) out.append(decomposition_dict(d));
  return out;
}

py::dict verdict_dict(const FinitenessVerdict& v) {
  py::list conditions;
  for (const auto& c : v.conditions) conditions.append(py::make_tuple(c.name, c.ok));
  py::dict out;
  out["status"] = status_name(v.status);
  out["conditions"] = conditions;
  return out;
}

}  // namespace

PYBIND11_MODULE(_quadcomp, m) {
  m.doc() = "Exact quadrinomial decomposition and finiteness checks";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("normalize", [](const std::string& f) { return format_poly(parse_poly(f)); },
        "Canonical text form of a polynomial.");
  m.def("compose", [](const std::string& g, const std::string& h) { return format_poly(compose(parse_poly(g), parse_poly(h))); });
  m.def("radical", [](const std::string& f) { return format_poly(radical(parse_poly(f))); });
  m.def("evaluate", [](const std::string& f, const py::object& at) { return to_fraction(parse_poly(f).evaluate(from_py(at))); });

  m.def(
      "decompose",
      [](const std::string& f, bool include_trivial) {
        const SparsePoly p = parse_poly(f);
        auto ds = decompose_oracle(p);
        if (include_trivial) {
          auto trivial = trivial_decompositions(p);
          ds.insert(ds.end(), trivial.begin(), trivial.end());
          std::sort(ds.begin(), ds.end(), canonical_less);
        }
        return decomposition_list(ds);
      },
      py::arg("f"), py::arg("include_trivial") = false);
  m.def("classify", [](const std::string& f) {
    return decomposition_list(classify_quadrinomial(Quadrinomial::from_poly(parse_poly(f))));
  });

  m.def("dickson", [](unsigned n, const py::object& a) { return format_poly(dickson({n, from_py(a)})); });
  m.def("dickson_match", [](const std::string& f) -> py::object {
    const auto match = dickson_match(parse_poly(f));
    if (!match) return py::none();
    py::dict out;
    out["u"] = to_fraction(match->u);
    out["v"] = to_fraction(match->v);
    out["gamma"] = to_fraction(match->gamma);
    out["gamma_zero"] = match->gamma_zero;
    return out;
  });

  m.def("gv_determinant", [](std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
    const auto r = gv_determinant(IndexSequences(std::move(a), std::move(b)));
    return py::make_tuple(py::int_(py::str(r.value.get_str())), r.dominance);
  });
  m.def("mason_stothers", [](const std::string& a, const std::string& b, const std::string& c) {
    const auto r = mason_stothers_check(parse_poly(a), parse_poly(b), parse_poly(c));
    return py::make_tuple(r.max_deg, r.rad_deg, r.holds);
  });

  m.def("theorem_a", [](const std::string& f, const std::string& g) {
    return verdict_dict(
        theorem_a_verdict(Quadrinomial::from_poly(parse_poly(f)), Quadrinomial::from_poly(parse_poly(g))));
  });
  m.def("theorem_b", [](const std::string& f, const std::string& g) {
    return verdict_dict(theorem_b_verdict(LacunaryProfile::from_poly(parse_poly(f)), parse_poly(g)));
  });
  m.def(
      "search_solutions",
      [](const std::string& f, const std::string& g, std::int64_t bound, std::int64_t max_bound) {
        const SparsePoly pf = parse_poly(f);
        const SparsePoly pg = parse_poly(g);
        py::gil_scoped_release release;
        return search_solutions(pf, pg, bound, max_bound);
      },
      py::arg("f"), py::arg("g"), py::arg("bound"), py::arg("max_bound") = kDefaultSearchLimit);
}
