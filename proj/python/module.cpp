#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bosonic/braid.hpp"
#include "bosonic/braidaction.hpp"
#include "bosonic/pbw.hpp"
#include "bosonic/text.hpp"
#include "bosonic/verify.hpp"

namespace py = pybind11;
using namespace bosonic;

namespace {

std::map<std::string, std::string> expansion_dict(const PbwExpansion& e) {
  std::map<std::string, std::string> out;
  for (const auto& [d, c] : e) out.emplace(pbw_index_to_string(d), c.to_q_string());
  return out;
}

Element to_element(const py::object& o) {
  if (py::isinstance<Element>(o)) return o.cast<Element>();
  if (py::isinstance<py::str>(o)) return parse_element(o.cast<std::string>());
  if (py::isinstance<py::int_>(o)) return Element(RatFunc(o.cast<long>()));
  throw py::type_error("expected Element, str or int");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<GuardrailError>(m, "GuardrailError");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<CartanDatum>(m, "CartanDatum")
      .def(py::init(&CartanDatum::from_name), py::arg("name"))
      .def_property_readonly("name", &CartanDatum::name)
      .def_property_readonly("rank", &CartanDatum::rank)
      .def("c", &CartanDatum::c)
      .def("d", &CartanDatum::d)
      .def("m", &CartanDatum::m)
      .def("pairing", &CartanDatum::pairing)
      .def("positive_roots", &CartanDatum::positive_roots)
      .def("longest_word", [](const CartanDatum& cd) { return longest_word(cd); })
      .def("dual_index", [](const CartanDatum& cd, Node i) { return dual_index(i, cd); })
      .def("locally_reduced_sequence",
           [](const CartanDatum& cd, const IndexWord& prefix, int n) { return locally_reduced_sequence(cd, prefix, n); })
      .def("__repr__", [](const CartanDatum& cd) { return "CartanDatum('" + cd.name() + "')"; });

  py::class_<Element>(m, "Element")
      .def(py::init([](const std::string& text) { return parse_element(text); }), py::arg("text"))
      .def_static("letter", &Element::letter)
      .def("is_zero", &Element::is_zero)
      .def("__len__", &Element::size)
      .def("__add__", [](const Element& a, const py::object& b) { return a + to_element(b); })
      .def("__sub__", [](const Element& a, const py::object& b) { return a - to_element(b); })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("scaled", [](const Element& a, const std::string& c) { return a.scaled(parse_scalar(c)); })
      .def("__eq__", [](const Element& a, const py::object& b) { return a == to_element(b); })
      .def("__str__", &Element::to_string)
      .def("__repr__", [](const Element& e) { return "Element('" + e.to_string() + "')"; });

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](const std::string& type, int max_height, const std::string& cache_dir) {
             return new Algebra(CartanDatum::from_name(type), AlgebraOptions{max_height, cache_dir});
           }),
           py::arg("type") = "A2", py::arg("max_height") = 10, py::arg("cache_dir") = "")
      .def_property_readonly("cartan", &Algebra::cartan)
      .def("parse", [](Algebra& A, const std::string& t) { return parse_element(t, A.cartan()); })
      .def("generator", &Algebra::generator)
      .def("normal_form", [](Algebra& A, const py::object& x) { return A.normal_form(to_element(x)); })
      .def("mul", [](Algebra& A, const py::object& x, const py::object& y) { return A.mul(to_element(x), to_element(y)); })
      .def("pow", [](Algebra& A, const py::object& x, int n) { return A.pow(to_element(x), n); })
      .def("weight", [](Algebra& A, const py::object& x) { return A.weight(to_element(x)); })
      .def("form", [](Algebra& A, const py::object& x, const py::object& y) {
        return A.form(to_element(x), to_element(y)).to_q_string();
      })
      .def("star", [](Algebra& A, const py::object& x) { return A.normal_form(A.star(to_element(x))); })
      .def("bar", [](Algebra& A, const py::object& x) { return A.normal_form(A.bar(to_element(x))); })
      .def("shift_D", [](Algebra& A, const py::object& x, int k) { return A.shift_D(to_element(x), k); })
      .def("adjoint_Eprime", [](Algebra& A, Node i, int k, const py::object& x) { return A.adjoint_Eprime(i, k, to_element(x)); })
      .def("adjoint_Estar", [](Algebra& A, Node i, int k, const py::object& x) { return A.adjoint_Estar(i, k, to_element(x)); })
      .def("T", [](Algebra& A, Node i, const py::object& x) { return T(A, i, to_element(x)); })
      .def("T_inv", [](Algebra& A, Node i, const py::object& x) { return T_inv(A, i, to_element(x)); })
      .def(
          "T_word",
          [](Algebra& A, const IndexWord& w, const py::object& x, int sign) { return T_word(A, w, to_element(x), sign); },
          py::arg("word"), py::arg("x"), py::arg("sign") = 1);

  py::class_<Pbw>(m, "Pbw")
      .def(py::init([](Algebra& A, const IndexWord& seq, int xi, int first) {
             return new Pbw(A, PbwDatum{seq, xi, first});
           }),
           py::arg("algebra"), py::arg("seq"), py::arg("xi") = 0, py::arg("first") = 1, py::keep_alive<1, 2>())
      .def("__len__", &Pbw::size)
      .def("root_vectors", &Pbw::root_vectors)
      .def("root_vectors_starred", &Pbw::root_vectors_starred)
      .def("F", &Pbw::F)
      .def("monomial", &Pbw::monomial)
      .def("pair_monomials", [](Pbw& P, const PbwIndex& d, const PbwIndex& e) { return P.pair_monomials(d, e).to_q_string(); })
      .def("straighten", [](Pbw& P, int k, int t) { return expansion_dict(P.straighten(k, t)); })
      .def(
          "membership",
          [](Pbw& P, const py::object& x, int max_deg) -> py::object {
            auto r = P.membership(to_element(x), max_deg);
            if (!r) return py::none();
            return py::cast(expansion_dict(*r));
          },
          py::arg("x"), py::arg("max_deg") = -1);

  m.def("garside_normal_form", [](const std::string& type, const BraidWord& w) {
    const CartanDatum cd = CartanDatum::from_name(type);
    const GarsideForm g = garside_normal_form(cd, w);
    return py::make_tuple(g.delta_power, g.factor_words(cd));
  });
  m.def("braid_equal", [](const std::string& type, const BraidWord& x, const BraidWord& y) {
    return braid_equal(CartanDatum::from_name(type), x, y);
  });
  m.def("braid_gcd", [](const std::string& type, const BraidWord& x, const BraidWord& y) {
    return braid_gcd(CartanDatum::from_name(type), x, y);
  });

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, const std::vector<std::string>& types, int len, int max_deg, int samples) {
        VerifyOptions o;
        o.types = types;
        o.len = len;
        o.max_deg = max_deg;
        o.samples = samples;
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, o);
        }
        py::list checks;
        for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.ok, c.detail));
        py::dict d;
        d["suite"] = r.suite;
        d["ok"] = r.ok();
        d["seconds"] = r.seconds;
        d["checks"] = checks;
        return d;
      },
      py::arg("name"), py::arg("types") = std::vector<std::string>{}, py::arg("len") = -1, py::arg("max_deg") = -1,
      py::arg("samples") = -1);
}
