// Python bindings for the core operations. Exact integers cross the boundary
// as python ints, rationals as fractions.Fraction; no floating point.

#include <bilaguerre/congruence.hpp>
#include <bilaguerre/laguerre.hpp>
#include <bilaguerre/pde.hpp>
#include <bilaguerre/poly.hpp>
#include <bilaguerre/rook.hpp>
#include <bilaguerre/structure.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace bilag;

namespace pybind11::detail {

// mpz_class <-> int, exact via decimal strings.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

// Rational <-> fractions.Fraction (ints accepted on the way in).
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

  bool load(handle src, bool convert) {
    if (PyLong_Check(src.ptr())) {
      make_caster<mpz_class> num;
      if (!num.load(src, convert)) return false;
      value = Rational(cast_op<mpz_class&&>(std::move(num)));
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator"))
      return false;
    make_caster<mpz_class> num, den;
    if (!num.load(src.attr("numerator"), convert)) return false;
    if (!den.load(src.attr("denominator"), convert)) return false;
    value = Rational(cast_op<mpz_class&&>(std::move(num)),
                     cast_op<mpz_class&&>(std::move(den)));
    return true;
  }

  static handle cast(const Rational& v, return_value_policy policy,
                     handle parent) {
    object fraction = module_::import("fractions").attr("Fraction");
    object num = reinterpret_steal<object>(
        make_caster<mpz_class>::cast(v.num(), policy, parent));
    object den = reinterpret_steal<object>(
        make_caster<mpz_class>::cast(v.den(), policy, parent));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

Statement statement_arg(const std::string& name) {
  auto st = statement_from_name(name);
  if (!st) throw py::value_error("unknown statement: " + name);
  return *st;
}

py::object witness_to_py(const CongruenceReport& r) {
  if (!r.witness) return py::none();
  py::dict d;
  if (r.witness->monomial)
    d["monomial"] =
        py::make_tuple(r.witness->monomial->x, r.witness->monomial->y);
  else
    d["monomial"] = py::none();
  d["lhs_residue"] = py::cast(r.witness->lhs_residue);
  d["rhs_residue"] = py::cast(r.witness->rhs_residue);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact two-variable Laguerre polynomials and congruence checks";

  py::register_exception<NonIntegralError>(m, "NonIntegralError",
                                           PyExc_ValueError);
  py::register_exception<PolyParseError>(m, "PolyParseError", PyExc_ValueError);
  py::register_exception<DegreeTooLargeError>(m, "DegreeTooLargeError",
                                              PyExc_ValueError);
  py::register_exception<BoundExceededError>(m, "BoundExceededError",
                                             PyExc_ValueError);

  py::class_<UniPoly>(m, "UniPoly")
      .def("degree", &UniPoly::degree)
      .def("coeff", &UniPoly::coeff, py::arg("exponent"))
      .def("eval", &UniPoly::eval, py::arg("x"))
      .def("derivative", &UniPoly::derivative)
      .def("is_zero", &UniPoly::is_zero)
      .def("__eq__", [](const UniPoly& a, const UniPoly& b) { return a == b; })
      .def("__add__", [](const UniPoly& a, const UniPoly& b) { return a + b; })
      .def("__sub__", [](const UniPoly& a, const UniPoly& b) { return a - b; })
      .def("__mul__", [](const UniPoly& a, const UniPoly& b) { return a * b; })
      .def("__repr__", [](const UniPoly& p) { return to_pretty_string(p); });

  py::class_<BiPoly>(m, "BiPoly")
      .def("total_degree", &BiPoly::total_degree)
      .def("coeff", &BiPoly::coeff, py::arg("x_exp"), py::arg("y_exp"))
      .def("eval", &BiPoly::eval, py::arg("x"), py::arg("y"))
      .def("is_zero", &BiPoly::is_zero)
      .def("swap_variables", &BiPoly::swap_variables)
      .def("__eq__", [](const BiPoly& a, const BiPoly& b) { return a == b; })
      .def("__add__", [](const BiPoly& a, const BiPoly& b) { return a + b; })
      .def("__sub__", [](const BiPoly& a, const BiPoly& b) { return a - b; })
      .def("__mul__", [](const BiPoly& a, const BiPoly& b) { return a * b; })
      .def("__repr__", [](const BiPoly& p) { return to_pretty_string(p); });

  py::class_<IntBiPoly>(m, "IntBiPoly")
      .def("total_degree", &IntBiPoly::total_degree)
      .def("coeff", &IntBiPoly::coeff, py::arg("x_exp"), py::arg("y_exp"))
      .def("is_zero", &IntBiPoly::is_zero)
      .def("terms",
           [](const IntBiPoly& p) {
             py::dict d;
             for (const auto& [mono, c] : p.terms())
               d[py::make_tuple(mono.x, mono.y)] = py::cast(c);
             return d;
           })
      .def("__eq__",
           [](const IntBiPoly& a, const IntBiPoly& b) { return a == b; });

  py::class_<CongruenceReport>(m, "CongruenceReport")
      .def_property_readonly(
          "statement",
          [](const CongruenceReport& r) { return statement_name(r.statement); })
      .def_property_readonly(
          "modulus", [](const CongruenceReport& r) { return r.modulus; })
      .def_readonly("holds", &CongruenceReport::holds)
      .def_property_readonly("witness", &witness_to_py)
      .def("to_json", [](const CongruenceReport& r) { return report_to_json(r); })
      .def("__repr__", [](const CongruenceReport& r) { return report_to_json(r); });

  py::class_<SweepBounds>(m, "SweepBounds")
      .def(py::init([](unsigned max_n, unsigned max_m, unsigned max_p,
                       unsigned max_q, unsigned max_alpha) {
             return SweepBounds{max_n, max_m, max_p, max_q, max_alpha};
           }),
           py::arg("max_n") = 4, py::arg("max_m") = 4, py::arg("max_p") = 4,
           py::arg("max_q") = 4, py::arg("max_alpha") = 3)
      .def_readwrite("max_n", &SweepBounds::max_n)
      .def_readwrite("max_m", &SweepBounds::max_m)
      .def_readwrite("max_p", &SweepBounds::max_p)
      .def_readwrite("max_q", &SweepBounds::max_q)
      .def_readwrite("max_alpha", &SweepBounds::max_alpha);

  py::class_<SweepSummary>(m, "SweepSummary")
      .def_property_readonly(
          "statement",
          [](const SweepSummary& s) { return statement_name(s.statement); })
      .def_readonly("checked", &SweepSummary::checked)
      .def_readonly("failed", &SweepSummary::failed)
      .def_readonly("elapsed_ms", &SweepSummary::elapsed_ms)
      .def_property_readonly("failures",
                             [](const SweepSummary& s) {
                               py::list out;
                               for (const auto& f : s.failures)
                                 out.append(py::make_tuple(
                                     py::cast(f.tuple), py::cast(f.report)));
                               return out;
                             })
      .def("to_json", [](const SweepSummary& s) { return summary_to_json(s); })
      .def("__repr__", [](const SweepSummary& s) { return summary_to_json(s); });

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("n", &Certificate::n)
      .def_readonly("m", &Certificate::m)
      .def_readonly("diagonal_ok", &Certificate::diagonal_ok)
      .def_readonly("core_degree", &Certificate::core_degree)
      .def_property_readonly("core_irreducible",
                             [](const Certificate& c) {
                               return core_irreducibility_name(
                                   c.core_irreducible);
                             })
      .def_property_readonly(
          "conclusion",
          [](const Certificate& c) { return conclusion_name(c.conclusion); })
      .def("to_json", [](const Certificate& c) { return certificate_to_json(c); })
      .def("__repr__", [](const Certificate& c) { return certificate_to_json(c); });

  py::class_<RookVector>(m, "RookVector")
      .def_readonly("n", &RookVector::n)
      .def_readonly("counts", &RookVector::counts);

  // construction
  m.def("laguerre_alpha", &laguerre_alpha, py::arg("n"), py::arg("alpha"));
  m.def("bilaguerre", &bilaguerre, py::arg("n"), py::arg("m"));
  m.def("bilaguerre_via_x", &bilaguerre_via_x, py::arg("n"), py::arg("m"));
  m.def("bilaguerre_via_y", &bilaguerre_via_y, py::arg("n"), py::arg("m"));
  m.def("bilaguerre_rodrigues", &bilaguerre_rodrigues, py::arg("n"),
        py::arg("m"));
  m.def("product_laguerre_2", &product_laguerre_2, py::arg("n"),
        py::arg("alpha"), py::arg("m"), py::arg("beta"));
  m.def("substitute_diagonal",
        [](const BiPoly& p) { return substitute_diagonal(p); }, py::arg("p"));
  m.def("to_integer_poly", [](const BiPoly& p) { return to_integer_poly(p); },
        py::arg("p"));
  m.def("serialize", [](const BiPoly& p) { return serialize(p); }, py::arg("p"));
  m.def("parse_bipoly", [](const std::string& s) { return parse_bipoly(s); },
        py::arg("text"));

  // congruence checks
  m.def("check_carlitz", &check_carlitz, py::arg("n"), py::arg("m"),
        py::arg("alpha"));
  m.def("check_pochhammer_congruence", &check_pochhammer_congruence,
        py::arg("n"), py::arg("m"), py::arg("t"), py::arg("l"), py::arg("p"),
        py::arg("q"));
  m.def("check_parameter_shift", &check_parameter_shift, py::arg("n"),
        py::arg("m"), py::arg("q"), py::arg("i"), py::arg("p"));
  m.def("check_alpha_periodicity", &check_alpha_periodicity, py::arg("n"),
        py::arg("m"), py::arg("q"));
  m.def("check_binomial_pochhammer", &check_binomial_pochhammer, py::arg("m"),
        py::arg("n"), py::arg("q"), py::arg("i"), py::arg("p"));
  m.def("check_binomial_product", &check_binomial_product, py::arg("m"),
        py::arg("s"), py::arg("q"), py::arg("i"),
        py::arg("with_factorial") = true);
  m.def("check_main_theorem", &check_main_theorem, py::arg("n"), py::arg("m"),
        py::arg("p"), py::arg("q"));
  m.def(
      "sweep",
      [](const std::string& statement, const SweepBounds& bounds,
         unsigned jobs) { return sweep(statement_arg(statement), bounds, jobs); },
      py::arg("statement"), py::arg("bounds") = SweepBounds{},
      py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());

  // differential equations
  m.def("ode_residual", &ode_residual, py::arg("n"), py::arg("alpha"));
  m.def("pde_residuals",
        [](unsigned n, unsigned m) {
          ResidualPair r = pde_residuals(n, m);
          return py::make_tuple(r.row1, r.row2);
        },
        py::arg("n"), py::arg("m"));
  m.def("product_pde_residual", &product_pde_residual, py::arg("n"),
        py::arg("alpha"), py::arg("m"), py::arg("beta"));

  // structure
  m.def("diagonal_identity_check", &diagonal_identity_check, py::arg("n"),
        py::arg("m"));
  m.def("kronecker_irreducible", &kronecker_irreducible, py::arg("p"),
        py::arg("max_degree") = kKroneckerDegreeBound);
  m.def("irreducibility_certificate", &irreducibility_certificate,
        py::arg("n"), py::arg("m"));

  // rook counts
  m.def("rook_polynomial_from_laguerre", &rook_polynomial_from_laguerre,
        py::arg("n"));
  m.def("rook_numbers_bruteforce", &rook_numbers_bruteforce, py::arg("n"),
        py::arg("bound") = kRookBruteForceBound);
  m.def("bilaguerre_rook_transform", &bilaguerre_rook_transform, py::arg("n"),
        py::arg("m"));
}
