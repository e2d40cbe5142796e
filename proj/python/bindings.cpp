#include "sbcas/cli.hpp"
#include "sbcas/diff.hpp"
#include "sbcas/factor.hpp"
#include "sbcas/harness.hpp"
#include "sbcas/ratnorm.hpp"
#include "sbcas/syntax.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace sbcas;

namespace {

Lang lang_of(const std::string& name) {
  if (auto l = lang_from_string(name)) return *l;
  throw py::value_error("unknown language '" + name + "' (int, ratexpr, ratfun, diffexpr)");
}

Format format_of(const std::string& name) {
  if (auto f = format_from_string(name)) return *f;
  throw py::value_error("unknown format '" + name + "' (infix, sexpr, json)");
}

BigInt to_bigint(const py::int_& n) { return BigInt::parse(py::str(n).cast<std::string>()); }

py::int_ to_pyint(const BigInt& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.to_string().c_str(), nullptr, 10));
}

py::object to_fraction(const BigRat& q) {
  return py::module_::import("fractions").attr("Fraction")(to_pyint(q.num()), to_pyint(q.den()));
}

// Accepts int, fractions.Fraction or a string such as "3/4" or "0.25".
BigRat to_bigrat(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return BigRat::parse(v.cast<std::string>());
  if (py::isinstance<py::int_>(v)) return BigRat(to_bigint(v.cast<py::int_>()));
  if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator")) {
    return BigRat(to_bigint(v.attr("numerator")), to_bigint(v.attr("denominator")));
  }
  throw py::type_error("expected int, Fraction or str");
}

template <class T>
py::object opt(const std::optional<T>& v) {
  if (!v) return py::none();
  return py::cast(*v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Syntax-based algorithms over exact arithmetic";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<PredicateViolation> predicate_violation(m, "PredicateViolation", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const PredicateViolation& e) {
      py::set_error(predicate_violation, e.what());
    }
  });

  py::class_<Term>(m, "Term")
      .def("__str__", [](const Term& t) { return print(t); })
      .def("__repr__", [](const Term& t) { return "Term('" + print(t) + "')"; })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", [](const Term& t) { return std::hash<std::string>{}(print(t, Format::Sexpr)); })
      .def("sexpr", [](const Term& t) { return print(t, Format::Sexpr); })
      .def("json", [](const Term& t) { return print(t, Format::Json); })
      .def("format", [](const Term& t, const std::string& f) { return print(t, format_of(f)); }, py::arg("format"))
      .def_property_readonly("size", &Term::size);

  m.def("parse", [](const std::string& src, const std::string& lang) { return parse(src, lang_of(lang)); },
        py::arg("src"), py::arg("lang") = "ratexpr");

  m.def("is_prime", [](const py::int_& n) { return is_prime(to_bigint(n)); });
  m.def(
      "factor_int",
      [](const py::int_& n) {
        const auto pf = factor_int(to_bigint(n));
        py::list fs;
        for (const auto& [p, e] : pf.factors) fs.append(py::make_tuple(to_pyint(p), e));
        return py::make_tuple(pf.sign, fs);
      },
      "(sign, [(prime, exponent), ...]) with primes ascending");
  m.def(
      "factor",
      [](const py::int_& n) { return opt(factor(Term::int_lit(to_bigint(n)))); },
      "Signed prime decomposition term of a numeral; None for negative input");
  m.def("maple", [](const py::int_& n) { return to_maple_list(factor_int(to_bigint(n))); });

  m.def("is_rat_expr", &is_rat_expr);
  m.def("is_rat_fun", &is_rat_fun);
  m.def("is_diff_expr", &is_diff_expr);
  m.def("is_norm", &is_norm);
  m.def("is_quasinorm", &is_quasinorm);
  m.def("norm_rat_expr", [](const Term& t) { return opt(norm_rat_expr(t)); });
  m.def("norm_rat_fun", [](const Term& t) { return opt(norm_rat_fun(t)); });
  m.def("eval_rat_at", [](const Term& t, const py::handle& a) -> py::object {
    const auto v = eval_rat_at(is_rat_fun(t) ? *body(t) : t, to_bigrat(a));
    return v ? to_fraction(*v) : py::none();
  });

  m.def("diff", [](const Term& t) { return opt(diff(t)); });
  m.def("simplify", &simplify);
  m.def("eval_real", [](const Term& t, double a) { return opt(eval_real(t, a)); });
  m.def("deriv_numeric", [](const Term& t, double a) { return opt(deriv_numeric(t, a)); });
  m.def(
      "domain_sample",
      [](const Term& t, double lo, double hi, int n) {
        py::list out;
        for (const auto& p : domain_sample(t, lo, hi, n)) {
          out.append(py::make_tuple(p.point, p.status == Definedness::Defined));
        }
        return out;
      },
      py::arg("t"), py::arg("lo"), py::arg("hi"), py::arg("n"));

  m.def(
      "check",
      [](const std::string& suite, std::uint64_t seed, int cases, int max_depth, int coeff_bound) {
        GenConfig cfg{seed, max_depth, coeff_bound, cases};
        Report r;
        if (suite == "factor") {
          r = check_spec_factor(cfg);
        } else if (suite == "norm-expr") {
          r = check_spec_norm_rat_expr(cfg);
        } else if (suite == "norm-fun") {
          r = check_spec_norm_rat_fun(cfg);
        } else if (suite == "diff") {
          r = check_spec_diff(cfg);
        } else if (suite == "disquote") {
          r = check_disquotation(cfg);
        } else {
          throw py::value_error("unknown suite '" + suite + "'");
        }
        return py::module_::import("json").attr("loads")(r.json());
      },
      py::arg("suite"), py::arg("seed") = 1, py::arg("cases") = 500, py::arg("max_depth") = 6,
      py::arg("coeff_bound") = 12, "Run one property suite; returns the report as a dict");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "(exit code, stdout, stderr) of one command line");
}
