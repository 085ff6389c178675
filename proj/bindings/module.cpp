#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gmpxx.h>

#include "stern/cli.hpp"
#include "stern/extremal.hpp"
#include "stern/genproduct.hpp"
#include "stern/matrixrep.hpp"
#include "stern/oracle.hpp"
#include "stern/poly_json.hpp"
#include "stern/stern_core.hpp"
#include "stern/verify.hpp"

namespace py = pybind11;
using namespace stern;

namespace {

py::int_ to_py_int(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(const py::object& value) {
  const std::string text = py::str(value);
  mpz_class n;
  if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0 || n < 0)
    throw py::value_error("expected a nonnegative integer");
  return n;
}

Parity parse_parity(const std::string& which) {
  if (which == "odd") return Parity::odd;
  if (which == "even") return Parity::even;
  throw py::value_error("which must be 'odd' or 'even'");
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw py::value_error("expected a rational like '3' or '-2/7'");
  q.canonicalize();
  return q;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact base-b Stern polynomial engine";

  py::register_exception<OverflowError>(m, "Overflow", PyExc_OverflowError);
  py::register_exception<ParseError>(m, "PolyParseError", PyExc_ValueError);

  py::class_<SternPoly>(m, "SternPoly")
      .def_property_readonly("base", &SternPoly::base)
      .def("__str__", &SternPoly::text)
      .def("__repr__",
           [](const SternPoly& p) {
             return "SternPoly(base=" + std::to_string(p.base()) + ", '" +
                    p.text() + "')";
           })
      .def("__eq__", [](const SternPoly& a, const SternPoly& b) { return a == b; },
           py::is_operator())
      .def("__add__", [](const SternPoly& a, const SternPoly& b) { return a + b; })
      .def("__mul__", [](const SternPoly& a, const SternPoly& b) { return a * b; })
      .def("__len__", &SternPoly::term_count)
      .def("frobenius", &SternPoly::frobenius, py::arg("d"),
           "apply z_j -> z_j^{t_j^d}")
      .def("text", &SternPoly::text)
      .def("json_text",
           [](const SternPoly& p) { return poly_to_json(p).dump(); })
      .def("evaluate",
           [](const SternPoly& p, const std::vector<std::string>& z,
              const std::vector<std::uint64_t>& t) {
             std::vector<mpq_class> zq;
             zq.reserve(z.size());
             for (const std::string& s : z) zq.push_back(parse_rational(s));
             return p.evaluate(zq, t).get_str();
           },
           py::arg("z"), py::arg("t"),
           "exact evaluation; z entries are rational strings")
      .def("evaluate_at_ones",
           [](const SternPoly& p) { return p.evaluate_at_ones().get_str(); })
      .def("coefficients_all_one", &SternPoly::coefficients_all_one)
      .def("is_zero", &SternPoly::is_zero);

  m.def("parse_poly", [](const std::string& text, int base) {
    return SternPoly::parse(text, base);
  });
  m.def("stern_poly", [](std::uint64_t n, int base) {
    return stern_poly(n, base);
  });
  m.def("oracle_poly", &oracle_poly);
  m.def("stern_via_matrix",
        [](std::uint64_t n, int base) { return stern_via_matrix(n, base); });
  m.def("specialize_z1", &specialize_z1);
  m.def("finite_product_lhs", [](int base, int N, const std::string& mode) {
    if (mode != "symbolic" && mode != "numeric")
      throw py::value_error("mode must be 'symbolic' or 'numeric'");
    return finite_product_lhs(
        base, N,
        mode == "symbolic" ? ExponentMode::symbolic : ExponentMode::numeric);
  });
  m.def("finite_product_rhs", &finite_product_rhs);

  m.def("stern_count",
        [](std::uint64_t n, int base) { return stern_count(n, base); });
  m.def("stern_count_big", [](const py::object& n, int base) {
    return to_py_int(stern_count_big(to_mpz(n), base));
  });
  m.def("stern_count_digits", [](const std::vector<int>& digits, int base) {
    return to_py_int(stern_count_big(DigitString{base, digits}));
  });

  m.def("enumerate_expansions", [](std::uint64_t n, int base) {
    std::vector<std::vector<int>> out;
    for (const Expansion& h : enumerate_expansions(n, base))
      out.push_back(h.mults);
    return out;
  });

  m.def("fib", [](unsigned k) { return to_py_int(fib(k)); });
  m.def("a_index",
        [](unsigned k, int base) { return to_py_int(a_index(k, base)); });
  m.def("a_digits",
        [](unsigned k, int base) { return a_digits(k, base).digits; });
  m.def("max_scan", [](unsigned k, int base) {
    const MaxScanResult r = max_scan(k, base);
    return py::make_tuple(r.max_value, r.argmin_index);
  });
  m.def("thm_rec_check", &thm_rec_check);
  m.def("multiplicity_support_check", &multiplicity_support_check);
  m.def("cf_verify", [](unsigned l, int base, const std::string& which) {
    return cf_verify(l, base, parse_parity(which));
  });
  m.def("convergent", [](int base, unsigned l, const std::string& which) {
    const CFNode node = parse_parity(which) == Parity::odd
                            ? cf_odd(base, l)
                            : cf_even(base, l);
    const RationalPair folded = cf_fold(node);
    return py::make_tuple(folded.num(), folded.den());
  });
  m.def("convergent_at_ones",
        [](int base, unsigned l, const std::string& which) {
          const CFNode node = parse_parity(which) == Parity::odd
                                  ? cf_odd(base, l)
                                  : cf_even(base, l);
          const mpq_class v = cf_fold_at_ones(node);
          return py::make_tuple(to_py_int(mpz_class(v.get_num())),
                                to_py_int(mpz_class(v.get_den())));
        });
  m.def("max_order_ratio", &max_order_ratio);
  m.def("max_order_constant", &max_order_constant);

  m.def("run_verify",
        [](const std::string& suite, int base_max, std::uint64_t n_max,
           unsigned l_max, int trials) {
          verify::Options options;
          options.base_max = base_max;
          options.n_max = n_max;
          options.cf_l_max = l_max;
          options.trials = trials;
          py::list out;
          for (const verify::Check& c : verify::run_suite(suite, options)) {
            py::dict d;
            d["suite"] = c.suite;
            d["identity"] = c.name;
            d["params"] = c.params;
            d["pass"] = c.pass;
            d["lhs"] = c.lhs;
            d["rhs"] = c.rhs;
            out.append(d);
          }
          return out;
        },
        py::arg("suite") = "all", py::arg("base_max") = 3,
        py::arg("n_max") = 128, py::arg("l_max") = 3, py::arg("trials") = 20);
}
