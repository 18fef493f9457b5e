#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "closure_lab/cli.hpp"
#include "closure_lab/error.hpp"
#include "closure_lab/expression.hpp"
#include "closure_lab/groebner.hpp"
#include "closure_lab/integrality.hpp"
#include "closure_lab/lab.hpp"
#include "closure_lab/newton_polyhedron.hpp"

namespace py = pybind11;
using namespace closure_lab;

namespace {

// Monomial ideals cross the boundary as lists of exponent tuples; general
// ideals as (vars, generator strings).
mpz_class to_mpz(const py::handle& v) {
  return mpz_class(py::str(v).cast<std::string>());
}

py::int_ to_py(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

ExponentVector to_exponent(const py::sequence& p) {
  std::vector<mpz_class> coords;
  for (auto c : p) coords.push_back(to_mpz(c));
  return ExponentVector(std::move(coords));
}

py::tuple to_tuple(const ExponentVector& e) {
  py::tuple t(e.dim());
  for (std::size_t i = 0; i < e.dim(); ++i) t[i] = to_py(e[i]);
  return t;
}

MonomialIdeal to_ideal(const py::sequence& gens, std::optional<std::size_t> dim) {
  std::vector<ExponentVector> es;
  for (auto g : gens) es.push_back(to_exponent(g.cast<py::sequence>()));
  if (!dim) {
    if (es.empty()) throw PreconditionError("cannot infer the dimension of an empty ideal");
    dim = es.front().dim();
  }
  return minimalize(*dim, es);
}

py::list to_list(const MonomialIdeal& i) {
  py::list out;
  for (const auto& g : i.generators()) out.append(to_tuple(g));
  return out;
}

PolyIdeal to_poly(const std::vector<std::string>& vars,
                  const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars));
  return PolyIdeal(vars.size(), std::move(ps));
}

py::object fraction(const mpq_class& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_py(q.get_num()), to_py(q.get_den()));
}

py::object outcome(const ReductionOutcome& r) {
  if (auto* w = std::get_if<ReductionWitness>(&r)) return py::int_(w->k);
  return py::none();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integral closures and reductions of polynomial ideals.";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  // registered last, so tried first; anything else falls through
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DimensionMismatch& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("minimalize", [](const py::sequence& gens, std::optional<std::size_t> dim) {
    return to_list(to_ideal(gens, dim));
  }, py::arg("gens"), py::arg("dim") = py::none());

  m.def("ideal_sum", [](const py::sequence& a, const py::sequence& b) {
    auto ia = to_ideal(a, std::nullopt);
    return to_list(ideal_sum(ia, to_ideal(b, ia.dim())));
  });
  m.def("ideal_product", [](const py::sequence& a, const py::sequence& b) {
    auto ia = to_ideal(a, std::nullopt);
    return to_list(ideal_product(ia, to_ideal(b, ia.dim())));
  });
  m.def("ideal_power", [](const py::sequence& a, std::uint64_t n) {
    return to_list(ideal_power(to_ideal(a, std::nullopt), n));
  });
  m.def("ideal_contains", [](const py::sequence& a, const py::sequence& b) {
    auto ia = to_ideal(a, std::nullopt);
    return ideal_contains(ia, to_ideal(b, ia.dim()));
  }, "True iff b is contained in a.");

  m.def("closure", [](const py::sequence& gens, std::size_t box_point_cap) {
    Limits l;
    l.box_point_cap = box_point_cap;
    return to_list(closure(to_ideal(gens, std::nullopt), l));
  }, py::arg("gens"), py::arg("box_point_cap") = Limits{}.box_point_cap);

  m.def("closure_member", [](const py::sequence& gens, const py::sequence& mono) {
    return closure_member(to_ideal(gens, std::nullopt), to_exponent(mono));
  });

  m.def("np_member", [](const py::sequence& vertices,
                        const py::sequence& point) -> py::tuple {
    std::vector<ExponentVector> vs;
    for (auto v : vertices) vs.push_back(to_exponent(v.cast<py::sequence>()));
    const auto a = to_exponent(point);
    const std::size_t dim = vs.empty() ? a.dim() : vs.front().dim();
    const auto r = np_member(NewtonPolyhedron(dim, std::move(vs)), a);
    if (!r.member) return py::make_tuple(false, py::none());
    py::list lambdas;
    for (const auto& l : r.certificate->lambdas) lambdas.append(fraction(l));
    return py::make_tuple(true, lambdas);
  }, "Returns (member, convex weights or None).");

  m.def("reduction_number", [](const py::sequence& j, const py::sequence& i,
                               std::uint64_t k_max) {
    auto ij = to_ideal(j, std::nullopt);
    return outcome(reduction_number(ij, to_ideal(i, ij.dim()), k_max));
  }, py::arg("j"), py::arg("i"), py::arg("k_max") = kDefaultKMax,
     "Least k with I^(k+1) = J I^k, or None if none up to k_max.");

  m.def("reduction_number_poly",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& j,
           const std::vector<std::string>& i, std::uint64_t k_max,
           const std::string& order) {
    return outcome(reduction_number(to_poly(vars, j), to_poly(vars, i), k_max,
                                    term_order_from_string(order)));
  }, py::arg("vars"), py::arg("j"), py::arg("i"), py::arg("k_max") = kDefaultKMax,
     py::arg("order") = "grevlex");

  m.def("is_integral", [](const py::sequence& j, const py::sequence& i) {
    auto ij = to_ideal(j, std::nullopt);
    return std::string(to_string(is_integral_ideal(ij, to_ideal(i, ij.dim()))));
  }, "Yes or No: is I integral over J.");

  m.def("is_integral_element",
        [](const std::vector<std::string>& vars, const std::string& element,
           const std::vector<std::string>& j, std::uint64_t k_max,
           const std::string& order) {
    return std::string(to_string(is_integral_element(
        parse_polynomial(element, vars), to_poly(vars, j), k_max,
        term_order_from_string(order))));
  }, py::arg("vars"), py::arg("element"), py::arg("j"),
     py::arg("k_max") = kDefaultKMax, py::arg("order") = "grevlex",
     "Yes, No, or Unknown.");

  m.def("groebner_basis",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           const std::string& order, std::size_t spair_cap) {
    Limits l;
    l.spair_cap = spair_cap;
    const auto o = term_order_from_string(order);
    std::vector<std::string> out;
    for (const auto& g : groebner_basis(to_poly(vars, gens), o, l).basis)
      out.push_back(format_polynomial(g, vars, o));
    return out;
  }, py::arg("vars"), py::arg("gens"), py::arg("order") = "grevlex",
     py::arg("spair_cap") = Limits{}.spair_cap);

  m.def("uniform_exponents", [](const py::sequence& gens, std::uint64_t n_max) {
    const auto r = uniform_exponents(to_ideal(gens, std::nullopt), n_max);
    py::list rows;
    for (const auto& row : r.rows)
      rows.append(py::make_tuple(row.n, row.s_bar, row.s_closure));
    py::dict out;
    out["rows"] = rows;
    out["k_bar"] = r.k_bar;
    out["k_cl"] = r.k_cl;
    return out;
  }, py::arg("gens"), py::arg("n_max") = 5);

  m.def("witness_pair", [](std::size_t d) {
    const auto w = witness_pair(d);
    return py::make_tuple(to_list(w.j), to_list(w.i));
  });

  m.def("verify_witness", [](std::size_t d) {
    const auto v = verify_witness(d);
    py::dict out;
    out["integral"] = v.integral;
    out["product_is_diagonal"] = v.product_is_diagonal;
    out["product_outside_j"] = v.product_outside_j;
    out["power_not_in_j"] = v.power_not_in_j;
    out["pairwise_reduction_numbers"] = v.pairwise_reduction_numbers;
    out["pass"] = v.pass();
    return out;
  });

  m.def("lipman_sathaye_check", [](const py::sequence& gens, std::uint64_t n_max) {
    return lipman_sathaye_check(to_ideal(gens, std::nullopt), n_max).holds();
  }, py::arg("gens"), py::arg("n_max") = 5);

  m.def("chain_check", [](const py::sequence& gens, std::uint64_t n_max) {
    return chain_check(to_ideal(gens, std::nullopt), n_max).holds();
  }, py::arg("gens"), py::arg("n_max") = 5);

  m.def("lift_bound", [](const py::int_& k, const py::sequence& constants) {
    std::vector<mpz_class> ks;
    for (auto c : constants) ks.push_back(to_mpz(c));
    return to_py(nilpotent_lift_bound(to_mpz(k), ks));
  }, py::arg("k"), py::arg("constants") = py::list());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"closure-lab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command-line front end in-process: (exit code, stdout, stderr).");
}
