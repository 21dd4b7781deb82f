#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polcovar/cli.hpp"
#include "polcovar/decimal.hpp"
#include "polcovar/moments.hpp"
#include "polcovar/oracle.hpp"
#include "polcovar/pattern.hpp"
#include "polcovar/render.hpp"
#include "polcovar/symmetry.hpp"

namespace py = pybind11;
using namespace polcovar;

namespace {

py::object to_py_int(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt to_big_int(const py::handle& obj) { return BigInt(py::str(obj).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(r.numerator()), to_py_int(r.denominator()));
}

// Accepts int, Fraction, or anything with numerator/denominator.
Rational to_rational(const py::handle& obj) {
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    return Rational(to_big_int(obj.attr("numerator")), to_big_int(obj.attr("denominator")));
  }
  return Rational(to_big_int(obj));
}

py::list coefficients(const Polynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_fraction(c));
  return out;
}

Polynomial to_polynomial(const py::iterable& coeffs) {
  std::vector<Rational> out;
  for (auto c : coeffs) out.push_back(to_rational(c));
  return Polynomial(std::move(out));
}

EngineOptions engine_options(unsigned workers, bool prune) {
  EngineOptions opt;
  opt.workers = workers;
  opt.prune_automorphisms = prune;
  return opt;
}

py::dict oracle_dict(const OracleResult& r) {
  py::dict d;
  d["n"] = r.n;
  d["mean_a"] = to_fraction(r.mean_a);
  d["mean_b"] = to_fraction(r.mean_b);
  d["second_moment"] = to_fraction(r.second_moment);
  d["covariance"] = to_fraction(r.covariance);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact moments of subgraph counts in G(n, 1/2)";

  py::register_exception<PatternError>(m, "PatternError", PyExc_ValueError);
  py::register_exception<PatternTooLarge>(m, "PatternTooLarge", PyExc_ValueError);
  py::register_exception<OracleCapExceeded>(m, "OracleCapExceeded", PyExc_ValueError);

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](int k, const std::vector<Edge>& edges) { return Pattern(k, edges); }), py::arg("k"),
           py::arg("edges") = std::vector<Edge>{})
      .def_static("builtin", &builtin_pattern, py::arg("name"))
      .def_static("parse", &parse_pattern, py::arg("text"),
                  "Adjacency matrix or edge list, detected from the first line")
      .def_static("from_adjacency",
                  [](const std::vector<std::vector<int>>& rows) {
                    std::ostringstream text;
                    for (const auto& row : rows) {
                      for (int v : row) text << v << ' ';
                      text << '\n';
                    }
                    return parse_adjacency_matrix(text.str());
                  },
                  py::arg("matrix"))
      .def_property_readonly("k", &Pattern::vertex_count)
      .def_property_readonly("edge_count", &Pattern::edge_count)
      .def_property_readonly("edges", &Pattern::edges)
      .def("has_edge", &Pattern::has_edge)
      .def("to_adjacency_matrix", &Pattern::to_adjacency_matrix)
      .def("to_edge_list", &Pattern::to_edge_list)
      .def("relabel", [](const Pattern& p, const std::vector<int>& perm) { return relabel(p, perm); })
      .def(py::self == py::self)
      .def("__repr__", [](const Pattern& p) {
        return "Pattern(k=" + std::to_string(p.vertex_count()) + ", edges=" + std::to_string(p.edge_count()) + ")";
      });

  py::class_<MomentReport>(m, "MomentReport")
      .def_readonly("pattern_a", &MomentReport::pattern_a)
      .def_readonly("pattern_b", &MomentReport::pattern_b)
      .def_property_readonly("mean_a", [](const MomentReport& r) { return coefficients(r.mean_a); })
      .def_property_readonly("mean_b", [](const MomentReport& r) { return coefficients(r.mean_b); })
      .def_property_readonly("second_moment", [](const MomentReport& r) { return coefficients(r.second_moment); })
      .def_property_readonly("covariance", [](const MomentReport& r) { return coefficients(r.covariance); })
      .def_readonly("aut_a", &MomentReport::aut_a)
      .def_readonly("aut_b", &MomentReport::aut_b);

  m.def("builtin_names", &builtin_names);
  m.def("automorphism_count", [](const Pattern& p) { return automorphism_count(p); });

  m.def("mean", [](const Pattern& p) { return coefficients(mean_polynomial(p)); }, py::arg("pattern"),
        "Coefficients of E[c_H], index i multiplying n^i");
  m.def(
      "second_moment",
      [](const Pattern& a, const Pattern& b, unsigned workers, bool prune) {
        Polynomial poly;
        {
          py::gil_scoped_release release;
          poly = second_moment_polynomial(a, b, engine_options(workers, prune));
        }
        return coefficients(poly);
      },
      py::arg("a"), py::arg("b"), py::arg("workers") = 0, py::arg("prune") = false);
  m.def("covariance",
        [](const Pattern& a, const Pattern& b, unsigned workers, bool prune) {
          return covariance_report(a, b, engine_options(workers, prune));
        },
        py::arg("a"), py::arg("b"), py::arg("workers") = 0, py::arg("prune") = false,
        py::call_guard<py::gil_scoped_release>());
  m.def("variance",
        [](const Pattern& p, unsigned workers, bool prune) {
          return variance_report(p, engine_options(workers, prune));
        },
        py::arg("pattern"), py::arg("workers") = 0, py::arg("prune") = false,
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "exact_moments",
      [](const Pattern& a, const Pattern& b, int n, int max_nodes) {
        OracleOptions opt;
        opt.max_nodes = max_nodes;
        return oracle_dict(exact_moments(a, b, n, opt));
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("max_nodes") = 6);
  m.def(
      "count_subgraphs",
      [](int n, const std::vector<Edge>& graph_edges, const Pattern& p) {
        LabeledGraph g(n, 0);
        for (auto [u, v] : graph_edges) g = g.with_edge(u, v);
        return count_subgraphs(g, p);
      },
      py::arg("n"), py::arg("edges"), py::arg("pattern"));
  m.def(
      "verify",
      [](const Pattern& a, const Pattern& b, const std::vector<int>& ns) {
        auto report = verify(a, b, ns);
        py::list rows;
        for (const auto& row : report.rows) {
          py::dict d;
          d["n"] = row.n;
          d["match"] = row.matches();
          d["engine_covariance"] = to_fraction(row.engine_covariance);
          d["oracle_covariance"] = to_fraction(row.oracle_covariance);
          d["engine_mean_a"] = to_fraction(row.engine_mean_a);
          d["oracle_mean_a"] = to_fraction(row.oracle_mean_a);
          rows.append(d);
        }
        return rows;
      },
      py::arg("a"), py::arg("b"), py::arg("n_values"));

  m.def("evaluate", [](const py::iterable& coeffs, const py::object& n) {
    return to_fraction(to_polynomial(coeffs).evaluate(to_rational(n)));
  });
  m.def("render_human", [](const py::iterable& coeffs) { return render_human(to_polynomial(coeffs)); });
  m.def("to_matrix", [](const py::iterable& coeffs) {
    auto enc = to_matrix(to_polynomial(coeffs));
    py::list num;
    py::list den;
    for (const auto& v : enc.numerators) num.append(to_py_int(v));
    for (const auto& v : enc.denominators) den.append(to_py_int(v));
    return py::make_tuple(num, den);
  });
  m.def("format_decimal", [](const py::object& value, int digits) { return format_decimal(to_rational(value), digits); },
        py::arg("value"), py::arg("digits") = 5);
  m.def("format_sqrt_decimal",
        [](const py::object& value, int digits) { return format_sqrt_decimal(to_rational(value), digits); },
        py::arg("value"), py::arg("digits") = 5);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out;
        std::ostringstream err;
        int status = run_cli(args, in, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
