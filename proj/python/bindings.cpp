// Copyright 2026 The tropjac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Rationals cross the boundary as fractions.Fraction (ints
// and "p/q" strings are accepted on input); points as "v1" / "A@1/2"
// strings; divisors as {point: coefficient} dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "tropjac/chipfire.hpp"
#include "tropjac/cli.hpp"
#include "tropjac/error.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/inversion.hpp"
#include "tropjac/io.hpp"
#include "tropjac/theta.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<tropjac::Rational> {
  PYBIND11_TYPE_CASTER(tropjac::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = tropjac::parse_rational(src.cast<std::string>());
        return true;
      }
      if (py::isinstance<py::bool_>(src)) return false;
      if (py::isinstance<py::int_>(src)) {
        value = tropjac::Rational(tropjac::Integer(py::str(src).cast<std::string>()));
        return true;
      }
      if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") && !PyFloat_Check(src.ptr())) {
        const tropjac::Integer num(py::str(src.attr("numerator")).cast<std::string>());
        const tropjac::Integer den(py::str(src.attr("denominator")).cast<std::string>());
        value = tropjac::Rational(num, den);
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const tropjac::Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    const py::object num = py::int_(py::str(boost::multiprecision::numerator(r).str()));
    const py::object den = py::int_(py::str(boost::multiprecision::denominator(r).str()));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace tropjac {
namespace {

using DivisorDict = std::map<std::string, std::int64_t>;

Divisor to_divisor(const MetricGraph& g, const DivisorDict& dict) {
  Divisor d;
  for (const auto& [p, c] : dict) d.add(parse_point(p, g), c);
  return d;
}

DivisorDict from_divisor(const MetricGraph& g, const Divisor& d) {
  DivisorDict out;
  for (const auto& [p, c] : d.terms()) out[p.str(g)] = c;
  return out;
}

std::vector<std::vector<Rational>> rows(const Matrix& m) {
  std::vector<std::vector<Rational>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j));
  return out;
}

// A graph together with its Jacobian and chip-firing engine, kept alive as
// one object so the internal graph pointers stay valid.
class Curve {
 public:
  explicit Curve(MetricGraph g)
      : graph_(std::make_shared<MetricGraph>(std::move(g))), jac_(std::make_unique<Jacobian>(*graph_)), cf_(*jac_) {}

  const MetricGraph& graph() const { return *graph_; }
  const Jacobian& jac() const { return *jac_; }
  const ChipFiring& cf() const { return cf_; }

  GraphPoint point(const std::string& s) const { return parse_point(s, *graph_); }
  Divisor divisor(const DivisorDict& d) const { return to_divisor(*graph_, d); }
  DivisorDict dict(const Divisor& d) const { return from_divisor(*graph_, d); }

 private:
  std::shared_ptr<MetricGraph> graph_;
  std::unique_ptr<Jacobian> jac_;
  ChipFiring cf_;
};

using EdgeTuple = std::tuple<std::string, std::string, std::string, Rational>;

Curve make_curve(const std::vector<std::string>& vertices, const std::vector<EdgeTuple>& edges) {
  std::vector<MetricGraph::EdgeSpec> specs;
  for (const auto& [id, tail, head, len] : edges) specs.push_back({id, tail, head, len});
  return Curve(MetricGraph(vertices, std::move(specs)));
}

}  // namespace
}  // namespace tropjac

PYBIND11_MODULE(_tropjac, m) {
  using namespace tropjac;
  m.doc() = "Exact tropical Jacobians, theta functions and chip-firing on metric graphs";

  static py::handle error_type = py::exception<Error>(m, "Error").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(py::str(e.name() + ": " + e.what()));
      exc.attr("name") = e.name();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Curve>(m, "Curve")
      .def(py::init(&make_curve), py::arg("vertices"), py::arg("edges"),
           "Edges are (id, tail, head, length) tuples.")
      .def_static("from_json", [](const std::string& text) { return Curve(parse_graph(text)); })
      .def("to_json", [](const Curve& c) { return serialize_graph(c.graph()); })
      .def_property_readonly("genus", [](const Curve& c) { return genus(c.graph()); })
      .def_property_readonly("vertices", [](const Curve& c) { return c.graph().vertex_ids(); })
      .def_property_readonly("edges", [](const Curve& c) {
        std::vector<EdgeTuple> out;
        for (const auto& e : c.graph().edges()) out.emplace_back(e.id, c.graph().vertex_id(e.tail), c.graph().vertex_id(e.head), e.length);
        return out;
      })
      .def("canonical_divisor", [](const Curve& c) { return c.dict(canonical_divisor(c.graph())); })
      .def("period_matrix", [](const Curve& c) { return rows(c.jac().period().matrix()); })
      .def("abel_jacobi",
           [](const Curve& c, const DivisorDict& d, const std::string& base) {
             return c.jac().canonical(c.jac().abel_jacobi(c.divisor(d), c.point(base)));
           },
           py::arg("divisor"), py::arg("base") = "v1")
      .def("is_principal", [](const Curve& c, const DivisorDict& d) { return c.jac().is_principal(c.divisor(d), GraphPoint::vertex(0)); })
      .def("jac_equal", [](const Curve& c, const Vector& u, const Vector& v) { return c.jac().equal(u, v); })
      .def("pullback_theta",
           [](const Curve& c, const Vector& lambda, const std::string& base) {
             return c.dict(pullback_theta(c.jac(), c.point(base), lambda));
           },
           py::arg("lam"), py::arg("base") = "v1")
      .def("kappa", [](const Curve& c, const std::string& base) { return c.jac().canonical(kappa(c.jac(), c.point(base))); },
           py::arg("base") = "v1")
      .def("canonical_effective",
           [](const Curve& c, const DivisorDict& d, const std::string& base) {
             return c.dict(canonical_effective(c.jac(), c.divisor(d), c.point(base)));
           },
           py::arg("divisor"), py::arg("base") = "v1")
      .def("theta_support_test",
           [](const Curve& c, const DivisorDict& d, const std::string& q) {
             return theta_support_test(c.jac(), c.divisor(d), c.point(q), GraphPoint::vertex(0));
           })
      .def("riemann_membership",
           [](const Curve& c, const DivisorDict& d) {
             const GraphPoint base = GraphPoint::vertex(0);
             return riemann_membership(c.jac(), c.jac().abel_jacobi(c.divisor(d), base), base);
           },
           "Theta-side effectivity test for a degree g-1 divisor.")
      .def("is_break_divisor", [](const Curve& c, const DivisorDict& d) { return is_break_divisor(c.graph(), c.divisor(d)); })
      .def("reduce", [](const Curve& c, const DivisorDict& d, const std::string& base) { return c.dict(c.cf().reduce(c.divisor(d), c.point(base))); },
           py::arg("divisor"), py::arg("base") = "v1")
      .def("linear_system_nonempty", [](const Curve& c, const DivisorDict& d) { return c.cf().linear_system_nonempty(c.divisor(d)); })
      .def("rank", [](const Curve& c, const DivisorDict& d) { return c.cf().rank(c.divisor(d)); })
      .def("riemann_roch",
           [](const Curve& c, const DivisorDict& d) {
             const RiemannRochReport r = c.cf().riemann_roch(c.divisor(d));
             py::dict out;
             out["degree"] = r.degree;
             out["rank"] = r.rank;
             out["dual_rank"] = r.dual_rank;
             out["holds"] = r.holds;
             return out;
           })
      .def("moderators", [](const Curve& c) {
        std::vector<DivisorDict> out;
        const Model model(c.graph(), std::vector<GraphPoint>{});
        for (const auto& o : enumerate_acyclic_orientations(model)) out.push_back(c.dict(moderator(o)));
        return out;
      });

  m.def(
      "theta",
      [](const std::vector<std::vector<Rational>>& q, const Vector& u) {
        Matrix mq(q);
        const ThetaValue th = theta(PeriodMatrix(mq), u);
        return py::make_tuple(th.value, th.maximizers);
      },
      py::arg("q"), py::arg("u"), "Theta(u) = max_n n.u - n^T Q n / 2 and its maximizers.");

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command-line invocation; returns (exit code, stdout, stderr).");
}
