// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpm/comparison.hpp"
#include "qpm/contraction.hpp"
#include "qpm/corpus.hpp"
#include "qpm/io.hpp"
#include "qpm/solver.hpp"
#include "qpm/space.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using qpm::Arithmetic;
using qpm::Real;

// Exact values cross into Python as fractions.Fraction, floats as float.
py::object to_python(const Real& v) {
  if (v.is_exact()) return py::module_::import("fractions").attr("Fraction")(v.str());
  return py::float_(v.to_double());
}

Real from_python(const py::handle& h, Arithmetic mode) {
  if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a number, got bool");
  if (py::isinstance<py::int_>(h)) return Real::parse(py::str(h).cast<std::string>(), mode);
  if (py::isinstance<py::float_>(h)) return Real(h.cast<double>()).as(mode);
  if (py::isinstance<py::str>(h)) return Real::parse(h.cast<std::string>(), mode);
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return Real::parse(py::str(h.attr("numerator")).cast<std::string>() + "/" +
                           py::str(h.attr("denominator")).cast<std::string>(),
                       mode);
  }
  throw py::type_error("expected int, float, str or Fraction");
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json python_to_json(const py::handle& obj) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

qpm::NumericPolicy policy_from(const std::string& arithmetic, double tolerance) {
  if (arithmetic == "exact") return qpm::NumericPolicy::exact();
  if (arithmetic == "float") return qpm::NumericPolicy::floating(tolerance);
  throw py::value_error("arithmetic must be 'exact' or 'float'");
}

qpm::ContractionMode contraction_mode(const std::string& name) {
  if (name == "forward") return qpm::ContractionMode::Forward;
  if (name == "dual") return qpm::ContractionMode::Dual;
  if (name == "symmetric") return qpm::ContractionMode::Symmetric;
  throw py::value_error("mode must be 'forward', 'dual' or 'symmetric'");
}

qpm::SolveMode solve_mode(const std::string& name) {
  if (name == "startpoint") return qpm::SolveMode::Startpoint;
  if (name == "endpoint") return qpm::SolveMode::Endpoint;
  if (name == "fixedpoint") return qpm::SolveMode::FixedPoint;
  throw py::value_error("mode must be 'startpoint', 'endpoint' or 'fixedpoint'");
}

qpm::PointSet point_set(const std::vector<std::string>& members) { return qpm::PointSet(members); }

py::dict axiom_result(const qpm::AxiomResult& r) {
  return py::dict("status"_a = qpm::to_string(r.status), "witness"_a = r.witness);
}

py::dict axiom_report(const qpm::AxiomReport& r) {
  return py::dict("ok"_a = r.ok(), "identity"_a = axiom_result(r.identity), "triangle"_a = axiom_result(r.triangle),
                  "t0"_a = axiom_result(r.t0));
}

py::dict check_result(const qpm::CheckResult& r) {
  py::object first = r.first_failure ? py::object(py::int_(*r.first_failure)) : py::object(py::none());
  return py::dict("status"_a = qpm::to_string(r.status), "first_failure"_a = first);
}

}  // namespace

PYBIND11_MODULE(_qpm, m) {
  m.doc() = "Quasi-pseudometric spaces, Hausdorff distances and weak-contraction startpoint iteration";

  py::class_<qpm::QSpace>(m, "Space")
      .def(py::init([](std::vector<std::string> points, const py::list& d, bool t0, const std::string& arithmetic,
                       double tolerance) {
             const auto policy = policy_from(arithmetic, tolerance);
             qpm::DistanceMatrix matrix;
             for (const auto& row : d) {
               std::vector<Real> r;
               for (const auto& v : row.cast<py::list>()) r.push_back(from_python(v, policy.mode));
               matrix.push_back(std::move(r));
             }
             return qpm::QSpace::finite(std::move(points), std::move(matrix), policy, t0);
           }),
           "points"_a, "d"_a, "t0"_a = false, "arithmetic"_a = "exact", "tolerance"_a = 1e-9)
      .def_static("from_oracle",
                  [](std::function<py::object(std::string, std::string)> fn, bool t0, const std::string& arithmetic,
                     double tolerance) {
                    const auto policy = policy_from(arithmetic, tolerance);
                    return qpm::QSpace::from_oracle(
                        [fn, policy](const qpm::Point& x, const qpm::Point& y) {
                          py::gil_scoped_acquire gil;
                          return from_python(fn(x, y), policy.mode);
                        },
                        policy, t0);
                  },
                  "d"_a, "t0"_a = false, "arithmetic"_a = "exact", "tolerance"_a = 1e-9)
      .def("d", [](const qpm::QSpace& s, const std::string& x, const std::string& y) { return to_python(s.d(x, y)); })
      .def_property_readonly("points",
                             [](const qpm::QSpace& s) { return std::vector<std::string>(s.points().begin(), s.points().end()); })
      .def_property_readonly("is_finite", &qpm::QSpace::has_finite_universe)
      .def_property_readonly("t0", &qpm::QSpace::t0)
      .def("conjugate", &qpm::QSpace::conjugate)
      .def("symmetrize", &qpm::QSpace::symmetrize)
      .def("to_json", [](const qpm::QSpace& s) { return json_to_python(qpm::io::space_to_json(s)); });

  py::class_<qpm::SetValuedMap>(m, "SetValuedMap")
      .def(py::init([](const std::vector<std::pair<std::string, std::vector<std::string>>>& table) {
             std::vector<qpm::SetValuedMap::Entry> entries;
             for (const auto& [x, image] : table) entries.emplace_back(x, qpm::PointSet(image));
             return qpm::SetValuedMap::from_table(std::move(entries));
           }),
           "table"_a)
      .def_static("from_dict",
                  [](const py::dict& d) {
                    std::vector<qpm::SetValuedMap::Entry> entries;
                    for (const auto& [k, v] : d) {
                      entries.emplace_back(k.cast<std::string>(),
                                           qpm::PointSet(v.cast<std::vector<std::string>>()));
                    }
                    return qpm::SetValuedMap::from_table(std::move(entries));
                  })
      .def("__call__", [](const qpm::SetValuedMap& f, const std::string& x) {
        auto image = f(x);
        return std::vector<std::string>(image.begin(), image.end());
      });

  py::class_<qpm::ComparisonFunction>(m, "ComparisonFunction")
      .def_static("linear", [](const py::object& c) { return qpm::ComparisonFunction::linear(from_python(c, Arithmetic::Exact).rational()); })
      .def_static("rational_shrink", &qpm::ComparisonFunction::rational_shrink)
      .def_static("user_table",
                  [](const std::vector<std::pair<py::object, py::object>>& knots) {
                    std::vector<qpm::ComparisonFunction::Knot> k;
                    for (const auto& [t, v] : knots) {
                      k.emplace_back(from_python(t, Arithmetic::Exact), from_python(v, Arithmetic::Exact));
                    }
                    return qpm::ComparisonFunction::user_table(std::move(k));
                  })
      .def_static("user_function",
                  [](std::function<py::object(py::object)> fn) {
                    return qpm::ComparisonFunction::user_function([fn](const Real& t) {
                      py::gil_scoped_acquire gil;
                      py::object r = fn(to_python(t));
                      return from_python(r, t.is_exact() ? Arithmetic::Exact : Arithmetic::Float);
                    });
                  })
      .def_property_readonly("certified",
                             [](const qpm::ComparisonFunction& g) {
                               return g.certification() == qpm::Certification::Certified;
                             })
      .def("__call__", [](const qpm::ComparisonFunction& g, const py::object& t) {
        return to_python(g(from_python(t, Arithmetic::Exact)));
      });

  m.def("hausdorff",
        [](const qpm::QSpace& s, const std::vector<std::string>& a, const std::vector<std::string>& b) {
          return to_python(qpm::hausdorff(s, point_set(a), point_set(b)).value());
        });
  m.def("dist_point_set", [](const qpm::QSpace& s, const std::string& x, const std::vector<std::string>& a) {
    return to_python(qpm::dist_point_set(s, x, point_set(a)));
  });
  m.def("dist_set_point", [](const qpm::QSpace& s, const std::vector<std::string>& a, const std::string& x) {
    return to_python(qpm::dist_set_point(s, point_set(a), x));
  });
  m.def("ball_contains", [](const qpm::QSpace& s, const std::string& c, const py::object& r, const std::string& y) {
    return qpm::ball_contains(s, c, from_python(r, s.numeric().mode), y);
  });
  m.def("check_axioms", [](const qpm::QSpace& s, bool t0) { return axiom_report(qpm::check_axioms(s, t0)); },
        "space"_a, "t0"_a = true);

  m.def("verify_gamma1", [](const qpm::ComparisonFunction& g) {
    auto r = qpm::verify_gamma1(g, qpm::default_gamma_grid());
    py::list witness;
    for (const auto& w : r.witness) witness.append(to_python(w));
    return py::dict("ok"_a = r.ok(), "failure"_a = qpm::to_string(r.failure), "witness"_a = witness);
  });

  m.def("startpoint_defect", [](const qpm::QSpace& s, const std::string& x, const qpm::SetValuedMap& f) {
    return to_python(qpm::startpoint_defect(s, x, f).value());
  });
  m.def("endpoint_defect", [](const qpm::QSpace& s, const std::string& x, const qpm::SetValuedMap& f) {
    return to_python(qpm::endpoint_defect(s, x, f).value());
  });
  m.def("fixed_defect", [](const qpm::QSpace& s, const std::string& x, const qpm::SetValuedMap& f) {
    return to_python(qpm::fixed_defect(s, x, f).value());
  });

  m.def(
      "verify_weak_contraction",
      [](const qpm::QSpace& s, const qpm::SetValuedMap& f, const qpm::ComparisonFunction& g, const std::string& mode) {
        auto result = qpm::verify_weak_contraction(s, f, g, contraction_mode(mode));
        if (auto* v = std::get_if<qpm::Violation>(&result)) return py::dict("certified"_a = false, "violation"_a = v->x);
        const auto& cert = std::get<qpm::ContractionCertificate>(result);
        py::dict witnesses;
        for (const auto& [x, y] : cert.witnesses) witnesses[py::str(x)] = y;
        return py::dict("certified"_a = true, "witnesses"_a = witnesses);
      },
      "space"_a, "F"_a, "gamma"_a, "mode"_a = "forward");

  m.def("enumerate_startpoints", &qpm::enumerate_startpoints);
  m.def("enumerate_endpoints", &qpm::enumerate_endpoints);
  m.def("enumerate_fixed_points", &qpm::enumerate_fixed_points);

  m.def(
      "solve",
      [](const qpm::QSpace& s, const qpm::SetValuedMap& f, const qpm::ComparisonFunction& g, const std::string& x0,
         const std::string& mode, const py::object& tol, std::size_t max_iter, const std::string& select) {
        qpm::SolverConfig config;
        config.mode = solve_mode(mode);
        config.tolerance = from_python(tol, s.numeric().mode);
        config.max_iterations = max_iter;
        if (select != "greedy" && select != "first") throw py::value_error("select must be 'greedy' or 'first'");
        config.selection = select == "first" ? qpm::Selection::FirstAdmissible : qpm::Selection::GreedyMinDefect;
        return json_to_python(qpm::io::trace_to_json(qpm::solve(s, f, g, x0, config)));
      },
      "space"_a, "F"_a, "gamma"_a, "x0"_a, "mode"_a = "startpoint", "tol"_a = 0, "max_iter"_a = 10000,
      "select"_a = "greedy");

  m.def(
      "validate_trace",
      [](const py::object& trace, const qpm::ComparisonFunction& g, std::optional<qpm::QSpace> space) {
        const auto t = qpm::io::trace_from_json(python_to_json(trace));
        const auto r = space ? qpm::validate_trace(t, g, *space) : qpm::validate_trace(t, g);
        return py::dict("ok"_a = r.ok(), "step_distances"_a = check_result(r.step_distances),
                        "defects"_a = check_result(r.defects), "partial_sums"_a = check_result(r.partial_sums),
                        "left_k_cauchy"_a = check_result(r.left_k_cauchy));
      },
      "trace"_a, "gamma"_a, "space"_a = py::none());

  m.def("paper_example_space", [] {
    auto sys = qpm::paper_example_space();
    return py::make_tuple(sys.space, sys.map, sys.gamma);
  });
  m.def("paper_example_truncated", [](unsigned n) {
    auto sys = qpm::paper_example_truncated(n);
    return py::make_tuple(sys.space, sys.map, sys.gamma);
  });
  m.def(
      "random_weakly_contractive_system",
      [](std::uint64_t seed, std::size_t size) {
        qpm::GeneratorSeed g;
        g.seed = seed;
        g.size = size;
        auto sys = qpm::random_weakly_contractive_system(g, qpm::ComparisonFunction::linear(qpm::Rational(1, 2)));
        return py::make_tuple(sys.space, sys.map, sys.sink);
      },
      "seed"_a, "size"_a);

  m.def("load_system", [](const std::string& path) {
    auto doc = qpm::io::load_system(path);
    return py::make_tuple(doc.space, doc.map, doc.gamma);
  });

  py::register_exception<qpm::io::DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception<qpm::GenerationError>(m, "GenerationError", PyExc_RuntimeError);
}
