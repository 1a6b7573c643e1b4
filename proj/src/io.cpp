// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qpm/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qpm::io {

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw DocumentError(path.empty() ? "$" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(path + "/" + key, "missing field");
  return *it;
}

std::string require_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw DocumentError(field, "expected a string");
  return j.get<std::string>();
}

std::string arithmetic_name(Arithmetic mode) { return mode == Arithmetic::Exact ? "exact" : "float"; }

Arithmetic arithmetic_from(const json& j, const std::string& field) {
  const auto name = require_string(j, field);
  if (name == "exact") return Arithmetic::Exact;
  if (name == "float") return Arithmetic::Float;
  throw DocumentError(field, "expected \"exact\" or \"float\", got \"" + name + "\"");
}

std::optional<SolveMode> solve_mode_from(const std::string& name) {
  if (name == "startpoint") return SolveMode::Startpoint;
  if (name == "endpoint") return SolveMode::Endpoint;
  if (name == "fixedpoint") return SolveMode::FixedPoint;
  return std::nullopt;
}

std::optional<OutcomeKind> outcome_from(const std::string& name) {
  if (name == "CONVERGED") return OutcomeKind::Converged;
  if (name == "MAX_ITERATIONS") return OutcomeKind::MaxIterations;
  if (name == "CONTRACTION_VIOLATED") return OutcomeKind::ContractionViolated;
  return std::nullopt;
}

}  // namespace

json real_to_json(const Real& v) {
  if (v.is_exact()) return v.str();
  return v.to_double();
}

Real real_from_json(const json& j, Arithmetic mode, const std::string& field) {
  try {
    if (j.is_string()) return Real::parse(j.get<std::string>(), mode);
    if (j.is_number_integer()) {
      if (j.is_number_unsigned()) return Real(Rational(j.get<std::uint64_t>())).as(mode);
      return Real(Rational(j.get<std::int64_t>())).as(mode);
    }
    if (j.is_number_float()) return Real(j.get<double>()).as(mode);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(field, e.what());
  }
  throw DocumentError(field, "expected a number or a rational string");
}

json space_to_json(const QSpace& space) {
  json points = json::array();
  for (const auto& p : space.points()) points.push_back(p);
  json rows = json::array();
  for (const auto& row : space.matrix()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(real_to_json(v));
    rows.push_back(std::move(r));
  }
  return {{"points", std::move(points)}, {"d", std::move(rows)}, {"t0", space.t0()}};
}

QSpace space_from_json(const json& j, NumericPolicy numeric) {
  const auto& pts = require(j, "points", "");
  if (!pts.is_array() || pts.empty()) throw DocumentError("/points", "expected a nonempty array of point ids");
  std::vector<Point> points;
  for (std::size_t i = 0; i < pts.size(); ++i) points.push_back(require_string(pts[i], "/points/" + std::to_string(i)));

  const auto& d = require(j, "d", "");
  if (!d.is_array()) throw DocumentError("/d", "expected a matrix");
  if (d.size() != points.size()) {
    throw DocumentError("/d", "matrix has " + std::to_string(d.size()) + " rows for " +
                                  std::to_string(points.size()) + " points");
  }
  DistanceMatrix matrix;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::string row_field = "/d/" + std::to_string(i);
    if (!d[i].is_array() || d[i].size() != points.size()) {
      throw DocumentError(row_field, "row must have " + std::to_string(points.size()) + " entries");
    }
    std::vector<Real> row;
    for (std::size_t k = 0; k < d[i].size(); ++k) {
      const std::string field = row_field + "/" + std::to_string(k);
      Real v = real_from_json(d[i][k], numeric.mode, field);
      if (v.is_negative()) throw DocumentError(field, "distance must be nonnegative");
      row.push_back(std::move(v));
    }
    matrix.push_back(std::move(row));
  }

  bool t0 = false;
  if (auto it = j.find("t0"); it != j.end()) {
    if (!it->is_boolean()) throw DocumentError("/t0", "expected a boolean");
    t0 = it->get<bool>();
  }
  try {
    return QSpace::finite(std::move(points), std::move(matrix), numeric, t0);
  } catch (const std::invalid_argument& e) {
    throw DocumentError("/points", e.what());
  }
}

json map_to_json(const SetValuedMap& f, const QSpace& space) {
  json out = json::object();
  for (const auto& x : space.points()) {
    if (!f.is_defined(x)) continue;
    json image = json::array();
    for (const auto& y : f(x)) image.push_back(y);
    out[x] = std::move(image);
  }
  return out;
}

SetValuedMap map_from_json(const json& j, const QSpace& space) {
  if (!j.is_object()) throw DocumentError("/F", "expected an object mapping point ids to arrays");
  // Table order follows the universe, not the JSON key order.
  std::vector<SetValuedMap::Entry> table;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string field = "/F/" + it.key();
    if (!space.contains(it.key())) throw DocumentError(field, "unknown point '" + it.key() + "'");
    if (!it->is_array()) throw DocumentError(field, "expected an array of point ids");
    std::vector<Point> image;
    for (std::size_t i = 0; i < it->size(); ++i) {
      auto p = require_string((*it)[i], field + "/" + std::to_string(i));
      if (!space.contains(p)) throw DocumentError(field + "/" + std::to_string(i), "unknown point '" + p + "'");
      image.push_back(std::move(p));
    }
    try {
      table.emplace_back(it.key(), PointSet(std::move(image)));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(field, e.what());
    }
  }
  std::sort(table.begin(), table.end(), [&](const auto& a, const auto& b) {
    return *space.index_of(a.first) < *space.index_of(b.first);
  });
  return SetValuedMap::from_table(std::move(table));
}

json gamma_to_json(const ComparisonFunction& gamma) {
  switch (gamma.kind()) {
    case GammaKind::Linear: return {{"kind", "linear"}, {"c", gamma.coefficient().str()}};
    case GammaKind::RationalShrink: return {{"kind", "rational_shrink"}};
    case GammaKind::User: break;
  }
  if (!gamma.has_table()) throw std::invalid_argument("callback-backed comparison functions cannot be serialized");
  json table = json::array();
  for (const auto& [t, v] : gamma.table()) table.push_back(json::array({real_to_json(t), real_to_json(v)}));
  return {{"kind", "user"}, {"table", std::move(table)}};
}

ComparisonFunction gamma_from_json(const json& j) {
  const auto kind = require_string(require(j, "kind", "/gamma"), "/gamma/kind");
  try {
    if (kind == "linear") {
      Real c = real_from_json(require(j, "c", "/gamma"), Arithmetic::Exact, "/gamma/c");
      return ComparisonFunction::linear(c.rational());
    }
    if (kind == "rational_shrink") return ComparisonFunction::rational_shrink();
    if (kind == "user") {
      const auto& table = require(j, "table", "/gamma");
      if (!table.is_array()) throw DocumentError("/gamma/table", "expected an array of [t, gamma(t)] pairs");
      std::vector<ComparisonFunction::Knot> knots;
      for (std::size_t i = 0; i < table.size(); ++i) {
        const std::string field = "/gamma/table/" + std::to_string(i);
        if (!table[i].is_array() || table[i].size() != 2) throw DocumentError(field, "expected a [t, gamma(t)] pair");
        knots.emplace_back(real_from_json(table[i][0], Arithmetic::Exact, field + "/0"),
                           real_from_json(table[i][1], Arithmetic::Exact, field + "/1"));
      }
      return ComparisonFunction::user_table(std::move(knots));
    }
  } catch (const std::invalid_argument& e) {
    throw DocumentError("/gamma", e.what());
  }
  throw DocumentError("/gamma/kind", "unknown kind \"" + kind + "\"");
}

SystemDocument system_from_json(const json& j, std::optional<NumericPolicy> numeric_override) {
  if (!j.is_object()) throw DocumentError("$", "expected a JSON object");
  NumericPolicy numeric;
  if (auto it = j.find("arithmetic"); it != j.end()) numeric.mode = arithmetic_from(*it, "/arithmetic");
  if (numeric_override) numeric = *numeric_override;

  SystemDocument doc{space_from_json(j, numeric), std::nullopt, std::nullopt, json::object()};
  if (auto it = j.find("F"); it != j.end()) doc.map = map_from_json(*it, doc.space);
  if (auto it = j.find("gamma"); it != j.end()) doc.gamma = gamma_from_json(*it);
  if (auto it = j.find("meta"); it != j.end()) {
    if (!it->is_object()) throw DocumentError("/meta", "expected an object");
    doc.meta = *it;
  }
  return doc;
}

json system_to_json(const SystemDocument& doc) {
  json out = space_to_json(doc.space);
  out["arithmetic"] = arithmetic_name(doc.space.numeric().mode);
  if (doc.map) out["F"] = map_to_json(*doc.map, doc.space);
  if (doc.gamma) out["gamma"] = gamma_to_json(*doc.gamma);
  if (!doc.meta.empty()) out["meta"] = doc.meta;
  return out;
}

SystemDocument load_system(const std::filesystem::path& path, std::optional<NumericPolicy> numeric_override) {
  std::ifstream in(path);
  if (!in) throw DocumentError("$", "cannot read '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DocumentError("$", std::string("invalid JSON: ") + e.what());
  }
  return system_from_json(j, numeric_override);
}

void save_system(const SystemDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << system_to_json(doc).dump(2) << '\n';
}

json trace_to_json(const IterationTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"n", s.n},
                     {"x", s.x},
                     {"y", s.y},
                     {"d", real_to_json(s.d)},
                     {"gamma_d", real_to_json(s.gamma_d)},
                     {"defect", real_to_json(s.defect)}});
  }
  json outcome = {{"kind", to_string(trace.outcome.kind)},
                  {"point", trace.outcome.point},
                  {"defect", real_to_json(trace.outcome.defect)},
                  {"steps", trace.steps.size()}};
  if (!trace.outcome.note.empty()) outcome["note"] = trace.outcome.note;
  return {{"mode", to_string(trace.mode)},
          {"arithmetic", arithmetic_name(trace.numeric.mode)},
          {"tolerance", trace.numeric.tolerance},
          {"start", trace.start},
          {"steps", std::move(steps)},
          {"outcome", std::move(outcome)}};
}

IterationTrace trace_from_json(const json& j) {
  IterationTrace trace;
  const auto mode_name = require_string(require(j, "mode", ""), "/mode");
  auto mode = solve_mode_from(mode_name);
  if (!mode) throw DocumentError("/mode", "unknown mode \"" + mode_name + "\"");
  trace.mode = *mode;
  if (auto it = j.find("arithmetic"); it != j.end()) trace.numeric.mode = arithmetic_from(*it, "/arithmetic");
  if (auto it = j.find("tolerance"); it != j.end()) {
    if (!it->is_number()) throw DocumentError("/tolerance", "expected a number");
    trace.numeric.tolerance = it->get<double>();
  }
  const Arithmetic arith = trace.numeric.mode;

  const auto& steps = require(j, "steps", "");
  if (!steps.is_array()) throw DocumentError("/steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string f = "/steps/" + std::to_string(i);
    const auto& s = steps[i];
    const auto& n = require(s, "n", f);
    if (!n.is_number_unsigned()) throw DocumentError(f + "/n", "expected a nonnegative integer");
    trace.steps.push_back({n.get<std::size_t>(), require_string(require(s, "x", f), f + "/x"),
                           require_string(require(s, "y", f), f + "/y"),
                           real_from_json(require(s, "d", f), arith, f + "/d"),
                           real_from_json(require(s, "gamma_d", f), arith, f + "/gamma_d"),
                           real_from_json(require(s, "defect", f), arith, f + "/defect")});
  }
  trace.start = j.contains("start") ? require_string(j["start"], "/start")
                                    : (trace.steps.empty() ? Point{} : trace.steps.front().x);

  const auto& outcome = require(j, "outcome", "");
  const auto kind_name = require_string(require(outcome, "kind", "/outcome"), "/outcome/kind");
  auto kind = outcome_from(kind_name);
  if (!kind) throw DocumentError("/outcome/kind", "unknown outcome \"" + kind_name + "\"");
  trace.outcome.kind = *kind;
  trace.outcome.point = require_string(require(outcome, "point", "/outcome"), "/outcome/point");
  trace.outcome.defect = real_from_json(require(outcome, "defect", "/outcome"), arith, "/outcome/defect");
  if (auto it = outcome.find("note"); it != outcome.end()) trace.outcome.note = require_string(*it, "/outcome/note");
  return trace;
}

}  // namespace qpm::io
