// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "qpm/comparison.hpp"
#include "qpm/contraction.hpp"
#include "qpm/solver.hpp"
#include "qpm/space.hpp"

namespace qpm::io {

using nlohmann::json;

/// Malformed document. `field` is a JSON-pointer-like path to the culprit.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Rationals as "p/q" strings in EXACT mode, JSON numbers in FLOAT mode.
json real_to_json(const Real& v);
Real real_from_json(const json& j, Arithmetic mode, const std::string& field);

/// { "points": [...], "d": [[...]], "t0": bool } for finite spaces.
json space_to_json(const QSpace& space);
QSpace space_from_json(const json& j, NumericPolicy numeric);

/// { "<point>": [points...] } over the universe of `space`.
json map_to_json(const SetValuedMap& f, const QSpace& space);
/// Every key and image member must be a point of `space`.
SetValuedMap map_from_json(const json& j, const QSpace& space);

json gamma_to_json(const ComparisonFunction& gamma);
ComparisonFunction gamma_from_json(const json& j);

/// One document per system: the space fields at top level plus optional
/// "F", "gamma", "arithmetic" ("exact" | "float") and "meta".
struct SystemDocument {
  QSpace space;
  std::optional<SetValuedMap> map;
  std::optional<ComparisonFunction> gamma;
  json meta = json::object();
};

/// `numeric_override` replaces the document's own arithmetic setting.
SystemDocument system_from_json(const json& j, std::optional<NumericPolicy> numeric_override = std::nullopt);
json system_to_json(const SystemDocument& doc);

/// Throws DocumentError (field "$") for unreadable files or invalid JSON.
SystemDocument load_system(const std::filesystem::path& path,
                           std::optional<NumericPolicy> numeric_override = std::nullopt);
void save_system(const SystemDocument& doc, const std::filesystem::path& path);

/// { "mode", "start", "steps": [{ "n", "x", "y", "d", "gamma_d", "defect" }], "outcome": {...} }
json trace_to_json(const IterationTrace& trace);
IterationTrace trace_from_json(const json& j);

}  // namespace qpm::io
