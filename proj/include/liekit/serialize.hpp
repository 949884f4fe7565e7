#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liekit/affine_series.hpp"
#include "liekit/branching.hpp"
#include "liekit/errors.hpp"
#include "liekit/formal_element.hpp"
#include "liekit/rational.hpp"
#include "liekit/weight.hpp"

namespace liekit {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Integers become JSON numbers when they fit in 64 bits, decimal strings
/// otherwise.
inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (!is_integral(r)) throw UsageError("expected an integer, got " + j.get<std::string>());
    return numerator(r);
  }
  throw UsageError("expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw UsageError("expected a rational as a number or \"p/q\" string, got " + j.dump());
}

inline Json weight_to_json(const Weight& w) {
  Json coords = Json::array();
  for (const auto& c : w.coords()) coords.push_back(format_rational(c));
  Json j{{"coords", std::move(coords)}};
  if (w.is_affine()) {
    j["level"] = format_rational(w.level());
    j["grade"] = format_rational(w.grade());
  }
  return j;
}

inline Weight weight_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array())
    throw UsageError("weight must be an object with a \"coords\" array");
  std::vector<Rational> coords;
  for (const auto& c : j["coords"]) coords.push_back(rational_from_json(c));
  const bool has_level = j.contains("level"), has_grade = j.contains("grade");
  if (has_level != has_grade) throw UsageError("affine weights need both \"level\" and \"grade\"");
  if (!has_level) return Weight::finite(std::move(coords));
  return Weight::affine(std::move(coords), rational_from_json(j["level"]), rational_from_json(j["grade"]));
}

/// Sorted array of {"weight", "mult"}.
inline Json formal_to_json(const FormalElement& f) {
  Json out = Json::array();
  for (const auto& [w, m] : f) out.push_back({{"weight", weight_to_json(w)}, {"mult", integer_to_json(m)}});
  return out;
}

inline FormalElement formal_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("formal element must be an array");
  FormalElement f;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("weight") || !t.contains("mult"))
      throw UsageError("formal element terms need \"weight\" and \"mult\"");
    f.add_term(weight_from_json(t["weight"]), integer_from_json(t["mult"]));
  }
  return f;
}

inline Json series_to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(integer_to_json(c));
  return {{"class", s.class_labels}, {"coeffs", std::move(coeffs)}};
}

inline QSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("class") || !j.contains("coeffs"))
    throw UsageError("series need \"class\" and \"coeffs\"");
  QSeries s;
  s.class_labels = j["class"].get<std::vector<long long>>();
  for (const auto& c : j["coeffs"]) s.coeffs.push_back(integer_from_json(c));
  return s;
}

/// Top-level document: {"schema": version, "command": ..., "result": ...}.
inline Json document(const std::string& command, Json result) {
  return {{"schema", kSchemaVersion}, {"command", command}, {"result", std::move(result)}};
}

inline std::string dump(const Json& j) { return j.dump(2); }

}  // namespace liekit
