#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "liekit/errors.hpp"
#include "liekit/rational.hpp"
#include "liekit/root_system.hpp"
#include "liekit/weight.hpp"

namespace liekit {

namespace detail {

[[noreturn]] inline void name_error(std::string_view text, std::size_t pos, const std::string& what) {
  throw UsageError("algebra name '" + std::string(text) + "', position " + std::to_string(pos + 1) +
                   ": " + what);
}

}  // namespace detail

/// Finite vectors from a JSON array of arrays whose entries are integers or
/// "p/q" strings.
inline std::vector<Weight> parse_roots_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed root list: ") + e.what());
  }
  if (!j.is_array()) throw UsageError("root list must be a JSON array of vectors");
  std::vector<Weight> out;
  for (const auto& r : j) {
    if (!r.is_array()) throw UsageError("each root must be a JSON array, got " + r.dump());
    std::vector<Rational> c;
    for (const auto& x : r) {
      if (x.is_number_integer())
        c.emplace_back(x.get<std::int64_t>());
      else if (x.is_string())
        c.push_back(parse_rational(x.get<std::string>()));
      else
        throw UsageError("root coordinates must be integers or \"p/q\" strings, got " + x.dump());
    }
    out.push_back(Weight::finite(std::move(c)));
  }
  return out;
}

/// Grammar: SERIES RANK ("+" SERIES RANK)* ["^"], e.g. "B2", "A1+A1",
/// "G2^". A leading '[' switches to an explicit JSON list of simple roots.
inline RootSystem parse_algebra(std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    try {
      return RootSystem::from_simple_roots(parse_roots_json(text));
    } catch (const DomainError& e) {
      throw UsageError(std::string("explicit root system: ") + e.what());
    }
  }
  std::size_t i = 0;
  std::optional<RootSystem> acc;
  for (;;) {
    if (i >= text.size()) detail::name_error(text, i, "expected a series letter A-G");
    char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (s < 'A' || s > 'G') detail::name_error(text, i, std::string("unknown series '") + text[i] + "'");
    const std::size_t at = i++;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) detail::name_error(text, i, "expected a rank");
    if (i - start > 4) detail::name_error(text, start, "rank too large");
    int rank = std::stoi(std::string(text.substr(start, i - start)));
    RootSystem part = [&] {
      try {
        return RootSystem::simple(s, rank);
      } catch (const DomainError& e) {
        detail::name_error(text, at, e.what());
      }
    }();
    acc = acc ? direct_sum(*acc, part) : part;
    if (i == text.size()) return *acc;
    if (text[i] == '+') {
      ++i;
      continue;
    }
    if (text[i] == '^') {
      if (i + 1 != text.size()) detail::name_error(text, i + 1, "unexpected text after '^'");
      if (!acc->is_simple()) detail::name_error(text, i, "affine extensions need a simple algebra");
      return affine_extension(*acc);
    }
    detail::name_error(text, i, std::string("unexpected character '") + text[i] + "'");
  }
}

/// "1,0,2" or "[1, 0, 2]" or "1 0 2".
inline std::vector<long long> parse_labels(std::string_view text) {
  std::vector<long long> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(cur, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cur.size()) throw UsageError("malformed label '" + cur + "' in '" + std::string(text) + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '{' || c == '}')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

}  // namespace liekit
