#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liekit/errors.hpp"

namespace liekit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// p/q with the sign carried by the numerator.
inline Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw DomainError("rational with zero denominator");
  return q < 0 ? Rational(-p) / Rational(-q) : Rational(p) / Rational(q);
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline Integer floor_of(const Rational& r) {
  Integer n = numerator(r);
  Integer d = denominator(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline Integer ceil_of(const Rational& r) { return -floor_of(-r); }

inline Integer to_integer(const Rational& r) {
  if (!is_integral(r)) throw DomainError("expected an integer, got " + r.str());
  return numerator(r);
}

inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw DomainError("integer out of 64-bit range: " + v.str());
  return v.convert_to<std::int64_t>();
}

/// "p/q" or "p" when q == 1.
inline std::string format_rational(const Rational& r) { return r.str(); }

/// Accepts "p", "-p", "p/q"; surrounding blanks are ignored.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw UsageError("malformed rational '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw UsageError("malformed rational '" + std::string(text) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer q = parse_int(text.substr(slash + 1));
  if (q == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_int(text.substr(0, slash)), q);
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<RationalMatrix> inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace liekit
