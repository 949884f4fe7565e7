#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "liekit/branching.hpp"
#include "liekit/errors.hpp"
#include "liekit/modules.hpp"
#include "liekit/root_system.hpp"

namespace liekit {

/// Power series sum_n coeffs[n] q^n attached to the class of a dominant
/// weight modulo delta; labels start with the alpha_0 label.
struct QSeries {
  std::vector<long long> class_labels;
  std::vector<Integer> coeffs;
  friend bool operator==(const QSeries&, const QSeries&) = default;
};

namespace detail {

inline std::vector<QSeries> group_by_class(const RootSystem& rs, const std::map<Weight, Integer>& values,
                                           const Rational& top_grade, int limit) {
  std::map<std::vector<long long>, std::vector<Integer>> classes;
  for (const auto& [w, v] : values) {
    auto labels = integral_labels(rs, w);
    Integer n = to_integer(top_grade - w.grade());
    if (n < 0 || n > limit) continue;
    auto& c = classes[labels];
    if (c.empty()) c.assign(static_cast<std::size_t>(limit) + 1, Integer(0));
    c[static_cast<std::size_t>(to_int64(n))] += v;
  }
  std::vector<QSeries> out;
  for (auto& [l, c] : classes)
    if (std::any_of(c.begin(), c.end(), [](const Integer& x) { return x != 0; }))
      out.push_back({l, std::move(c)});
  return out;
}

inline void require_affine_dominant(const RootSystem& g, const std::vector<long long>& labels) {
  if (!g.is_affine()) throw DomainError("series need an affine algebra");
  for (long long l : labels)
    if (l < 0) throw DomainError("highest weight labels must be non-negative");
}

}  // namespace detail

/// String functions of L^mu: sigma_nu(q) = sum_n m_{nu - n delta} q^n over
/// the classes nu of dominant weights, to q^limit, sorted by class labels.
inline std::vector<QSeries> string_functions(const RootSystem& g, const std::vector<long long>& labels,
                                             int limit, Algorithm algo = Algorithm::recurrence) {
  detail::require_affine_dominant(g, labels);
  const RootSystem rs = g.with_grade_limit(limit);
  const Weight mu = rs.weight_from_labels(labels);
  if (mu.level() <= 0) throw DomainError("string functions need a positive level");
  const FormalElement mults = multiplicities(irreducible_module(rs, mu), algo);
  return detail::group_by_class(rs, mults.terms(), mu.grade(), limit);
}

/// Branching functions b_nu(q) = sum_n b_{nu - n delta} q^n of L^mu_g
/// restricted to an affine subalgebra, to q^limit.
inline std::vector<QSeries> branching_functions(const RootSystem& g, const SubalgebraSpec& sub,
                                                const std::vector<long long>& labels, int limit) {
  detail::require_affine_dominant(g, labels);
  const RootSystem rs = g.with_grade_limit(limit);
  SubalgebraSpec s = sub;
  if (s.system.is_affine()) s.system = s.system.with_grade_limit(limit);
  s = affine_subalgebra(rs, s);
  const Weight mu = rs.weight_from_labels(labels);
  BranchingResult br = branch(rs, s, mu);
  return detail::group_by_class(s.system, br.coefficients, mu.grade(), limit);
}

/// "[1, 1, 2] : 1 + 6 q + 27 q^2"; zero coefficients are omitted.
inline std::string format_series(const QSeries& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.class_labels.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s.class_labels[i]);
  }
  out += "] : ";
  bool first = true;
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    const Integer& c = s.coeffs[n];
    if (c == 0) continue;
    Integer a = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (n == 0) {
      out += a.str();
    } else {
      if (a != 1) out += a.str() + " ";
      out += "q";
      if (n > 1) out += "^" + std::to_string(n);
    }
  }
  if (first) out += "0";
  return out;
}

}  // namespace liekit
