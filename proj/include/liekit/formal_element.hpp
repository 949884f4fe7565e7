#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liekit/errors.hpp"
#include "liekit/rational.hpp"
#include "liekit/weight.hpp"

namespace liekit {

/// Finite sum of m * e^w with integer m. Zero terms are never stored and
/// iteration follows the weight order.
class FormalElement {
 public:
  using Terms = std::map<Weight, Integer>;

  FormalElement() = default;

  FormalElement(const std::vector<Weight>& weights, const std::vector<Integer>& mults) {
    if (weights.size() != mults.size())
      throw DomainError("formal element needs as many multiplicities as weights");
    for (std::size_t i = 0; i < weights.size(); ++i) add_term(weights[i], mults[i]);
  }

  /// The single term 1 * e^w.
  static FormalElement exp(const Weight& w) {
    FormalElement f;
    f.add_term(w, 1);
    return f;
  }

  void add_term(const Weight& w, const Integer& m) {
    if (m == 0) return;
    if (!terms_.empty()) terms_.begin()->first.check_compatible(w);
    auto [it, inserted] = terms_.try_emplace(w, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool contains(const Weight& w) const { return terms_.count(w) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  std::vector<Weight> weights() const {
    std::vector<Weight> out;
    for (const auto& [w, m] : terms_) out.push_back(w);
    return out;
  }

  std::vector<Integer> multiplicities() const {
    std::vector<Integer> out;
    for (const auto& [w, m] : terms_) out.push_back(m);
    return out;
  }

  /// Sum of all coefficients (the dimension, for a character).
  Integer total() const {
    Integer s = 0;
    for (const auto& [w, m] : terms_) s += m;
    return s;
  }

  FormalElement& operator+=(const FormalElement& o) {
    for (const auto& [w, m] : o.terms_) add_term(w, m);
    return *this;
  }

  FormalElement& operator-=(const FormalElement& o) {
    for (const auto& [w, m] : o.terms_) add_term(w, -m);
    return *this;
  }

  FormalElement& operator*=(const Integer& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, m] : terms_) m *= c;
    return *this;
  }

  /// Multiply by e^g.
  FormalElement shifted(const Weight& g) const {
    FormalElement out;
    for (const auto& [w, m] : terms_) out.terms_.emplace_hint(out.terms_.end(), w + g, m);
    return out;
  }

  friend FormalElement operator+(FormalElement a, const FormalElement& b) { return a += b; }
  friend FormalElement operator-(FormalElement a, const FormalElement& b) { return a -= b; }
  friend FormalElement operator*(const Integer& c, FormalElement a) { return a *= c; }
  friend FormalElement operator*(FormalElement a, const Integer& c) { return a *= c; }

  friend FormalElement operator*(const FormalElement& a, const FormalElement& b) {
    FormalElement out;
    for (const auto& [wa, ma] : a.terms_)
      for (const auto& [wb, mb] : b.terms_) out.add_term(wa + wb, ma * mb);
    return out;
  }

  friend bool operator==(const FormalElement& a, const FormalElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Product that drops terms with grade below min_grade.
  friend FormalElement multiply_truncated(const FormalElement& a, const FormalElement& b,
                                          const Rational& min_grade) {
    FormalElement out;
    for (const auto& [wa, ma] : a.terms_)
      for (const auto& [wb, mb] : b.terms_) {
        if (wa.grade() + wb.grade() < min_grade) continue;
        out.add_term(wa + wb, ma * mb);
      }
    return out;
  }

  /// Keep only terms with grade >= -limit.
  FormalElement truncated_by_grade(long long limit) const {
    FormalElement out;
    for (const auto& [w, m] : terms_)
      if (w.grade() >= -limit) out.terms_.emplace_hint(out.terms_.end(), w, m);
    return out;
  }

  template <class Pred>
  FormalElement filtered(Pred keep) const {
    FormalElement out;
    for (const auto& [w, m] : terms_)
      if (keep(w)) out.terms_.emplace_hint(out.terms_.end(), w, m);
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace liekit
