#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "liekit/errors.hpp"
#include "liekit/rational.hpp"

namespace liekit {

/// A weight in orthogonal ambient coordinates. Affine weights carry
/// two extra coordinates: level (pairing with delta) and grade
/// (coefficient of delta).
class Weight {
 public:
  Weight() = default;

  static Weight finite(std::vector<Rational> coords) {
    Weight w;
    w.coords_ = std::move(coords);
    return w;
  }

  static Weight finite(std::initializer_list<long long> coords) {
    std::vector<Rational> v;
    for (long long c : coords) v.emplace_back(c);
    return finite(std::move(v));
  }

  static Weight affine(std::vector<Rational> coords, Rational level, Rational grade) {
    Weight w;
    w.coords_ = std::move(coords);
    w.affine_ = true;
    w.level_ = std::move(level);
    w.grade_ = std::move(grade);
    return w;
  }

  static Weight zero(std::size_t dim, bool affine = false) {
    Weight w;
    w.coords_.assign(dim, Rational(0));
    w.affine_ = affine;
    return w;
  }

  /// The imaginary root: level 0, grade 1.
  static Weight delta(std::size_t dim) { return affine(std::vector<Rational>(dim), 0, 1); }

  /// The zeroth fundamental weight: level 1, grade 0.
  static Weight omega0(std::size_t dim) { return affine(std::vector<Rational>(dim), 1, 0); }

  bool is_affine() const { return affine_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const Rational& level() const { return level_; }
  const Rational& grade() const { return grade_; }

  Weight finite_part() const { return finite(coords_); }

  /// Same finite part, new level and grade.
  Weight with_affine(Rational level, Rational grade) const {
    return affine(coords_, std::move(level), std::move(grade));
  }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return level_ == 0 && grade_ == 0;
  }

  Weight& operator+=(const Weight& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    level_ += o.level_;
    grade_ += o.grade_;
    return *this;
  }

  Weight& operator-=(const Weight& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    level_ -= o.level_;
    grade_ -= o.grade_;
    return *this;
  }

  Weight& operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    level_ *= c;
    grade_ *= c;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator*(Weight a, const Rational& c) { return a *= c; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.affine_ == b.affine_ && a.coords_ == b.coords_ && a.level_ == b.level_ &&
           a.grade_ == b.grade_;
  }

  /// Total order used as the canonical key: kind, dimension,
  /// coordinates lexicographically, then level and grade.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.affine_ != b.affine_) return a.affine_ ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
      if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
    }
    if (a.level_ != b.level_)
      return a.level_ < b.level_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.grade_ != b.grade_)
      return a.grade_ < b.grade_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  void check_compatible(const Weight& o) const {
    if (affine_ != o.affine_)
      throw StructuralError("cannot combine finite and affine weights");
    if (coords_.size() != o.coords_.size())
      throw StructuralError("weight dimension mismatch: " + std::to_string(coords_.size()) +
                            " vs " + std::to_string(o.coords_.size()));
  }

 private:
  std::vector<Rational> coords_;
  bool affine_ = false;
  Rational level_{0};
  Rational grade_{0};
};

/// Euclidean product of the finite parts, plus level*grade cross terms.
inline Rational inner(const Weight& a, const Weight& b) {
  a.check_compatible(b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  if (a.is_affine()) s += a.level() * b.grade() + b.level() * a.grade();
  return s;
}

/// "(1/2, -1/2)" or "(1, 0; level 1, grade -2)".
inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.dim(); ++i) {
    if (i) s += ", ";
    s += format_rational(w[i]);
  }
  if (w.is_affine())
    s += "; level " + format_rational(w.level()) + ", grade " + format_rational(w.grade());
  return s + ")";
}

}  // namespace liekit
