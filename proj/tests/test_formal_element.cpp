#include <random>

#include <gtest/gtest.h>

#include "liekit/liekit.hpp"
#include "oracles.hpp"

using namespace liekit;

namespace {

FormalElement random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-2, 2), m(-3, 3), n(0, 3);
  FormalElement f;
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) f.add_term(Weight::finite({c(rng), c(rng)}), m(rng));
  return f;
}

/// Denominator product over the given positive roots.
FormalElement denominator(const std::vector<Weight>& roots) {
  const Weight zero = Weight::zero(roots.front().dim());
  FormalElement p = FormalElement::exp(zero);
  for (const auto& a : roots) p = p * (FormalElement::exp(zero) - FormalElement::exp(-a));
  return p;
}

}  // namespace

TEST(FormalElement, ConstructorCollectsTerms) {
  FormalElement f({Weight::finite({1, 1}), Weight::finite({0, 0})}, {1, 2});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(Weight::finite({0, 0})), 2);
  EXPECT_TRUE(FormalElement({}, {}).empty());
  Weight w = Weight::finite({3, 1});
  EXPECT_TRUE(FormalElement({w, w}, {1, -1}).empty());
  EXPECT_THROW(FormalElement({w}, {1, 2}), DomainError);
}

TEST(FormalElement, AdditionAndShiftIdentities) {
  FormalElement x({Weight::finite({1, 1}), Weight::finite({0, 0})}, {1, 2});
  EXPECT_EQ(x + FormalElement(), x);
  EXPECT_EQ(x.shifted(Weight::finite({0, 0})), x);
  EXPECT_TRUE((x - x).empty());
}

TEST(FormalElement, ShiftedAndScaledProduct) {
  FormalElement x({Weight::finite({1, 1}), Weight::finite({0, 0})}, {1, 2});
  FormalElement y = Integer(2) * x.shifted(Weight::finite({1, 0}));
  EXPECT_EQ(y, FormalElement({Weight::finite({2, 1}), Weight::finite({1, 0})}, {2, 4}));
  FormalElement p = x * y;
  EXPECT_EQ(p.weights(), (std::vector<Weight>{Weight::finite({1, 0}), Weight::finite({2, 1}), Weight::finite({3, 2})}));
  EXPECT_EQ(p.multiplicities(), (std::vector<Integer>{8, 8, 2}));
}

TEST(FormalElement, UnitAndTelescoping) {
  FormalElement x({Weight::finite({1, 1}), Weight::finite({0, 0})}, {1, 2});
  EXPECT_EQ(x * FormalElement::exp(Weight::finite({0, 0})), x);
  const Weight alpha = Weight::finite({1, -1});
  const Weight zero = Weight::finite({0, 0});
  for (int k = 0; k < 6; ++k) {
    FormalElement geo;
    for (int j = 0; j <= k; ++j) geo.add_term(Rational(-j) * alpha, 1);
    FormalElement lhs = (FormalElement::exp(zero) - FormalElement::exp(-alpha)) * geo;
    EXPECT_EQ(lhs, FormalElement::exp(zero) - FormalElement::exp(Rational(-(k + 1)) * alpha));
  }
}

TEST(FormalElement, RingLaws) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    FormalElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(FormalElement, NoZeroTermsAreVisible) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    FormalElement a = random_element(rng) * random_element(rng) - random_element(rng);
    for (const auto& [w, m] : a) EXPECT_NE(m, 0);
  }
}

TEST(FormalElement, WeylDenominatorIdentityA2AndB2) {
  struct Case {
    std::vector<Weight> simple, positive;
  };
  std::vector<Case> cases{
      {{Weight::finite({1, -1, 0}), Weight::finite({0, 1, -1})}, oracle::positive_roots_a2()},
      {{Weight::finite({1, -1}), Weight::finite({0, 1})}, oracle::positive_roots_b2()}};
  for (const auto& c : cases) {
    Weight rho = Weight::zero(c.positive.front().dim());
    for (const auto& a : c.positive) rho += make_rational(1, 2) * a;
    FormalElement alt;
    for (const auto& [w, s] : oracle::signed_orbit(c.simple, rho)) alt.add_term(w - rho, s);
    EXPECT_EQ(denominator(c.positive), alt);
  }
}

TEST(FormalElement, MixingKindsIsRejected) {
  FormalElement f = FormalElement::exp(Weight::finite({1}));
  EXPECT_THROW(f + FormalElement::exp(Weight::delta(1)), StructuralError);
  EXPECT_THROW(f * FormalElement::exp(Weight::finite({1, 0})), StructuralError);
}

TEST(FormalElement, GradeTruncation) {
  const Weight d = Weight::delta(1);
  FormalElement a({Weight::zero(1, true), -d}, {1, 1});
  FormalElement p = multiply_truncated(a, a, -1);
  EXPECT_EQ(p, FormalElement({Weight::zero(1, true), -d}, {1, 2}));
  EXPECT_EQ((a * a).truncated_by_grade(1), p);
}
