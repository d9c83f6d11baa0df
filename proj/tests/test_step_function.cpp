#include <gtest/gtest.h>

#include <cmath>

#include "localfield/errors.hpp"
#include "localfield/experiments.hpp"
#include "oracles.hpp"

using namespace lf;

namespace {

StepFunction ball(const FieldPtr& f, int k, Side side = Side::spatial) {
  return StepFunction::ball(f, side, FieldElement(f), k);
}

}  // namespace

TEST(StepFunction, EvalExamples) {
  auto f = field_init(3, 1);
  const auto D = ball(f, 0);
  EXPECT_EQ(step_eval(D, FieldElement::monomial(f, 1, 1)), Complex{1.0});
  EXPECT_EQ(step_eval(D, FieldElement::monomial(f, 1, -1)), Complex{});
  const auto g = subtract(scale(ball(f, 1), 2.0), D);
  EXPECT_EQ(step_eval(g, FieldElement::monomial(f, 2, 0)), Complex{-1.0});
  EXPECT_EQ(step_eval(g, FieldElement::monomial(f, 2, 1)), Complex{1.0});
}

TEST(StepFunction, AlgebraExamples) {
  auto f = field_init(2, 1);
  Rng rng(5);
  const auto r = random_test_function(f, {9, 5, 2, false});
  EXPECT_TRUE(add(r, scale(r, -1.0)).is_zero());
  const auto prod = multiply(ball(f, 0), ball(f, 1));
  EXPECT_EQ(max_abs_difference(prod, ball(f, 1)), 0.0);
  const auto sum = add(ball(f, 0), ball(f, 1));
  const auto sq = multiply(sum, sum);
  EXPECT_EQ(max_abs_difference(sq, add(ball(f, 0), scale(ball(f, 1), 3.0))), 0.0);
  const auto c = conj(scale(ball(f, 0), Complex{0.0, 2.0}));
  EXPECT_EQ(c[0], (Complex{0.0, -2.0}));
  EXPECT_THROW(add(ball(f, 0), ball(f, 0, Side::frequency)), DomainMismatch);
  EXPECT_THROW(add(ball(f, 0), ball(field_init(3, 1), 0)), DomainMismatch);
}

TEST(StepFunction, TranslationExamples) {
  auto f = field_init(3, 1);
  const auto D = ball(f, 0);
  EXPECT_EQ(max_abs_difference(step_translate(D, FieldElement(f)), D), 0.0);
  const auto small = FieldElement::from_digits(f, 0, {2, 1, 1});
  EXPECT_EQ(max_abs_difference(step_translate(D, small), D), 0.0);
  const auto z = FieldElement::monomial(f, 1, -1);
  const auto moved = step_translate(D, z);
  EXPECT_EQ(step_eval(moved, z), Complex{1.0});
  EXPECT_EQ(step_eval(moved, FieldElement(f)), Complex{});
  EXPECT_TRUE(multiply(moved, D).is_zero());
}

TEST(StepFunction, TranslationMovesValuesPointwise) {
  for (auto [p, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = field_init(p, c);
    Rng rng(p * 3 + c);
    for (int n = 0; n < 20; ++n) {
      const auto g = random_test_function(f, {static_cast<std::uint64_t>(n), 3, 1, false});
      std::vector<Digit> d(3);
      for (auto& x : d) x = static_cast<Digit>(rng.below(f->q()));
      const auto z = FieldElement::from_digits(f, -2, d);
      const auto h = step_translate(g, z);
      for (const auto& x : oracle::all_digit_strings(f, -3, g.resolution() - 1)) {
        ASSERT_EQ(step_eval(h, x), step_eval(g, x - z));
      }
    }
  }
}

TEST(StepFunction, LrNormExamples) {
  for (auto [p, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = field_init(p, c);
    const double q = f->q();
    for (double r : {0.5, 1.0, 2.0, 3.0, kInfinity}) {
      EXPECT_NEAR(lr_norm(ball(f, 0), r), 1.0, 1e-15);
      for (int k = -2; k <= 4; ++k) {
        const double expected = std::isinf(r) ? 1.0 : std::pow(q, -k / r);
        EXPECT_NEAR(lr_norm(ball(f, k), r) / expected, 1.0, 1e-14);
      }
    }
  }
}

TEST(StepFunction, HaarMeasure) {
  auto f = field_init(3, 1);
  EXPECT_EQ(haar_measure({FieldElement(f), 0}), 1.0);
  EXPECT_NEAR(haar_measure({FieldElement(f), 1}), 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(haar_measure({FieldElement::monomial(f, 1, -3), 2}), 1.0 / 9.0, 1e-16);
}

TEST(StepFunction, TranslationPreservesLrNorms) {
  auto f = field_init(2, 2);
  Rng rng(77);
  for (int n = 0; n < 30; ++n) {
    const auto g = random_test_function(f, {static_cast<std::uint64_t>(100 + n), 4, 2, false});
    std::vector<Digit> d(5);
    for (auto& x : d) x = static_cast<Digit>(rng.below(f->q()));
    const auto z = FieldElement::from_digits(f, -4, d);
    for (double r : {0.5, 1.0, 2.0, kInfinity}) {
      EXPECT_NEAR(lr_norm(step_translate(g, z), r), lr_norm(g, r), 1e-12 * lr_norm(g, r));
    }
  }
}

TEST(StepFunction, RefinementInvariance) {
  auto f = field_init(3, 1);
  for (int n = 0; n < 20; ++n) {
    const auto g = random_test_function(f, {static_cast<std::uint64_t>(n), 4, 1, false});
    const auto h = g.refined(g.resolution() + 2, g.support() + 1);
    for (double r : {0.5, 1.0, 2.0, kInfinity}) EXPECT_NEAR(lr_norm(h, r), lr_norm(g, r), 1e-12 * lr_norm(g, r));
    for (const auto& x : oracle::all_digit_strings(f, -g.support() - 1, g.resolution() + 1)) {
      ASSERT_EQ(step_eval(h, x), step_eval(g, x));
    }
    EXPECT_EQ(max_abs_difference(h.compacted(), g.compacted()), 0.0);
  }
}

TEST(StepFunction, QuasiTriangle) {
  auto f = field_init(2, 1);
  for (int n = 0; n < 50; ++n) {
    const auto a = random_test_function(f, {static_cast<std::uint64_t>(2 * n), 3, 2, false});
    const auto b = random_test_function(f, {static_cast<std::uint64_t>(2 * n + 1), 3, 2, false});
    const auto s = add(a, b);
    for (double r : {1.0, 1.5, 2.0, kInfinity}) EXPECT_LE(lr_norm(s, r), lr_norm(a, r) + lr_norm(b, r) + 1e-12);
    for (double r : {0.3, 0.5, 0.9}) {
      EXPECT_LE(std::pow(lr_norm(s, r), r), std::pow(lr_norm(a, r), r) + std::pow(lr_norm(b, r), r) + 1e-12);
    }
  }
}

TEST(StepFunction, AddBallOutsideGridThrows) {
  auto f = field_init(2, 1);
  StepFunction g(f, Side::spatial, 1, 1);
  EXPECT_THROW(g.add_ball(FieldElement(f), 2, 1.0), InvalidArgument);
  EXPECT_THROW(g.add_ball(FieldElement(f), -2, 1.0), InvalidArgument);
  EXPECT_THROW(g.add_ball(FieldElement::monomial(f, 1, -3), 1, 1.0), InvalidArgument);
  EXPECT_THROW(StepFunction(f, Side::spatial, 1, 1, std::vector<Complex>(3)), InvalidArgument);
}

TEST(StepFunction, NonzeroTermsRebuildTheFunction) {
  auto f = field_init(3, 1);
  const auto g = random_test_function(f, {4, 4, 1, false});
  StepFunction h(f, Side::spatial, g.resolution(), g.support());
  for (const auto& [id, v] : g.nonzero_terms()) h.add_ball(id.rep, id.level, v);
  EXPECT_EQ(max_abs_difference(g, h), 0.0);
}
