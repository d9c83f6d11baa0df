#include <gtest/gtest.h>

#include <cmath>

#include "localfield/errors.hpp"
#include "localfield/experiments.hpp"
#include "oracles.hpp"

using namespace lf;

namespace {

FieldElement el(const FieldPtr& f, int lo, std::vector<Digit> d) { return FieldElement::from_digits(f, lo, std::move(d)); }

FieldElement random_element(const FieldPtr& f, Rng& rng, int lo, int hi) {
  std::vector<Digit> d(static_cast<std::size_t>(hi - lo + 1));
  for (auto& x : d) x = static_cast<Digit>(rng.below(f->q()));
  return el(f, lo, d);
}

}  // namespace

TEST(FieldElement, CharacteristicTwoCancels) {
  auto f = field_init(2, 1);
  Rng rng(3);
  for (int n = 0; n < 50; ++n) {
    const auto x = random_element(f, rng, -5, 5);
    EXPECT_TRUE((x + x).is_zero());
  }
}

TEST(FieldElement, MonomialProduct) {
  auto f = field_init(3, 1);
  const auto x = FieldElement::monomial(f, 1, -1) * FieldElement::monomial(f, 1, 3);
  EXPECT_EQ(x, FieldElement::monomial(f, 1, 2));
  EXPECT_EQ(x.valuation(), 2);
}

TEST(FieldElement, ConvolutionModThree) {
  auto f = field_init(3, 1);
  // (1 + 2t)(2 + t) = 2 + t + 4t + 2t^2 = 2 + 5t + 2t^2 = 2 + 2t + 2t^2 mod 3.
  EXPECT_EQ(el(f, 0, {1, 2}) * el(f, 0, {2, 1}), el(f, 0, {2, 2, 2}));
}

TEST(FieldElement, AbsoluteValue) {
  for (auto [p, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = field_init(p, c);
    const double q = f->q();
    EXPECT_EQ(FieldElement(f).abs(), 0.0);
    EXPECT_EQ(FieldElement::monomial(f, 1, 1).abs(), 1.0 / q);
    EXPECT_EQ((FieldElement::monomial(f, 1, -2) * el(f, 0, {1, 1})).abs(), q * q);
    EXPECT_THROW(FieldElement(f).valuation(), InvalidArgument);
  }
}

TEST(FieldElement, UltrametricAndMultiplicative) {
  for (auto [p, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = field_init(p, c);
    Rng rng(p * 10 + c);
    for (int n = 0; n < 300; ++n) {
      const int a = rng.between(-4, 4), b = rng.between(-4, 4);
      const auto x = random_element(f, rng, a, a + rng.between(0, 3));
      const auto y = random_element(f, rng, b, b + rng.between(0, 3));
      const double s = (x + y).abs();
      EXPECT_LE(s, std::max(x.abs(), y.abs()));
      if (x.abs() != y.abs()) EXPECT_EQ(s, std::max(x.abs(), y.abs()));
      EXPECT_DOUBLE_EQ((x * y).abs(), x.abs() * y.abs());
    }
  }
}

TEST(FieldElement, CanonicalFormTrimsZeros) {
  auto f = field_init(3, 1);
  const auto x = el(f, -3, {0, 0, 1, 2, 0, 0});
  EXPECT_EQ(x.lo(), -1);
  EXPECT_EQ(x.hi(), 0);
  EXPECT_EQ(x, el(f, -1, {1, 2}));
  EXPECT_EQ(el(f, 4, {0, 0}), FieldElement(f));
  EXPECT_EQ(x.truncated_below(0), FieldElement::monomial(f, 1, -1));
  EXPECT_EQ(x.truncated_below(0).truncated_below(0), x.truncated_below(0));
}

TEST(FieldElement, PrecisionWindowIsEnforced) {
  FieldOptions opts;
  opts.window = {-4, 4};
  auto f = field_init(2, 1, std::nullopt, opts);
  EXPECT_THROW(FieldElement::monomial(f, 1, 5), PrecisionOverflow);
  const auto x = FieldElement::monomial(f, 1, 3);
  EXPECT_THROW(x * x, PrecisionOverflow);
  EXPECT_THROW(CosetGrid(*f, 6, 0), PrecisionOverflow);
}

TEST(FieldElement, LiteralRoundTrip) {
  for (auto [p, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    auto f = field_init(p, c);
    Rng rng(p + 7 * c);
    for (int n = 0; n < 100; ++n) {
      const auto x = random_element(f, rng, rng.between(-5, 0), rng.between(0, 5));
      EXPECT_EQ(FieldElement::parse_literal(f, x.to_literal()), x);
    }
  }
  auto f2 = field_init(2, 1);
  EXPECT_EQ(el(f2, -1, {1, 1}).to_literal(), "q=2^1; 1@-1,1@0");
  EXPECT_EQ(FieldElement(f2).to_literal(), "q=2^1; 0");
  auto f4 = field_init(2, 2);
  EXPECT_EQ(FieldElement::monomial(f4, 2, 1).to_literal(), "q=2^2; (0,1)@1");
}

TEST(FieldElement, LiteralErrorsCarryOffsets) {
  auto f = field_init(2, 1);
  try {
    FieldElement::parse_literal(f, "q=2^1; 1@-1,x@0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
  EXPECT_THROW(FieldElement::parse_literal(f, "q=3^1; 1@0"), ParseError);
  EXPECT_THROW(FieldElement::parse_literal(f, "q=2^1; 2@0"), ParseError);
  EXPECT_THROW(FieldElement::parse_literal(f, "q=2^1; 1@0,1@0"), ParseError);
}

TEST(CosetReps, SmallExamples) {
  auto f2 = field_init(2, 1);
  auto reps = coset_reps(f2, 1, 0);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_TRUE(reps[0].rep.is_zero());
  EXPECT_EQ(reps[1].rep, FieldElement::monomial(f2, 1, 0));

  auto f3 = field_init(3, 1);
  reps = coset_reps(f3, 0, 1);
  ASSERT_EQ(reps.size(), 3u);
  EXPECT_TRUE(reps[0].rep.is_zero());
  EXPECT_EQ(reps[1].rep, FieldElement::monomial(f3, 1, -1));
  EXPECT_EQ(reps[2].rep, FieldElement::monomial(f3, 2, -1));
}

TEST(CosetReps, PartitionIsExhaustiveAndDisjoint) {
  for (auto [p, c, m, M] : std::vector<std::tuple<int, int, int, int>>{{2, 1, 2, 1}, {3, 1, 1, 1}, {2, 2, 0, 2},
                                                                       {2, 1, -1, 3}, {5, 1, 1, 0}}) {
    auto f = field_init(p, c);
    const auto reps = coset_reps(f, m, M);
    ASSERT_EQ(reps.size(), static_cast<std::size_t>(std::pow(f->q(), M + m)));
    // Every digit string with exponents in [-M, m+1] lies in exactly one coset.
    for (const auto& x : oracle::all_digit_strings(f, -M, m + 1)) {
      int hits = 0;
      for (const auto& id : reps) {
        const auto d = x - id.rep;
        if (d.is_zero() || d.valuation() >= m) ++hits;
      }
      ASSERT_EQ(hits, 1) << x.to_literal();
    }
    // Elements outside P^{-M} lie in none.
    const auto outside = FieldElement::monomial(f, 1, -M - 1);
    for (const auto& id : reps) EXPECT_FALSE((outside - id.rep).abs() <= std::pow(f->q(), -m));
  }
}

TEST(CosetGrid, IndexOfMatchesRep) {
  auto f = field_init(3, 1);
  const CosetGrid grid(*f, 2, 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto rep = grid.rep(f, i);
    EXPECT_EQ(grid.index_of(rep), i);
    EXPECT_EQ(grid.index_of(rep + FieldElement::monomial(f, 2, 3)), i);
  }
  EXPECT_FALSE(grid.index_of(FieldElement::monomial(f, 1, -2)).has_value());
  EXPECT_THROW(coset_reps(f, -2, 1), InvalidArgument);
}

TEST(CosetGrid, EnumerationLimit) {
  FieldOptions opts;
  opts.enumeration_limit = 1000;
  auto f = field_init(2, 1, std::nullopt, opts);
  EXPECT_NO_THROW(CosetGrid(*f, 5, 4));
  EXPECT_THROW(CosetGrid(*f, 6, 4), LimitExceeded);
}

TEST(Character, Examples) {
  auto f = field_init(2, 1);
  EXPECT_NEAR(std::abs(character_eval(FieldElement::monomial(f, 1, 0), FieldElement::monomial(f, 1, -1)) - Complex{-1.0}), 0.0, 1e-15);
  Rng rng(11);
  for (auto [p, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    auto fp = field_init(p, c);
    for (int n = 0; n < 200; ++n) {
      const auto x = random_element(fp, rng, 0, 4);  // in D
      EXPECT_NEAR(std::abs(character_eval(FieldElement::monomial(fp, 1, 0), x) - Complex{1.0}), 0.0, 1e-15);
      const auto xi = random_element(fp, rng, -3, 2);
      const auto a = random_element(fp, rng, -3, 3);
      const auto b = random_element(fp, rng, -3, 3);
      EXPECT_NEAR(std::abs(character_eval(xi, a + b) - character_eval(xi, a) * character_eval(xi, b)), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(character_eval(xi, a) - oracle::chi(xi, a)), 0.0, 1e-12);
    }
  }
}

TEST(Character, NontrivialOnPMinusOne) {
  for (auto [p, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto f = field_init(p, c);
    bool nontrivial = false;
    for (const auto& x : oracle::all_digit_strings(f, -1, 0)) {
      nontrivial = nontrivial || std::abs(character_eval(FieldElement::monomial(f, 1, 0), x) - Complex{1.0}) > 0.5;
    }
    EXPECT_TRUE(nontrivial);
  }
}

TEST(Character, OrthogonalityOverCosetSystems) {
  auto f = field_init(3, 1);
  const int m = 1, M = 1;
  const auto reps = coset_reps(f, m, M);
  for (const auto& xi : oracle::all_digit_strings(f, -2, 1)) {
    Complex sum{};
    bool annihilates = true;
    for (const auto& id : reps) {
      const Complex v = character_eval(xi, id.rep);
      sum += v;
      annihilates = annihilates && std::abs(v - Complex{1.0}) < 1e-12;
    }
    if (annihilates) {
      EXPECT_NEAR(std::abs(sum), static_cast<double>(reps.size()), 1e-9);
    } else {
      EXPECT_NEAR(std::abs(sum), 0.0, 1e-9);
    }
  }
}
