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

const std::vector<std::pair<int, int>> kFields{{2, 1}, {3, 1}, {2, 2}};

}  // namespace

TEST(PhiJ, PartitionOfUnity) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    StepFunction sum = phi_j(f, 0);
    for (int n = 1; n <= 5; ++n) {
      sum = add(sum, phi_j(f, n));
      EXPECT_EQ(max_abs_difference(sum, ball(f, -n, Side::frequency)), 0.0);
    }
  }
}

TEST(PhiJ, AnnulusValuesAndMass) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    const double q = f->q();
    const auto phi1 = phi_j(f, 1);
    EXPECT_EQ(step_eval(phi1, FieldElement::monomial(f, 1, -1)), Complex{1.0});
    EXPECT_EQ(step_eval(phi1, FieldElement::monomial(f, 1, 0)), Complex{});
    EXPECT_EQ(step_eval(phi1, FieldElement(f)), Complex{});
    for (int j = 1; j <= 5; ++j) {
      // Haar mass on the frequency side is the L^1 norm of the indicator.
      EXPECT_NEAR(lr_norm(phi_j(f, j), 1.0), std::pow(q, j) - std::pow(q, j - 1), 1e-9);
      // phi_j(xi) = phi_1(t^{j-1} xi).
      const auto pj = phi_j(f, j);
      for (const auto& xi : oracle::all_digit_strings(f, -j - 1, 1 - j)) {
        ASSERT_EQ(step_eval(pj, xi), step_eval(phi1, xi * FieldElement::monomial(f, 1, j - 1)));
      }
    }
    EXPECT_THROW(phi_j(f, -1), InvalidArgument);
  }
}

TEST(DeltaJ, BallExamples) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    const auto D = ball(f, 0);
    EXPECT_LT(max_abs_difference(delta_j(D, 0), D), 1e-14);
    for (int j = 1; j <= 3; ++j) EXPECT_LT(lr_norm(delta_j(D, j), kInfinity), 1e-14);
    const auto lp = lp_decompose(D);
    EXPECT_EQ(lp.n, 0);
    ASSERT_EQ(lp.blocks.size(), 1u);
  }
}

TEST(DeltaJ, MatchesMultiplierRoute) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = random_test_function(f, {seed, 4, 2, false});
      for (int j = 0; j <= g.resolution() + 1; ++j) {
        ASSERT_LT(max_abs_difference(delta_j(g, j), apply_multiplier(phi_j(f, j), g)), 1e-10);
        const auto dj = delta_j(g, j);
        ASSERT_LT(max_abs_difference(delta_j(dj, j), dj), 1e-10);
      }
    }
  }
}

TEST(DeltaJ, BallBlocksMatchBruteForce) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    for (int k = 0; k <= 4; ++k) {
      const auto lp = lp_decompose(ball(f, k));
      EXPECT_EQ(lp.n, k);
      for (int j = 0; j <= k; ++j) {
        const auto& block = lp.blocks[static_cast<std::size_t>(j)];
        EXPECT_GT(lr_norm(block, kInfinity), 0.0);
        for (const auto& x : oracle::all_digit_strings(f, -1, k)) {
          const Complex expected = x.is_zero() || x.valuation() >= 0 ? oracle::delta_ball_at(f, j, k, x) : Complex{};
          ASSERT_NEAR(std::abs(step_eval(block, x) - expected), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(DeltaJ, ClosedFormAgreesWithBruteForce) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    const double q = f->q();
    for (int k = 0; k <= 4; ++k) {
      for (int j = 0; j <= k; ++j) {
        for (double r : {0.5, 1.0, 2.0, kInfinity}) {
          const double brute = oracle::delta_ball_norm(f, j, k, r);
          EXPECT_NEAR(oracle::delta_ball_norm_closed(q, j, k, r), brute, 1e-12 * brute);
        }
      }
    }
  }
}

TEST(LpDecompose, ReconstructionAndOrthogonality) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto g = random_test_function(f, {seed, 4, 2, false});
      const auto lp = lp_decompose(g);
      EXPECT_EQ(lp.n, std::max(g.resolution(), 0));
      ASSERT_LT(max_abs_difference(reconstruct(lp), g), 1e-9);
      for (std::size_t j = 0; j < lp.blocks.size(); ++j) {
        EXPECT_TRUE(band_limited(lp.blocks[j], static_cast<int>(j), 1e-9));
        for (std::size_t k = 0; k < lp.blocks.size(); ++k) {
          if (k == j) continue;
          ASSERT_LT(lr_norm(delta_j(lp.blocks[j], static_cast<int>(k)), kInfinity), 1e-9);
        }
      }
    }
    const StepFunction zero(f, Side::spatial, 2, 1);
    for (const auto& b : lp_decompose(zero).blocks) EXPECT_TRUE(b.is_zero());
  }
}

TEST(Besov, IndicatorOfDHasNormOne) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    for (double s : {-1.0, 0.5, 2.0}) {
      for (double r : {0.5, 2.0, kInfinity}) {
        for (double t : {1.0, 2.0, kInfinity}) EXPECT_NEAR(besov_norm(ball(f, 0), {s, r, t}), 1.0, 1e-12);
      }
    }
    EXPECT_EQ(besov_norm(StepFunction(f, Side::spatial, 1, 1), {1, 2, 2}), 0.0);
  }
}

TEST(Besov, BallNormsMatchOracle) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    for (int k = 0; k <= 5; ++k) {
      for (const BesovParams bp : {BesovParams{1, 2, 2}, BesovParams{0.7, 0.5, 1}, BesovParams{2, kInfinity, kInfinity}}) {
        const double expected = oracle::besov_ball(f, k, bp, false);
        EXPECT_NEAR(besov_norm(ball(f, k), bp), expected, 1e-9 * expected);
      }
    }
  }
}

TEST(Besov, MonotoneInSmoothness) {
  auto f = field_init(3, 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_test_function(f, {seed, 4, 2, false});
    double prev = 0.0;
    for (double s = -1.0; s <= 2.0; s += 0.25) {
      const double v = besov_norm(g, {s, 1.5, 2.0});
      EXPECT_GE(v, prev * (1 - 1e-12));
      prev = v;
    }
  }
}

TEST(Besov, TranslationInvariant) {
  auto f = field_init(2, 2);
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_test_function(f, {seed, 4, 2, false});
    std::vector<Digit> d(5);
    for (auto& x : d) x = static_cast<Digit>(rng.below(f->q()));
    const auto z = FieldElement::from_digits(f, -3, d);
    for (const BesovParams bp : {BesovParams{1, 2, 2}, BesovParams{0.5, 0.5, 0.7}}) {
      const double a = besov_norm(g, bp);
      EXPECT_NEAR(besov_norm(step_translate(g, z), bp), a, 1e-9 * a);
    }
  }
}

TEST(Besov, ParameterValidation) {
  auto f = field_init(2, 1);
  EXPECT_THROW(besov_norm(ball(f, 0), {1, 0, 2}), InvalidArgument);
  EXPECT_THROW(besov_norm(ball(f, 0), {1, 2, -1}), InvalidArgument);
  EXPECT_EQ(sigma_r(2.0), 0.0);
  EXPECT_EQ(sigma_r(1.0), 0.0);
  EXPECT_EQ(sigma_r(0.5), 1.0);
  EXPECT_EQ(sigma_r(kInfinity), 0.0);
  EXPECT_THROW(sigma_r(0.0), InvalidArgument);
}

TEST(Hs2, CutoffExamples) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    const double q = f->q();
    for (double sigma : {0.5, 1.0, 1.5}) {
      EXPECT_NEAR(hs2_norm(phi_j(f, 0), sigma), 1.0, 1e-12);
      for (int k = 1; k <= 5; ++k) {
        // phi_0(t^{-k} .) is the frequency indicator of Gamma^0 dilated by k.
        const auto M = StepFunction::ball(f, Side::frequency, FieldElement(f), k);
        const double v = hs2_norm(M, sigma);
        EXPECT_LE(v, std::pow(q, k * (sigma - 0.5)) * (1 + 1e-12));
        EXPECT_NEAR(hs2_norm_unitary(M, sigma), v, 1e-9 * v);
      }
    }
  }
}

TEST(PtypeDerivative, Examples) {
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    const auto D = ball(f, 0);
    for (double a : {-1.0, 0.5, 2.0}) EXPECT_LT(max_abs_difference(ptype_derivative(D, a), D), 1e-13);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = random_test_function(f, {seed, 3, 2, false});
      EXPECT_LT(max_abs_difference(ptype_derivative(g, 0.0), g), 1e-12);
      for (double a : {0.5, 1.3}) EXPECT_LT(max_abs_difference(ptype_derivative(ptype_derivative(g, a), -a), g), 1e-9);
    }
  }
}

TEST(AGamma, ExactSupremum) {
  // (phi_j^vee)^{<s>} = q^{js}(q^j Phi_{P^j} - q^{j-1} Phi_{P^{j-1}}), whose sup is
  // q^{js} q^{j-1} max(q - 1, 1).
  for (auto [p, c] : kFields) {
    auto f = field_init(p, c);
    const double q = f->q();
    const auto j0 = check_a_gamma_condition(f, 0, 1.0);
    EXPECT_NEAR(j0.sup_value, 1.0, 1e-12);
    EXPECT_NEAR(j0.bound_ratio, j0.sup_value, 1e-15);
    for (int j = 1; j <= 5; ++j) {
      for (double s : {0.5, 1.0, 2.0}) {
        const auto rec = check_a_gamma_condition(f, j, s);
        const double expected = std::pow(q, j * s) * std::pow(q, j - 1) * std::max(q - 1.0, 1.0);
        EXPECT_NEAR(rec.sup_value, expected, 1e-9 * expected);
        EXPECT_NEAR(rec.bound, std::pow(q, -j + j * s), 1e-12 * rec.bound);
      }
    }
    EXPECT_THROW(check_a_gamma_condition(f, 1, 0.0), InvalidArgument);
    EXPECT_THROW(check_a_gamma_condition(f, -1, 1.0), InvalidArgument);
  }
}
