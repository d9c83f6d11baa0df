#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "localfield/operators.hpp"

namespace lf {

/// Seeded generator with a platform independent mapping to doubles.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)); }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

struct RandomFunctionSpec {
  std::uint64_t seed = 1;
  int num_terms = 4;
  int max_level = 2;
  /// All coefficients 1 instead of random magnitude and phase.
  bool unit_coefficients = false;
};

/// coef * indicator(center + P^level).
struct BallTerm {
  FieldElement center;
  int level = 0;
  Complex coef{1.0, 0.0};
};

/// Sum of the terms on the smallest grid holding all of them.
StepFunction from_terms(const FieldPtr& field, std::span<const BallTerm> terms);

/// The terms behind random_test_function(field, spec).
std::vector<BallTerm> random_terms(const FieldPtr& field, const RandomFunctionSpec& spec);

/// sum c_k Phi(h_k + P^{l_k}) with l_k uniform in [-L, L], h_k a random
/// canonical representative whose digits sit in [-L, l_k - 1] and |c_k| in
/// [0.5, 2] with a uniform phase. The grid is the smallest one holding every
/// term.
StepFunction random_test_function(const FieldPtr& field, const RandomFunctionSpec& spec);

/// A compactly supported radial symbol on the frequency side: one random real
/// value in [0.5, 2] on the ball |xi| <= q^{e_min} and on each sphere up to
/// q^{e_max}, zero beyond. e_min is drawn from [-3, 0], e_max from [0, 3].
StepFunction random_radial_symbol(const FieldPtr& field, std::uint64_t seed);

/// Indicator of P^k on the minimal grid; k = 0 gives the indicator of D.
StepFunction ball_indicator(const FieldPtr& field, int k);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< max |log_q y - (slope x + intercept)|
};

/// Least squares on (x, log_q y). Needs at least three points and y > 0.
ExponentFit fit_exponent(std::span<const std::pair<double, double>> points, double q);

enum class ScanMode { dilation, localization, invariants };

const char* to_string(ScanMode mode) noexcept;

/// Where the scanned function comes from.
struct FunctionSource {
  enum class Kind { builtin, random, given };
  Kind kind = Kind::builtin;
  std::string builtin = "phi_D";
  RandomFunctionSpec random{};
  std::optional<StepFunction> given;
  std::string label;  ///< echoed in reports
};

/// Resolves a builtin name: `phi_D` or `phi_P<k>`.
StepFunction builtin_function(const FieldPtr& field, const std::string& name);

StepFunction resolve_source(const FieldPtr& field, const FunctionSource& source);

struct ScanConfig {
  std::uint32_t p = 2;
  std::uint32_t c = 1;
  std::vector<BesovParams> besov{{1.0, 2.0, 2.0}};
  int kmax = 8;
  int jmax = 6;
  int i_level = 0;
  /// Largest number of localization centers; the scan uses 1, q, q^2, ... up to it.
  std::size_t max_centers = 8;
  bool random_coefficients = false;
  std::uint64_t seed = 1;
  /// Number of random functions for the invariant suite.
  int invariant_count = 20;
  FunctionSource source{};
  ScanMode mode = ScanMode::dilation;
};

/// Growth allowed for log_q of a bounded ratio per unit step.
inline constexpr double kTrendTolerance = 0.01;

struct FitSummary {
  std::string series;  ///< which records the fit covers
  ExponentFit ratio_fit;
  ExponentFit normalized_fit;
  double fitted_constant = 0.0;  ///< sup of ratio / bound shape
  bool bounded = true;
};

struct InvariantResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
};

struct ScanReport {
  ScanConfig config;
  std::vector<std::pair<BesovParams, DilationRecord>> dilation;
  std::vector<std::pair<BesovParams, LocalizationRecord>> localization;
  std::vector<InvariantResult> invariants;
  std::vector<FitSummary> fits;
  std::vector<std::string> warnings;
  double wall_seconds = 0.0;
  bool passed = true;

  /// CSV body, fixed columns per mode; numbers printed with %.17g.
  std::string csv() const;
  /// Records, fits and metadata as JSON.
  std::string json() const;
  /// Static SVG plot of ratio and bound shape against k (or j).
  std::string svg() const;
};

ScanReport run_scan(const ScanConfig& config);

/// Fits of a dilation series: log_q ratio against k and log_q(ratio / bound)
/// against k. Bounded means the second slope is at most kTrendTolerance.
FitSummary summarize_dilation(std::span<const DilationRecord> records, double q, std::string series);

/// Runs the property suite on `count` random functions from `seed`.
std::vector<InvariantResult> run_invariant_suite(const FieldPtr& field, std::uint64_t seed, int count);

/// %.17g.
std::string format_double(double x);

}  // namespace lf
