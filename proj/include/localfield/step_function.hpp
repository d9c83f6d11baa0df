#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "localfield/field.hpp"

namespace lf {

using Complex = std::complex<double>;

/// Whether a function lives on K or on its character group (identified with K
/// through lambda <-> chi_lambda).
enum class Side { spatial, frequency };

const char* to_string(Side side) noexcept;

/// The ball center + P^level.
struct BallSpec {
  FieldElement center;
  int level = 0;
};

/// q^{-level}, with |D| = 1.
double haar_measure(const BallSpec& ball);

/// A test function: complex values on the cosets of P^resolution inside
/// P^{-support}, zero outside. Values are stored densely in CosetGrid index
/// order.
///
/// Levels always refer to balls of K; on the frequency side the ball
/// P^{-k} is the annihilator Gamma^k.
class StepFunction {
 public:
  /// The zero function on the given grid.
  StepFunction(FieldPtr field, Side side, int resolution, int support);
  StepFunction(FieldPtr field, Side side, int resolution, int support, std::vector<Complex> values);

  /// Indicator of center + P^level on the smallest grid holding it.
  static StepFunction ball(FieldPtr field, Side side, const FieldElement& center, int level);

  const FieldPtr& field() const noexcept { return field_; }
  Side side() const noexcept { return side_; }
  int resolution() const noexcept { return grid_.resolution(); }
  int support() const noexcept { return grid_.support(); }
  const CosetGrid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const Complex> values() const noexcept { return values_; }
  std::span<Complex> values() noexcept { return values_; }
  Complex operator[](std::size_t index) const noexcept { return values_[index]; }

  /// Adds `coef` times the indicator of center + P^level. The ball must fit the
  /// grid: level <= resolution and center + P^level inside P^{-support}.
  void add_ball(const FieldElement& center, int level, Complex coef);

  /// Same function on a finer/larger grid (resolution' >= resolution, support' >= support).
  StepFunction refined(int resolution, int support) const;
  /// Smallest grid reproducing every value to within `tolerance` (absolute).
  StepFunction compacted(double tolerance = 0.0) const;
  /// Relabels the side without touching the values.
  StepFunction with_side(Side side) const;

  /// Nonzero cosets and their values: the sparse view of the function.
  std::vector<std::pair<CosetId, Complex>> nonzero_terms() const;
  bool is_zero() const noexcept;

 private:
  FieldPtr field_;
  Side side_;
  CosetGrid grid_;
  std::vector<Complex> values_;
};

/// f(x): the value on the coset of P^resolution containing x, 0 outside P^{-support}.
Complex step_eval(const StepFunction& f, const FieldElement& x);

/// Pointwise operations. Binary operands must share field and side; both are
/// refined to the common grid (max resolution, max support) first.
StepFunction add(const StepFunction& f, const StepFunction& g);
StepFunction subtract(const StepFunction& f, const StepFunction& g);
StepFunction scale(const StepFunction& f, Complex factor);
StepFunction multiply(const StepFunction& f, const StepFunction& g);
StepFunction conj(const StepFunction& f);

/// x -> f(x - z). Resolution is kept; the support grows to cover the shifted ball.
StepFunction step_translate(const StepFunction& f, const FieldElement& z);

/// (sum |v|^r q^{-resolution})^{1/r} for r < inf, max |v| for r = inf.
double lr_norm(const StepFunction& f, double r);

/// max |f - g| over the common grid.
double max_abs_difference(const StepFunction& f, const StepFunction& g);

/// Brings f and g to the common grid; shared by the binary operations.
std::pair<StepFunction, StepFunction> align(const StepFunction& f, const StepFunction& g);

}  // namespace lf
