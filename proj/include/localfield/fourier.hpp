#pragma once

#include <functional>

#include "localfield/step_function.hpp"

namespace lf {

enum class FourierMethod {
  /// Radix-q butterflies, one q-point transform per digit position.
  fast,
  /// Direct character sums over coset representatives, O(N^2).
  naive,
};

/// F f(xi) = int f(x) conj(chi_xi(x)) dx.
///
/// A spatial function on the grid (resolution m, support M) maps to a
/// frequency function constant on cosets of Gamma^{-M} = P^M and supported in
/// Gamma^m = P^{-m}: the frequency grid has resolution M and support m.
StepFunction fourier(const StepFunction& f, FourierMethod method = FourierMethod::fast);

/// F^{-1} g(x) = int g(xi) chi_x(xi) dxi, with |Gamma^0| = 1.
StepFunction inverse_fourier(const StepFunction& g, FourierMethod method = FourierMethod::fast);

/// Direct character sums at selected output cosets of the transform of f
/// (forward for spatial f, inverse for frequency f). Index `k` of the result
/// belongs to output grid index `outputs[k]`.
std::vector<Complex> transform_naive_at(const StepFunction& f, std::span<const std::size_t> outputs);

/// A symbol depending on |xi| only. `value(e)` is the symbol on the sphere
/// |xi| = q^e for e > inner_level; on the ball |xi| <= q^{inner_level} the
/// symbol is constant and equal to `value(inner_level)`.
struct RadialSymbol {
  std::function<Complex(int)> value;
  int inner_level = 0;
};

/// <xi>^alpha with <xi> = max(1, |xi|).
RadialSymbol bracket_power(double q, double alpha);

/// <xi> = max(1, |xi|) for a frequency point.
double bracket(const FieldElement& xi);

/// Samples a radial symbol onto a frequency grid. The grid resolution must
/// be at least -inner_level so the zero coset lies inside the inner ball.
StepFunction sample_radial(const FieldPtr& field, const RadialSymbol& symbol, int resolution, int support);

/// F^{-1}[symbol * F f]; both operands are refined to a common frequency grid.
StepFunction apply_multiplier(const StepFunction& symbol, const StepFunction& f);
StepFunction apply_multiplier(const RadialSymbol& symbol, const StepFunction& f);

}  // namespace lf
