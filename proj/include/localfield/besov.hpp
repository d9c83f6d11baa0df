#pragma once

#include <limits>
#include <span>
#include <vector>

#include "localfield/fourier.hpp"

namespace lf {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Smoothness s, integrability r in (0, inf], summation t in (0, inf].
struct BesovParams {
  double s = 0.0;
  double r = 2.0;
  double t = 2.0;

  /// Throws InvalidArgument unless r, t > 0.
  void validate() const;
};

/// max(1/r - 1, 0).
double sigma_r(double r);

/// phi_0 = indicator of Gamma^0, phi_j = indicator of Gamma^j \ Gamma^{j-1}.
StepFunction phi_j(const FieldPtr& field, int j);

/// Delta_j f = F^{-1}(phi_j F f).
StepFunction delta_j(const StepFunction& f, int j);

/// The blocks Delta_0 f, ..., Delta_n f. Block j lives on the grid
/// (resolution j, support max(M, 0)); block 0 of a function coarser than D
/// keeps the function's own resolution.
struct LPDecomposition {
  std::vector<StepFunction> blocks;
  int n = 0;
};

/// n = max(resolution, 0): supp F f lies in Gamma^resolution, so every later
/// block vanishes.
LPDecomposition lp_decompose(const StepFunction& f);

/// Sum of the blocks on a common grid.
StepFunction reconstruct(const LPDecomposition& lp);

std::vector<double> block_norms(const LPDecomposition& lp, double r);

/// (sum_j q^{sjt} norms[j]^t)^{1/t}, or sup_j q^{sj} norms[j] for t = inf.
double besov_from_block_norms(std::span<const double> norms, double q, double s, double t);

double besov_norm(const StepFunction& f, const BesovParams& bp);

/// ||<.>^sigma F(symbol)||_2, treating the symbol as a function on K.
double hs2_norm(const StepFunction& symbol, double sigma);
/// The same quantity through unitarity: ||F^{-1} <.>^sigma F(symbol)||_2.
double hs2_norm_unitary(const StepFunction& symbol, double sigma);

/// f^{<alpha>} = F^{-1}[<xi>^alpha F f]; negative alpha gives the p-type integral.
StepFunction ptype_derivative(const StepFunction& f, double alpha);

struct AGammaCheck {
  int j = 0;
  double s = 0.0;
  double sup_value = 0.0;  ///< sup_x |(phi_j^vee)^{<s>}(x)|
  double bound = 0.0;      ///< q^{-j + js}
  double bound_ratio = 0.0;
};

/// Measures the derivative bound on the inverse transforms of the canonical
/// family. Requires j >= 0 and s > 0.
AGammaCheck check_a_gamma_condition(const FieldPtr& field, int j, double s);

}  // namespace lf
