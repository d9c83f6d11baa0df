#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "localfield/besov.hpp"

namespace lf {

/// (T_k f)(x) = f(t^{-k} x). Pure relabeling: the grid (m, M) becomes
/// (m + k, M - k) and the value array is unchanged. Negative k inverts.
/// Works on either side.
StepFunction dilate(const StepFunction& f, int k);

struct DilationRecord {
  int k = 0;
  double norm_in = 0.0;
  double norm_out = 0.0;
  double ratio = 0.0;
  double bound_shape = 0.0;  ///< k^{1/t} q^{k(s - 1/r)}, and 1 at k = 0
  double ratio_over_bound = 0.0;
  bool hypothesis_ok = true;  ///< s > sigma_r
};

double dilation_bound_shape(int k, const BesovParams& bp, double q);

/// Assembles a record from already computed norms.
DilationRecord make_dilation_record(int k, const BesovParams& bp, double q, double norm_in, double norm_out);

/// Throws InvalidArgument for the zero function.
DilationRecord dilation_bound_check(const StepFunction& f, const BesovParams& bp, int k);

/// The first `count` canonical representatives of P^i-cosets in grid order;
/// the first one is 0.
std::vector<FieldElement> localization_centers(const FieldPtr& field, int i, std::size_t count);

/// True when f vanishes outside P^i.
bool supported_in_ball(const StepFunction& f, int i);

/// sum_k coeffs[k] f(t^{-j}(x - centers[k])).
///
/// Requires supp f in P^i, j >= 1, centers in distinct P^i-cosets and one
/// coefficient per center. The summands are checked for pairwise disjoint
/// supports; a violation throws InvalidArgument.
StepFunction localize(const StepFunction& f, int i, int j, std::span<const FieldElement> centers,
                      std::span<const Complex> coeffs);

struct LocalizationRecord {
  int i = 0;
  int j = 0;
  std::size_t centers = 0;
  double coef_norm = 0.0;  ///< (sum |c_k|^r)^{1/r}
  double lhs = 0.0;        ///< Besov norm of the localized sum
  double rhs_shape = 0.0;  ///< coef_norm j^{1/t} q^{j(s-1/r)} ||f||
  double ratio = 0.0;
  bool hypothesis_ok = true;  ///< s > sigma_r and t <= r
};

/// Assembles a record from the Besov norms of the localized sum and of f.
LocalizationRecord make_localization_record(int i, int j, const BesovParams& bp, double q,
                                            std::span<const Complex> coeffs, double lhs, double norm_f);

LocalizationRecord localization_bound_check(const StepFunction& f, const BesovParams& bp, int i, int j,
                                            std::span<const FieldElement> centers, std::span<const Complex> coeffs);

/// Besov norm of T_j f translated by z against j^{1/t} q^{j(s-1/r)} times the
/// norm of f translated by z.
DilationRecord translated_dilation_check(const StepFunction& f, const BesovParams& bp, int j, const FieldElement& z);

struct Prop42Record {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 1.0;
};

/// True when F u vanishes (up to `tolerance` relative to its max) outside the
/// band of index j: Gamma^0 for j = 0, Gamma^j \ Gamma^{j-1} otherwise.
bool band_limited(const StepFunction& u, int j, double tolerance = 1e-12);

/// lhs = ||sum_j u_j||, rhs = (sum_j q^{sjt} ||u_j||_r^t)^{1/t}. Each u_j must
/// be band-limited to band j; a violation throws InvalidArgument.
Prop42Record prop42_check(std::span<const StepFunction> blocks, const BesovParams& bp);

}  // namespace lf
