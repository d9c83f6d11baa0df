#include "localfield/operators.hpp"

#include <algorithm>
#include <cmath>

#include "localfield/errors.hpp"

namespace lf {

StepFunction dilate(const StepFunction& f, int k) {
  std::vector<Complex> vals(f.values().begin(), f.values().end());
  return StepFunction(f.field(), f.side(), f.resolution() + k, f.support() - k, std::move(vals));
}

double dilation_bound_shape(int k, const BesovParams& bp, double q) {
  if (k == 0) return 1.0;
  const double kt = std::isinf(bp.t) ? 1.0 : std::pow(static_cast<double>(k), 1.0 / bp.t);
  const double inv_r = std::isinf(bp.r) ? 0.0 : 1.0 / bp.r;
  return kt * std::pow(q, k * (bp.s - inv_r));
}

DilationRecord make_dilation_record(int k, const BesovParams& bp, double q, double norm_in, double norm_out) {
  DilationRecord rec;
  rec.k = k;
  rec.norm_in = norm_in;
  rec.norm_out = norm_out;
  rec.ratio = norm_out / norm_in;
  rec.bound_shape = dilation_bound_shape(k, bp, q);
  rec.ratio_over_bound = rec.ratio / rec.bound_shape;
  rec.hypothesis_ok = bp.s > sigma_r(bp.r);
  return rec;
}

DilationRecord dilation_bound_check(const StepFunction& f, const BesovParams& bp, int k) {
  bp.validate();
  if (f.is_zero()) throw InvalidArgument("dilation check needs a nonzero function");
  return make_dilation_record(k, bp, f.field()->q(), besov_norm(f, bp), besov_norm(dilate(f, k), bp));
}

std::vector<FieldElement> localization_centers(const FieldPtr& field, int i, std::size_t count) {
  if (count == 0) return {};
  // Smallest support M with q^{M+i} >= count; the first indices do not depend on M.
  int M = -i;
  std::size_t size = 1;
  while (size < count) {
    if (size > field->enumeration_limit() / field->q()) throw LimitExceeded("too many localization centers");
    size *= field->q();
    ++M;
  }
  const CosetGrid grid(*field, i, M);
  std::vector<FieldElement> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(grid.rep(field, k));
  return out;
}

bool supported_in_ball(const StepFunction& f, int i) {
  if (i <= -f.support()) return true;
  if (i > f.resolution()) return f.is_zero();
  const std::size_t inside = checked_pow(f.field()->q(), f.resolution() - i, f.field()->enumeration_limit());
  const auto v = f.values();
  return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(inside), v.end(), [](Complex x) { return x == Complex{}; });
}

StepFunction localize(const StepFunction& f, int i, int j, std::span<const FieldElement> centers,
                      std::span<const Complex> coeffs) {
  if (f.side() != Side::spatial) throw DomainMismatch("localize expects a spatial function");
  if (j < 1) throw InvalidArgument("localize needs j >= 1");
  if (centers.size() != coeffs.size()) throw InvalidArgument("one coefficient per center is required");
  if (centers.empty()) throw InvalidArgument("localize needs at least one center");
  if (!supported_in_ball(f, i)) throw InvalidArgument("f is not supported in P^" + std::to_string(i));

  std::vector<FieldElement> reps;
  reps.reserve(centers.size());
  for (const auto& z : centers) {
    const FieldElement rep = z.truncated_below(i);
    if (std::find(reps.begin(), reps.end(), rep) != reps.end()) {
      throw InvalidArgument("centers must lie in distinct cosets of P^" + std::to_string(i));
    }
    reps.push_back(rep);
  }

  const StepFunction d = dilate(f, j);
  std::vector<StepFunction> pieces;
  pieces.reserve(centers.size());
  int support = d.support();
  for (const auto& z : centers) {
    pieces.push_back(step_translate(d, z));
    support = std::max(support, pieces.back().support());
  }

  StepFunction out(f.field(), Side::spatial, d.resolution(), support);
  std::vector<int> owner(out.size(), -1);
  auto ov = out.values();
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const StepFunction piece = pieces[k].refined(d.resolution(), support);
    const auto pv = piece.values();
    for (std::size_t idx = 0; idx < pv.size(); ++idx) {
      if (pv[idx] == Complex{}) continue;
      if (owner[idx] >= 0) {
        throw InvalidArgument("localized pieces " + std::to_string(owner[idx]) + " and " + std::to_string(k) +
                              " overlap");
      }
      owner[idx] = static_cast<int>(k);
      ov[idx] += coeffs[k] * pv[idx];
    }
  }
  return out;
}

LocalizationRecord make_localization_record(int i, int j, const BesovParams& bp, double q,
                                            std::span<const Complex> coeffs, double lhs, double norm_f) {
  LocalizationRecord rec;
  rec.i = i;
  rec.j = j;
  rec.centers = coeffs.size();
  double acc = 0.0;
  for (Complex c : coeffs) acc = std::isinf(bp.r) ? std::max(acc, std::abs(c)) : acc + std::pow(std::abs(c), bp.r);
  rec.coef_norm = std::isinf(bp.r) ? acc : std::pow(acc, 1.0 / bp.r);
  rec.lhs = lhs;
  rec.rhs_shape = rec.coef_norm * dilation_bound_shape(j, bp, q) * norm_f;
  rec.ratio = rec.lhs / rec.rhs_shape;
  rec.hypothesis_ok = bp.s > sigma_r(bp.r) && bp.t <= bp.r;
  return rec;
}

LocalizationRecord localization_bound_check(const StepFunction& f, const BesovParams& bp, int i, int j,
                                            std::span<const FieldElement> centers, std::span<const Complex> coeffs) {
  bp.validate();
  if (f.is_zero()) throw InvalidArgument("localization check needs a nonzero function");
  const double lhs = besov_norm(localize(f, i, j, centers, coeffs), bp);
  return make_localization_record(i, j, bp, f.field()->q(), coeffs, lhs, besov_norm(f, bp));
}

DilationRecord translated_dilation_check(const StepFunction& f, const BesovParams& bp, int j, const FieldElement& z) {
  bp.validate();
  if (f.is_zero()) throw InvalidArgument("dilation check needs a nonzero function");
  const double norm_in = besov_norm(step_translate(f, z), bp);
  const double norm_out = besov_norm(step_translate(dilate(f, j), z), bp);
  return make_dilation_record(j, bp, f.field()->q(), norm_in, norm_out);
}

bool band_limited(const StepFunction& u, int j, double tolerance) {
  if (j < 0) throw InvalidArgument("band index must be >= 0");
  if (u.side() != Side::spatial) throw DomainMismatch("band check expects a spatial function");
  const StepFunction spectrum = fourier(u.refined(u.resolution(), std::max(u.support(), 0)));
  const auto v = spectrum.values();
  double peak = 0.0;
  for (Complex x : v) peak = std::max(peak, std::abs(x));
  if (peak == 0.0) return true;
  // Indices below q^{R+l} cover Gamma^l on a frequency grid of resolution R >= 0.
  const std::uint64_t q = u.field()->q();
  const std::uint64_t limit = u.field()->enumeration_limit();
  const int R = spectrum.resolution();
  const int S = spectrum.support();
  const std::size_t hi = j >= S ? v.size() : checked_pow(q, R + j, limit);
  const std::size_t lo = j == 0 ? 0 : checked_pow(q, R + std::min(j - 1, S), limit);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if ((idx < lo || idx >= hi) && std::abs(v[idx]) > tolerance * peak) return false;
  }
  return true;
}

Prop42Record prop42_check(std::span<const StepFunction> blocks, const BesovParams& bp) {
  bp.validate();
  Prop42Record rec;
  if (blocks.empty()) return rec;
  std::vector<double> norms;
  norms.reserve(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (!band_limited(blocks[j], static_cast<int>(j))) {
      throw InvalidArgument("block " + std::to_string(j) + " is not band-limited to its annulus");
    }
    norms.push_back(lr_norm(blocks[j], bp.r));
  }
  StepFunction sum = blocks.front();
  for (std::size_t j = 1; j < blocks.size(); ++j) sum = add(sum, blocks[j]);
  rec.lhs = besov_norm(sum, bp);
  rec.rhs = besov_from_block_norms(norms, blocks.front().field()->q(), bp.s, bp.t);
  rec.ratio = rec.rhs == 0.0 ? (rec.lhs == 0.0 ? 1.0 : kInfinity) : rec.lhs / rec.rhs;
  return rec;
}

}  // namespace lf
