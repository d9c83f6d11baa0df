#include "localfield/besov.hpp"

#include <algorithm>
#include <cmath>

#include "localfield/errors.hpp"

namespace lf {

void BesovParams::validate() const {
  if (!(r > 0.0)) throw InvalidArgument("Besov parameter r must be positive");
  if (!(t > 0.0)) throw InvalidArgument("Besov parameter t must be positive");
  if (!std::isfinite(s)) throw InvalidArgument("Besov smoothness s must be finite");
}

double sigma_r(double r) {
  if (!(r > 0.0)) throw InvalidArgument("sigma_r needs r > 0");
  return std::max(1.0 / r - 1.0, 0.0);
}

StepFunction phi_j(const FieldPtr& field, int j) {
  if (j < 0) throw InvalidArgument("phi_j needs j >= 0");
  if (j == 0) return StepFunction(field, Side::frequency, 0, 0, {Complex{1.0}});
  // Cosets of Gamma^{j-1} = P^{1-j} inside Gamma^j = P^{-j}; all but the zero coset.
  StepFunction out(field, Side::frequency, 1 - j, j);
  auto v = out.values();
  std::fill(v.begin() + 1, v.end(), Complex{1.0});
  return out;
}

namespace {

// Block j from the spectrum of f refined to support M0 >= 0; `m` is f's resolution.
namespace {

// Inverse transform of a band, with transform rounding residue flushed to 0.
// The L1 mass of the band bounds the block pointwise, so anything below
// 1e-12 of it is noise. Left in place it dominates ||.||_r for small r.
StepFunction synthesize_band(StepFunction band) {
  double mass = 0.0;
  for (const Complex& v : band.values()) mass += std::abs(v);
  mass *= std::pow(static_cast<double>(band.field()->q()), -band.resolution());
  StepFunction block = inverse_fourier(band);
  const double floor = 1e-12 * mass;
  std::vector<Complex> vals(block.values().begin(), block.values().end());
  for (Complex& v : vals) {
    if (std::abs(v) < floor) v = Complex{};
  }
  return StepFunction(block.field(), block.side(), block.resolution(), block.support(), std::move(vals));
}

}  // namespace

StepFunction block_from_spectrum(const StepFunction& spectrum, int m, int j) {
  const FieldPtr& field = spectrum.field();
  const int M0 = spectrum.resolution();
  const std::size_t q = field->q();
  const auto sv = spectrum.values();
  if (j == 0) {
    const int support = std::min(m, 0);
    const std::size_t count = checked_pow(q, M0 + support, field->enumeration_limit());
    std::vector<Complex> vals(sv.begin(), sv.begin() + static_cast<std::ptrdiff_t>(count));
    return synthesize_band(StepFunction(field, Side::frequency, M0, support, std::move(vals)));
  }
  const std::size_t count = checked_pow(q, M0 + j, field->enumeration_limit());
  const std::size_t inner = count / q;
  std::vector<Complex> vals(count);
  std::copy(sv.begin() + static_cast<std::ptrdiff_t>(inner), sv.begin() + static_cast<std::ptrdiff_t>(count),
            vals.begin() + static_cast<std::ptrdiff_t>(inner));
  return synthesize_band(StepFunction(field, Side::frequency, M0, j, std::move(vals)));
}

StepFunction spectrum_for_blocks(const StepFunction& f) {
  if (f.side() != Side::spatial) throw DomainMismatch("Littlewood-Paley blocks need a spatial function");
  return fourier(f.refined(f.resolution(), std::max(f.support(), 0)));
}

}  // namespace

StepFunction delta_j(const StepFunction& f, int j) {
  if (j < 0) throw InvalidArgument("delta_j needs j >= 0");
  if (f.side() != Side::spatial) throw DomainMismatch("delta_j expects a spatial function");
  if (j > std::max(f.resolution(), 0)) return StepFunction(f.field(), Side::spatial, f.resolution(), f.support());
  return block_from_spectrum(spectrum_for_blocks(f), f.resolution(), j);
}

LPDecomposition lp_decompose(const StepFunction& f) {
  const StepFunction spectrum = spectrum_for_blocks(f);
  LPDecomposition lp;
  lp.n = std::max(f.resolution(), 0);
  lp.blocks.reserve(static_cast<std::size_t>(lp.n) + 1);
  for (int j = 0; j <= lp.n; ++j) lp.blocks.push_back(block_from_spectrum(spectrum, f.resolution(), j));
  return lp;
}

StepFunction reconstruct(const LPDecomposition& lp) {
  if (lp.blocks.empty()) throw InvalidArgument("empty decomposition");
  StepFunction sum = lp.blocks.front();
  for (std::size_t j = 1; j < lp.blocks.size(); ++j) sum = add(sum, lp.blocks[j]);
  return sum;
}

std::vector<double> block_norms(const LPDecomposition& lp, double r) {
  std::vector<double> out;
  out.reserve(lp.blocks.size());
  for (const auto& b : lp.blocks) out.push_back(lr_norm(b, r));
  return out;
}

double besov_from_block_norms(std::span<const double> norms, double q, double s, double t) {
  if (!(t > 0.0)) throw InvalidArgument("Besov parameter t must be positive");
  double acc = 0.0;
  for (std::size_t j = 0; j < norms.size(); ++j) {
    const double term = std::pow(q, s * static_cast<double>(j)) * norms[j];
    if (std::isinf(t)) {
      acc = std::max(acc, term);
    } else if (term != 0.0) {
      acc += std::pow(term, t);
    }
  }
  return std::isinf(t) ? acc : std::pow(acc, 1.0 / t);
}

double besov_norm(const StepFunction& f, const BesovParams& bp) {
  bp.validate();
  const auto norms = block_norms(lp_decompose(f), bp.r);
  return besov_from_block_norms(norms, f.field()->q(), bp.s, bp.t);
}

StepFunction ptype_derivative(const StepFunction& f, double alpha) {
  return apply_multiplier(bracket_power(f.field()->q(), alpha), f);
}

double hs2_norm(const StepFunction& symbol, double sigma) {
  const StepFunction g = symbol.with_side(Side::spatial);
  StepFunction spectrum = fourier(g.refined(g.resolution(), std::max(g.support(), 0)));
  const StepFunction weight = sample_radial(symbol.field(), bracket_power(symbol.field()->q(), sigma),
                                            spectrum.resolution(), spectrum.support());
  auto sv = spectrum.values();
  const auto wv = weight.values();
  for (std::size_t i = 0; i < sv.size(); ++i) sv[i] *= wv[i];
  return lr_norm(spectrum, 2.0);
}

double hs2_norm_unitary(const StepFunction& symbol, double sigma) {
  return lr_norm(ptype_derivative(symbol.with_side(Side::spatial), sigma), 2.0);
}

AGammaCheck check_a_gamma_condition(const FieldPtr& field, int j, double s) {
  if (j < 0) throw InvalidArgument("check_a_gamma_condition needs j >= 0");
  if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("check_a_gamma_condition needs s in (0, inf)");
  const StepFunction kernel = inverse_fourier(phi_j(field, j));
  const StepFunction derived = ptype_derivative(kernel, s);
  AGammaCheck out;
  out.j = j;
  out.s = s;
  out.sup_value = lr_norm(derived, kInfinity);
  out.bound = std::pow(static_cast<double>(field->q()), -j + j * s);
  out.bound_ratio = out.sup_value / out.bound;
  return out;
}

}  // namespace lf
