#include "localfield/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "localfield/errors.hpp"

namespace lf {

const char* to_string(Side side) noexcept { return side == Side::spatial ? "spatial" : "frequency"; }

double haar_measure(const BallSpec& ball) {
  return std::pow(static_cast<double>(ball.center.field()->q()), -ball.level);
}

StepFunction::StepFunction(FieldPtr field, Side side, int resolution, int support)
    : field_(std::move(field)), side_(side), grid_(*field_, resolution, support), values_(grid_.size()) {}

StepFunction::StepFunction(FieldPtr field, Side side, int resolution, int support, std::vector<Complex> values)
    : field_(std::move(field)), side_(side), grid_(*field_, resolution, support), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("expected " + std::to_string(grid_.size()) + " values, got " +
                          std::to_string(values_.size()));
  }
}

StepFunction StepFunction::ball(FieldPtr field, Side side, const FieldElement& center, int level) {
  const FieldElement rep = center.truncated_below(level);
  const int support = rep.is_zero() ? -level : std::max(-level, -rep.lo());
  StepFunction f(std::move(field), side, level, support);
  f.add_ball(rep, level, 1.0);
  return f;
}

void StepFunction::add_ball(const FieldElement& center, int level, Complex coef) {
  if (level > resolution()) {
    throw InvalidArgument("ball level " + std::to_string(level) + " is finer than the grid resolution " +
                          std::to_string(resolution()));
  }
  if (level < -support()) {
    throw InvalidArgument("ball level " + std::to_string(level) + " exceeds the grid support P^" +
                          std::to_string(-support()));
  }
  const FieldElement rep = center.truncated_below(level);
  const auto base = grid_.index_of(rep);
  if (!base) throw InvalidArgument("ball center lies outside the grid support");
  const std::size_t width = checked_pow(grid_.q(), resolution() - level, field_->enumeration_limit());
  for (std::size_t i = 0; i < width; ++i) values_[*base + i] += coef;
}

StepFunction StepFunction::refined(int resolution, int support) const {
  if (resolution < this->resolution() || support < this->support()) {
    throw InvalidArgument("refinement cannot coarsen the grid");
  }
  if (resolution == this->resolution() && support == this->support()) return *this;
  StepFunction out(field_, side_, resolution, support);
  const std::size_t width = checked_pow(grid_.q(), resolution - this->resolution(), field_->enumeration_limit());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == Complex{}) continue;
    std::fill_n(out.values_.begin() + static_cast<std::ptrdiff_t>(i * width), width, values_[i]);
  }
  return out;
}

StepFunction StepFunction::compacted(double tolerance) const {
  std::vector<Complex> vals = values_;
  int m = resolution();
  int M = support();
  const std::size_t q = grid_.q();
  bool changed = true;
  while (changed && m + M > 0) {
    changed = false;
    const std::size_t inner = vals.size() / q;
    if (std::all_of(vals.begin() + static_cast<std::ptrdiff_t>(inner), vals.end(),
                    [&](Complex v) { return std::abs(v) <= tolerance; })) {
      vals.resize(inner);
      --M;
      changed = true;
      continue;
    }
    bool constant = true;
    for (std::size_t g = 0; g < inner && constant; ++g) {
      for (std::size_t k = 1; k < q; ++k) {
        if (std::abs(vals[g * q + k] - vals[g * q]) > tolerance) {
          constant = false;
          break;
        }
      }
    }
    if (constant) {
      std::vector<Complex> coarse(inner);
      for (std::size_t g = 0; g < inner; ++g) coarse[g] = vals[g * q];
      vals = std::move(coarse);
      --m;
      changed = true;
    }
  }
  return StepFunction(field_, side_, m, M, std::move(vals));
}

StepFunction StepFunction::with_side(Side side) const {
  StepFunction out = *this;
  out.side_ = side;
  return out;
}

std::vector<std::pair<CosetId, Complex>> StepFunction::nonzero_terms() const {
  std::vector<std::pair<CosetId, Complex>> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != Complex{}) out.emplace_back(CosetId{resolution(), grid_.rep(field_, i)}, values_[i]);
  }
  return out;
}

bool StepFunction::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Complex v) { return v == Complex{}; });
}

Complex step_eval(const StepFunction& f, const FieldElement& x) {
  if (!f.field()->same_field(*x.field())) throw DomainMismatch("point belongs to a different field");
  const auto index = f.grid().index_of(x);
  return index ? f[*index] : Complex{};
}

std::pair<StepFunction, StepFunction> align(const StepFunction& f, const StepFunction& g) {
  if (!f.field()->same_field(*g.field())) throw DomainMismatch("functions over different fields");
  if (f.side() != g.side()) {
    throw DomainMismatch(std::string("cannot combine a ") + to_string(f.side()) + " and a " + to_string(g.side()) +
                         " function");
  }
  const int m = std::max(f.resolution(), g.resolution());
  const int M = std::max(f.support(), g.support());
  return {f.refined(m, M), g.refined(m, M)};
}

namespace {

template <class Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
  auto [a, b] = align(f, g);
  auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) av[i] = op(av[i], bv[i]);
  return std::move(a);
}

}  // namespace

StepFunction add(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](Complex x, Complex y) { return x + y; });
}

StepFunction subtract(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](Complex x, Complex y) { return x - y; });
}

StepFunction multiply(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](Complex x, Complex y) { return x * y; });
}

StepFunction scale(const StepFunction& f, Complex factor) {
  StepFunction out = f;
  for (auto& v : out.values()) v *= factor;
  return out;
}

StepFunction conj(const StepFunction& f) {
  StepFunction out = f;
  for (auto& v : out.values()) v = std::conj(v);
  return out;
}

StepFunction step_translate(const StepFunction& f, const FieldElement& z) {
  if (!f.field()->same_field(*z.field())) throw DomainMismatch("shift belongs to a different field");
  const FieldElement shift = z.truncated_below(f.resolution());
  if (shift.is_zero()) return f;
  const StepFunction g = f.refined(f.resolution(), std::max(f.support(), -shift.lo()));
  const CosetGrid& grid = g.grid();
  const auto& gf = f.field()->gf();
  const auto n = static_cast<std::size_t>(grid.positions());
  std::vector<Digit> shift_digits(n);
  for (std::size_t pos = 0; pos < n; ++pos) shift_digits[pos] = shift.digit(grid.exponent_at(static_cast<int>(pos)));

  StepFunction out(g.field(), g.side(), g.resolution(), g.support());
  auto ov = out.values();
  const auto gv = g.values();
  std::vector<Digit> digits(n);
  for (std::size_t i = 0; i < gv.size(); ++i) {
    if (gv[i] == Complex{}) continue;
    // The value at x - z lands on x = (x - z) + z.
    grid.decode(i, digits);
    for (std::size_t pos = 0; pos < n; ++pos) digits[pos] = gf.add(digits[pos], shift_digits[pos]);
    ov[grid.encode(digits)] = gv[i];
  }
  return out;
}

double lr_norm(const StepFunction& f, double r) {
  if (!(r > 0.0)) throw InvalidArgument("L^r exponent must be positive");
  const auto v = f.values();
  if (std::isinf(r)) {
    double m = 0.0;
    for (Complex x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double sum = 0.0;
  if (r == 2.0) {
    for (Complex x : v) sum += std::norm(x);
  } else if (r == 1.0) {
    for (Complex x : v) sum += std::abs(x);
  } else {
    for (Complex x : v) {
      if (x != Complex{}) sum += std::pow(std::abs(x), r);
    }
  }
  const double cell = std::pow(static_cast<double>(f.field()->q()), -f.resolution());
  return std::pow(sum * cell, 1.0 / r);
}

double max_abs_difference(const StepFunction& f, const StepFunction& g) {
  auto [a, b] = align(f, g);
  double m = 0.0;
  const auto av = a.values();
  const auto bv = b.values();
  for (std::size_t i = 0; i < av.size(); ++i) m = std::max(m, std::abs(av[i] - bv[i]));
  return m;
}

}  // namespace lf
