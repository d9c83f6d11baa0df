#include "localfield/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "localfield/errors.hpp"

namespace lf {
namespace {

std::vector<Complex> pairing_kernel(const FieldParams& field, bool conjugate) {
  const std::uint32_t q = field.q();
  std::vector<Complex> kernel(std::size_t{q} * q);
  for (Digit a = 0; a < q; ++a) {
    for (Digit b = 0; b < q; ++b) {
      const Complex w = field.pairing(a, b);
      kernel[a * q + b] = conjugate ? std::conj(w) : w;
    }
  }
  return kernel;
}

// Applies the q-point transform along every digit position, then moves the
// digit of position `pos` to position n-1-pos: the spatial digit at t^b pairs
// with the frequency digit at t^{-1-b}.
std::vector<Complex> transform_fast(const StepFunction& in, const CosetGrid& out_grid, bool conjugate,
                                    double scale) {
  const FieldParams& field = *in.field();
  const std::size_t q = field.q();
  const std::size_t n = static_cast<std::size_t>(in.grid().positions());
  const std::size_t size = in.size();
  const auto kernel = pairing_kernel(field, conjugate);

  std::vector<Complex> a(in.values().begin(), in.values().end());
  std::vector<Complex> line(q);
  std::size_t stride = 1;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t block = stride * q;
    for (std::size_t base = 0; base < size; base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        Complex* col = a.data() + base + off;
        bool empty = true;
        for (std::size_t b = 0; b < q; ++b) {
          line[b] = col[b * stride];
          empty = empty && line[b] == Complex{};
        }
        if (empty) continue;
        for (std::size_t k = 0; k < q; ++k) {
          const Complex* row = kernel.data() + k * q;
          Complex sum{};
          for (std::size_t b = 0; b < q; ++b) sum += row[b] * line[b];
          col[k * stride] = sum;
        }
      }
    }
    stride = block;
  }

  std::vector<Complex> out(size);
  std::vector<Digit> digits(n);
  std::vector<Digit> reversed(n);
  for (std::size_t i = 0; i < size; ++i) {
    if (a[i] == Complex{}) continue;
    in.grid().decode(i, digits);
    std::reverse_copy(digits.begin(), digits.end(), reversed.begin());
    out[out_grid.encode(reversed)] = a[i] * scale;
  }
  return out;
}

std::vector<Complex> transform_naive(const StepFunction& in, const CosetGrid& out_grid, bool conjugate, double scale,
                                     std::span<const std::size_t> outputs) {
  const FieldPtr& field = in.field();
  std::vector<FieldElement> in_reps;
  std::vector<Complex> in_vals;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == Complex{}) continue;
    in_reps.push_back(in.grid().rep(field, i));
    in_vals.push_back(in[i]);
  }
  std::vector<Complex> out(outputs.size());
  for (std::size_t o = 0; o < outputs.size(); ++o) {
    const FieldElement point = out_grid.rep(field, outputs[o]);
    // Neumaier summation per component; plain accumulation over q^8 cells
    // drifts well past the fast path.
    double re = 0.0, im = 0.0, re_c = 0.0, im_c = 0.0;
    auto accumulate = [](double& acc, double& comp, double x) {
      const double t = acc + x;
      comp += std::abs(acc) >= std::abs(x) ? (acc - t) + x : (x - t) + acc;
      acc = t;
    };
    for (std::size_t k = 0; k < in_reps.size(); ++k) {
      const Complex chi = character_eval(point, in_reps[k]);
      const Complex term = in_vals[k] * (conjugate ? std::conj(chi) : chi);
      accumulate(re, re_c, term.real());
      accumulate(im, im_c, term.imag());
    }
    out[o] = Complex{re + re_c, im + im_c} * scale;
  }
  return out;
}

StepFunction transform(const StepFunction& in, Side out_side, FourierMethod method) {
  const bool forward = out_side == Side::frequency;
  const double scale = std::pow(static_cast<double>(in.field()->q()), -in.resolution());
  const CosetGrid out_grid(*in.field(), in.support(), in.resolution());
  std::vector<Complex> values;
  if (method == FourierMethod::fast) {
    values = transform_fast(in, out_grid, forward, scale);
  } else {
    std::vector<std::size_t> all(out_grid.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    values = transform_naive(in, out_grid, forward, scale, all);
  }
  return StepFunction(in.field(), out_side, in.support(), in.resolution(), std::move(values));
}

}  // namespace

StepFunction fourier(const StepFunction& f, FourierMethod method) {
  if (f.side() != Side::spatial) throw DomainMismatch("fourier expects a spatial function");
  return transform(f, Side::frequency, method);
}

StepFunction inverse_fourier(const StepFunction& g, FourierMethod method) {
  if (g.side() != Side::frequency) throw DomainMismatch("inverse_fourier expects a frequency function");
  return transform(g, Side::spatial, method);
}

std::vector<Complex> transform_naive_at(const StepFunction& f, std::span<const std::size_t> outputs) {
  const CosetGrid out_grid(*f.field(), f.support(), f.resolution());
  for (std::size_t o : outputs) {
    if (o >= out_grid.size()) throw InvalidArgument("output index outside the transform grid");
  }
  const double scale = std::pow(static_cast<double>(f.field()->q()), -f.resolution());
  return transform_naive(f, out_grid, f.side() == Side::spatial, scale, outputs);
}

RadialSymbol bracket_power(double q, double alpha) {
  return RadialSymbol{[q, alpha](int e) { return Complex{std::pow(q, alpha * std::max(e, 0)), 0.0}; }, 0};
}

double bracket(const FieldElement& xi) { return std::max(1.0, xi.abs()); }

StepFunction sample_radial(const FieldPtr& field, const RadialSymbol& symbol, int resolution, int support) {
  if (resolution < -symbol.inner_level) {
    throw InvalidArgument("frequency grid too coarse for the radial symbol: resolution " +
                          std::to_string(resolution) + " < " + std::to_string(-symbol.inner_level));
  }
  StepFunction out(field, Side::frequency, resolution, support);
  auto v = out.values();
  const std::size_t q = field->q();
  const Complex inner = symbol.value(symbol.inner_level);
  v[0] = inner;
  std::size_t begin = 1;
  for (int pos = 0; pos < out.grid().positions(); ++pos) {
    const std::size_t end = begin * q;
    const int e = pos + 1 - resolution;
    const Complex value = e <= symbol.inner_level ? inner : symbol.value(e);
    std::fill(v.begin() + static_cast<std::ptrdiff_t>(begin), v.begin() + static_cast<std::ptrdiff_t>(end), value);
    begin = end;
  }
  return out;
}

StepFunction apply_multiplier(const StepFunction& symbol, const StepFunction& f) {
  if (symbol.side() != Side::frequency) throw DomainMismatch("multiplier symbol must live on the frequency side");
  if (f.side() != Side::spatial) throw DomainMismatch("multiplier acts on spatial functions");
  return inverse_fourier(multiply(fourier(f), symbol));
}

StepFunction apply_multiplier(const RadialSymbol& symbol, const StepFunction& f) {
  if (f.side() != Side::spatial) throw DomainMismatch("multiplier acts on spatial functions");
  const StepFunction g = f.refined(f.resolution(), std::max(f.support(), -symbol.inner_level));
  StepFunction spectrum = fourier(g);
  const StepFunction sampled = sample_radial(f.field(), symbol, spectrum.resolution(), spectrum.support());
  auto sv = spectrum.values();
  const auto mv = sampled.values();
  for (std::size_t i = 0; i < sv.size(); ++i) sv[i] *= mv[i];
  return inverse_fourier(spectrum);
}

}  // namespace lf
