#include "localfield/galois_field.hpp"

#include <string>

#include "localfield/errors.hpp"

namespace lf {
namespace {

using Poly = std::vector<Digit>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over GF(p); b must have a nonzero leading coefficient.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  // Leading coefficient inverse by Fermat.
  std::uint64_t lead_inv = 1;
  for (std::uint32_t e = 0; e < p - 2; ++e) lead_inv = lead_inv * b.back() % p;
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t factor = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<Digit>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t degree) {
  Poly out(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    out[i] = static_cast<Digit>(index % p);
    index /= p;
  }
  out[degree] = 1;
  return out;
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const Digit> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  for (Digit a : f) {
    if (a >= p) return false;
  }
  const auto degree = static_cast<std::uint32_t>(f.size() - 1);
  if (degree == 1) return true;
  for (std::uint32_t d = 1; d <= degree / 2; ++d) {
    const std::uint64_t count = checked_power(p, d, std::uint64_t{1} << 40);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, poly_from_index(idx, p, d), p).empty()) return false;
    }
  }
  return true;
}

std::vector<Digit> smallest_irreducible(std::uint32_t p, std::uint32_t c) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (c == 0) throw InvalidArgument("extension degree must be at least 1");
  const std::uint64_t count = checked_power(p, c, std::uint64_t{1} << 40);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly candidate = poly_from_index(idx, p, c);
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable for prime p
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t c, std::optional<std::vector<Digit>> irreducible,
                         std::uint64_t table_limit)
    : p_(p), c_(c) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (c == 0) throw InvalidArgument("extension degree must be at least 1");
  const std::uint64_t q = checked_power(p, c, table_limit);
  if (q > table_limit) {
    throw LimitExceeded("q = " + std::to_string(p) + "^" + std::to_string(c) + " exceeds the table limit " +
                        std::to_string(table_limit));
  }
  q_ = static_cast<std::uint32_t>(q);

  if (irreducible) {
    Poly f = *irreducible;
    if (f.size() != c + 1 || f.back() != 1) {
      throw InvalidArgument("modulus must be monic of degree " + std::to_string(c));
    }
    if (!is_irreducible(p, f)) throw InvalidArgument("supplied modulus is reducible over GF(p)");
    modulus_ = std::move(f);
  } else {
    modulus_ = smallest_irreducible(p, c);
  }

  neg_.resize(q_);
  for (Digit a = 0; a < q_; ++a) {
    auto coeffs = coefficients(a);
    for (auto& x : coeffs) x = (p_ - x) % p_;
    neg_[a] = from_coefficients(coeffs);
  }
  if (q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Digit a = 0; a < q_; ++a) {
      for (Digit b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digitwise(a, b);
    }
  }

  // Log/antilog tables from the smallest primitive element.
  log_.assign(q_, 0);
  exp_.assign(2 * std::size_t{q_}, 0);
  const std::uint32_t order = q_ - 1;
  for (Digit g = 1; g < q_; ++g) {
    Digit x = 1;
    std::uint32_t k = 0;
    do {
      exp_[k] = x;
      x = mul_polynomial(x, g);
      ++k;
    } while (x != 1 && k <= order);
    if (k == order) break;
  }
  for (std::uint32_t k = 0; k < order; ++k) {
    exp_[k + order] = exp_[k];
    log_[exp_[k]] = k;
  }

  trace_.resize(q_);
  for (Digit a = 0; a < q_; ++a) {
    Digit sum = 0;
    Digit power = a;
    for (std::uint32_t i = 0; i < c_; ++i) {
      sum = add(sum, power);
      Digit next = 1;
      for (std::uint32_t e = 0; e < p_; ++e) next = mul(next, power);
      power = next;
    }
    trace_[a] = sum;
  }
}

Digit GaloisField::inv(Digit a) const {
  if (a == 0) throw InvalidArgument("zero has no multiplicative inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::vector<Digit> GaloisField::coefficients(Digit a) const {
  std::vector<Digit> out(c_);
  for (std::uint32_t i = 0; i < c_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Digit GaloisField::from_coefficients(std::span<const Digit> coeffs) const {
  Digit value = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) value = value * p_ + coeffs[i] % p_;
  return value;
}

Digit GaloisField::add_digitwise(Digit a, Digit b) const noexcept {
  Digit out = 0;
  Digit scale = 1;
  for (std::uint32_t i = 0; i < c_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Digit GaloisField::mul_polynomial(Digit a, Digit b) const {
  const auto x = coefficients(a);
  const auto y = coefficients(b);
  Poly prod(2 * std::size_t{c_} - 1, 0);
  for (std::uint32_t i = 0; i < c_; ++i) {
    for (std::uint32_t j = 0; j < c_; ++j) {
      prod[i + j] = static_cast<Digit>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(c_, 0);
  return from_coefficients(r);
}

}  // namespace lf
