#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lf {

/// An element of GF(q), encoded as the integer whose base-p digits are the
/// polynomial-basis coefficients (a0 + a1*p + ... + a_{c-1}*p^{c-1}).
using Digit = std::uint32_t;

bool is_prime(std::uint64_t n);

/// `poly` holds coefficients low-to-high; the last entry is the leading one.
bool is_irreducible(std::uint32_t p, std::span<const Digit> poly);

/// Lexicographically smallest monic irreducible of degree c over GF(p),
/// comparing coefficient tuples from x^{c-1} down to x^0.
std::vector<Digit> smallest_irreducible(std::uint32_t p, std::uint32_t c);

/// Finite field GF(p^c) realized through precomputed tables.
///
/// Multiplication goes through log/antilog tables of a primitive element;
/// addition uses a full q x q table when q <= 256 and digit-wise arithmetic
/// otherwise. The trace map GF(q) -> GF(p) is tabulated.
class GaloisField {
 public:
  static constexpr std::uint64_t kDefaultTableLimit = std::uint64_t{1} << 16;

  /// Throws InvalidArgument for non-prime p, c == 0 or a reducible/ill-formed
  /// modulus, LimitExceeded when p^c exceeds `table_limit`.
  GaloisField(std::uint32_t p, std::uint32_t c,
              std::optional<std::vector<Digit>> irreducible = std::nullopt,
              std::uint64_t table_limit = kDefaultTableLimit);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t c() const noexcept { return c_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Monic modulus, coefficients low-to-high including the leading 1.
  const std::vector<Digit>& irreducible() const noexcept { return modulus_; }

  Digit add(Digit a, Digit b) const noexcept {
    return add_table_.empty() ? add_digitwise(a, b) : add_table_[a * q_ + b];
  }
  Digit neg(Digit a) const noexcept { return neg_[a]; }
  Digit sub(Digit a, Digit b) const noexcept { return add(a, neg_[b]); }
  Digit mul(Digit a, Digit b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Multiplicative inverse; `a` must be nonzero.
  Digit inv(Digit a) const;
  /// Trace to the prime field, returned as an integer in [0, p).
  Digit trace(Digit a) const noexcept { return trace_[a]; }

  std::vector<Digit> coefficients(Digit a) const;
  Digit from_coefficients(std::span<const Digit> coeffs) const;

  /// Reference multiplication by polynomial product and reduction (no tables).
  Digit mul_polynomial(Digit a, Digit b) const;

  bool operator==(const GaloisField& other) const noexcept {
    return p_ == other.p_ && c_ == other.c_ && modulus_ == other.modulus_;
  }

 private:
  Digit add_digitwise(Digit a, Digit b) const noexcept;

  std::uint32_t p_;
  std::uint32_t c_;
  std::uint32_t q_;
  std::vector<Digit> modulus_;
  std::vector<Digit> add_table_;
  std::vector<Digit> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<Digit> exp_;
  std::vector<Digit> trace_;
};

}  // namespace lf
