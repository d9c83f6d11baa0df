#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "localfield/galois_field.hpp"

namespace lf {

/// Digit exponents every element and grid must stay within.
struct PrecisionWindow {
  int lo_min = -128;
  int hi_max = 128;
};

struct FieldOptions {
  std::uint64_t table_limit = GaloisField::kDefaultTableLimit;
  /// Upper bound on coset enumerations and transform sizes.
  std::uint64_t enumeration_limit = std::uint64_t{1} << 20;
  PrecisionWindow window{};
};

/// The local field K = GF(q)((t)) together with its computation context.
/// Immutable once built; share it through `FieldPtr`.
class FieldParams {
 public:
  FieldParams(GaloisField gf, FieldOptions options);

  const GaloisField& gf() const noexcept { return gf_; }
  std::uint32_t p() const noexcept { return gf_.p(); }
  std::uint32_t c() const noexcept { return gf_.c(); }
  std::uint32_t q() const noexcept { return gf_.q(); }
  const PrecisionWindow& window() const noexcept { return options_.window; }
  std::uint64_t enumeration_limit() const noexcept { return options_.enumeration_limit; }

  /// exp(2 pi i k / p) for k in [0, p).
  std::complex<double> root_of_unity(Digit k) const noexcept { return roots_[k]; }

  /// exp(2 pi i tr(a b) / p), the additive character on one digit pair.
  /// Tabulated for q <= 256.
  std::complex<double> pairing(Digit a, Digit b) const noexcept {
    return pairing_.empty() ? roots_[gf_.trace(gf_.mul(a, b))] : pairing_[a * gf_.q() + b];
  }

  bool same_field(const FieldParams& other) const noexcept { return this == &other || gf_ == other.gf_; }

 private:
  GaloisField gf_;
  FieldOptions options_;
  std::vector<std::complex<double>> roots_;
  std::vector<std::complex<double>> pairing_;
};

using FieldPtr = std::shared_ptr<const FieldParams>;

/// Builds the field F_q((t)), q = p^c. Without an explicit modulus the
/// lexicographically smallest monic irreducible of degree c is used.
FieldPtr field_init(std::uint32_t p, std::uint32_t c, std::optional<std::vector<Digit>> irreducible = std::nullopt,
                    FieldOptions options = {});

/// A truncated Laurent series sum_{l} a_l t^l with finitely many nonzero digits.
///
/// Always canonical: digits_[0] is the coefficient of t^{lo_} and is nonzero,
/// the last digit is nonzero, and the zero element has no digits.
class FieldElement {
 public:
  explicit FieldElement(FieldPtr field);

  /// a * t^exponent.
  static FieldElement monomial(FieldPtr field, Digit a, int exponent);
  /// sum_i digits[i] t^{lo + i}; trims zeros, checks the precision window.
  static FieldElement from_digits(FieldPtr field, int lo, std::vector<Digit> digits);

  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return digits_.empty(); }

  /// min{l : a_l != 0}. Throws InvalidArgument for zero.
  int valuation() const;
  /// q^{-valuation}, and 0 for the zero element.
  double abs() const;

  Digit digit(int exponent) const noexcept {
    const long idx = static_cast<long>(exponent) - lo_;
    return (idx < 0 || idx >= static_cast<long>(digits_.size())) ? 0 : digits_[static_cast<std::size_t>(idx)];
  }
  /// Lowest and highest exponents carrying a nonzero digit (zero element: lo > hi).
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(digits_.size()) - 1; }
  std::span<const Digit> digits() const noexcept { return digits_; }

  /// Drops every digit at exponent >= level, i.e. the canonical representative mod P^level.
  FieldElement truncated_below(int level) const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend bool operator==(const FieldElement& x, const FieldElement& y);

  /// `q=<p>^<c>; <digit>@<exp>,...`; digits of GF(p^c), c > 1, are written as
  /// coefficient tuples `(a0,a1,...)`. The zero element is `q=<p>^<c>; 0`.
  std::string to_literal() const;
  /// Inverse of to_literal(); throws ParseError with the byte offset in `text`.
  static FieldElement parse_literal(const FieldPtr& field, std::string_view text);

 private:
  FieldElement(FieldPtr field, int lo, std::vector<Digit> digits);

  FieldPtr field_;
  int lo_ = 0;
  std::vector<Digit> digits_;
};

/// exp(2 pi i tr(a_{-1}(xi * x)) / p) where a_{-1} is the coefficient of t^{-1}.
/// Trivial on the ring of integers, nontrivial on t^{-1} D.
std::complex<double> character_eval(const FieldElement& xi, const FieldElement& x);

/// The coset rep + P^level.
struct CosetId {
  int level = 0;
  FieldElement rep;

  friend bool operator==(const CosetId& a, const CosetId& b) { return a.level == b.level && a.rep == b.rep; }
};

/// Cosets of P^resolution inside P^{-support}: q^{support + resolution} of them.
///
/// A coset is addressed by the integer whose base-q digits are the digits of its
/// canonical representative, the digit of t^{resolution-1} being least
/// significant. Index 0 is the zero coset and the first q^n indices enumerate
/// the cosets inside P^{resolution-n}.
class CosetGrid {
 public:
  /// Throws InvalidArgument when support + resolution < 0, LimitExceeded when
  /// the grid exceeds `limit`, PrecisionOverflow outside the window.
  CosetGrid(const FieldParams& field, int resolution, int support);

  int resolution() const noexcept { return resolution_; }
  int support() const noexcept { return support_; }
  /// Number of free digit positions, support + resolution.
  int positions() const noexcept { return resolution_ + support_; }
  std::size_t size() const noexcept { return size_; }
  std::uint32_t q() const noexcept { return q_; }

  int exponent_at(int position) const noexcept { return resolution_ - 1 - position; }
  int position_of(int exponent) const noexcept { return resolution_ - 1 - exponent; }

  FieldElement rep(const FieldPtr& field, std::size_t index) const;
  /// The coset containing x, or nullopt if x lies outside P^{-support}.
  std::optional<std::size_t> index_of(const FieldElement& x) const;

  /// Digits of `index`, position 0 first.
  void decode(std::size_t index, std::span<Digit> out) const noexcept;
  std::size_t encode(std::span<const Digit> digits) const noexcept;

  friend bool operator==(const CosetGrid& a, const CosetGrid& b) {
    return a.resolution_ == b.resolution_ && a.support_ == b.support_ && a.q_ == b.q_;
  }

 private:
  int resolution_;
  int support_;
  std::uint32_t q_;
  std::size_t size_;
};

/// q^{M+m} canonical representatives of the cosets of P^m in P^{-M}, in grid
/// index order (zero coset first).
std::vector<CosetId> coset_reps(const FieldPtr& field, int m, int M);

/// q^n with LimitExceeded when the result passes `limit`.
std::size_t checked_pow(std::uint64_t base, int exponent, std::uint64_t limit);

}  // namespace lf
