#include "localfield/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "localfield/errors.hpp"

namespace lf {

std::size_t checked_pow(std::uint64_t base, int exponent, std::uint64_t limit) {
  if (exponent < 0) throw InvalidArgument("negative exponent in grid size");
  std::uint64_t v = 1;
  for (int i = 0; i < exponent; ++i) {
    if (v > limit / base) {
      throw LimitExceeded(std::to_string(base) + "^" + std::to_string(exponent) + " exceeds the limit " +
                          std::to_string(limit));
    }
    v *= base;
  }
  if (v > limit) throw LimitExceeded("grid size exceeds the limit " + std::to_string(limit));
  return static_cast<std::size_t>(v);
}

FieldParams::FieldParams(GaloisField gf, FieldOptions options) : gf_(std::move(gf)), options_(options) {
  if (options_.window.lo_min > options_.window.hi_max) throw InvalidArgument("empty precision window");
  const std::uint32_t p = gf_.p();
  roots_.resize(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    // Exact values at the quarter turns keep small cases free of rounding.
    if (k == 0) {
      roots_[k] = {1.0, 0.0};
    } else if (2 * k == p) {
      roots_[k] = {-1.0, 0.0};
    } else if (4 * k == p) {
      roots_[k] = {0.0, 1.0};
    } else if (4 * k == 3 * p) {
      roots_[k] = {0.0, -1.0};
    } else {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
      roots_[k] = {std::cos(angle), std::sin(angle)};
    }
  }
  const std::uint32_t q = gf_.q();
  if (q <= 256) {
    pairing_.resize(std::size_t{q} * q);
    for (Digit a = 0; a < q; ++a) {
      for (Digit b = 0; b < q; ++b) pairing_[a * q + b] = roots_[gf_.trace(gf_.mul(a, b))];
    }
  }
}

FieldPtr field_init(std::uint32_t p, std::uint32_t c, std::optional<std::vector<Digit>> irreducible,
                    FieldOptions options) {
  return std::make_shared<const FieldParams>(GaloisField(p, c, std::move(irreducible), options.table_limit),
                                             options);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("null field");
}

FieldElement::FieldElement(FieldPtr field, int lo, std::vector<Digit> digits)
    : field_(std::move(field)), lo_(lo), digits_(std::move(digits)) {}

FieldElement FieldElement::from_digits(FieldPtr field, int lo, std::vector<Digit> digits) {
  if (!field) throw InvalidArgument("null field");
  const std::uint32_t q = field->q();
  for (Digit d : digits) {
    if (d >= q) throw InvalidArgument("digit " + std::to_string(d) + " is not an element of GF(" +
                                      std::to_string(q) + ")");
  }
  auto first = std::find_if(digits.begin(), digits.end(), [](Digit d) { return d != 0; });
  if (first == digits.end()) return FieldElement(std::move(field));
  auto last = std::find_if(digits.rbegin(), digits.rend(), [](Digit d) { return d != 0; }).base();
  const int new_lo = lo + static_cast<int>(first - digits.begin());
  std::vector<Digit> trimmed(first, last);
  const int new_hi = new_lo + static_cast<int>(trimmed.size()) - 1;
  const auto& w = field->window();
  if (new_lo < w.lo_min || new_hi > w.hi_max) {
    throw PrecisionOverflow("element needs exponents [" + std::to_string(new_lo) + ", " + std::to_string(new_hi) +
                            "] outside the window [" + std::to_string(w.lo_min) + ", " + std::to_string(w.hi_max) +
                            "]");
  }
  return FieldElement(std::move(field), new_lo, std::move(trimmed));
}

FieldElement FieldElement::monomial(FieldPtr field, Digit a, int exponent) {
  return from_digits(std::move(field), exponent, {a});
}

int FieldElement::valuation() const {
  if (is_zero()) throw InvalidArgument("valuation of zero is undefined");
  return lo_;
}

double FieldElement::abs() const {
  if (is_zero()) return 0.0;
  return std::pow(static_cast<double>(field_->q()), -lo_);
}

FieldElement FieldElement::truncated_below(int level) const {
  if (is_zero() || hi() < level) return *this;
  if (lo_ >= level) return FieldElement(field_);
  std::vector<Digit> kept(digits_.begin(), digits_.begin() + (level - lo_));
  return from_digits(field_, lo_, std::move(kept));
}

namespace {

void require_same_field(const FieldElement& x, const FieldElement& y) {
  if (!x.field()->same_field(*y.field())) throw DomainMismatch("operands belong to different fields");
}

template <class Op>
FieldElement digitwise(const FieldElement& x, const FieldElement& y, Op op) {
  require_same_field(x, y);
  if (x.is_zero() && y.is_zero()) return x;
  const int lo = x.is_zero() ? y.lo() : (y.is_zero() ? x.lo() : std::min(x.lo(), y.lo()));
  const int hi = x.is_zero() ? y.hi() : (y.is_zero() ? x.hi() : std::max(x.hi(), y.hi()));
  std::vector<Digit> out(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) out[static_cast<std::size_t>(e - lo)] = op(x.digit(e), y.digit(e));
  return FieldElement::from_digits(x.field(), lo, std::move(out));
}

}  // namespace

FieldElement FieldElement::operator-() const {
  std::vector<Digit> out(digits_.size());
  const auto& gf = field_->gf();
  std::transform(digits_.begin(), digits_.end(), out.begin(), [&](Digit d) { return gf.neg(d); });
  return FieldElement(field_, lo_, std::move(out));
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  const auto& gf = x.field()->gf();
  return digitwise(x, y, [&](Digit a, Digit b) { return gf.add(a, b); });
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  const auto& gf = x.field()->gf();
  return digitwise(x, y, [&](Digit a, Digit b) { return gf.sub(a, b); });
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  if (x.is_zero() || y.is_zero()) return FieldElement(x.field());
  const auto& gf = x.field()->gf();
  const auto xd = x.digits();
  const auto yd = y.digits();
  std::vector<Digit> out(xd.size() + yd.size() - 1, 0);
  for (std::size_t i = 0; i < xd.size(); ++i) {
    if (xd[i] == 0) continue;
    for (std::size_t j = 0; j < yd.size(); ++j) out[i + j] = gf.add(out[i + j], gf.mul(xd[i], yd[j]));
  }
  // Leading digits of a field product never cancel, so the canonical window is lo_x + lo_y.
  return FieldElement::from_digits(x.field(), x.lo() + y.lo(), std::move(out));
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.field()->same_field(*y.field()) && x.lo_ == y.lo_ && x.digits_ == y.digits_;
}

std::string FieldElement::to_literal() const {
  std::ostringstream out;
  out << "q=" << field_->p() << '^' << field_->c() << "; ";
  if (is_zero()) {
    out << '0';
    return out.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] == 0) continue;
    if (!first) out << ',';
    first = false;
    if (field_->c() == 1) {
      out << digits_[i];
    } else {
      const auto coeffs = field_->gf().coefficients(digits_[i]);
      out << '(';
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << (k ? "," : "") << coeffs[k];
      out << ')';
    }
    out << '@' << (lo_ + static_cast<int>(i));
  }
  return out.str();
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  long integer() {
    skip_space();
    long value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("element literal: " + what, pos_); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement FieldElement::parse_literal(const FieldPtr& field, std::string_view text) {
  Cursor cur(text);
  cur.expect('q');
  cur.expect('=');
  const std::size_t p_pos = cur.pos();
  const long p = cur.integer();
  cur.expect('^');
  const long c = cur.integer();
  if (p != static_cast<long>(field->p()) || c != static_cast<long>(field->c())) {
    throw ParseError("element literal: field q=" + std::to_string(p) + "^" + std::to_string(c) +
                         " does not match q=" + std::to_string(field->p()) + "^" + std::to_string(field->c()),
                     p_pos);
  }
  cur.expect(';');
  std::vector<std::pair<int, Digit>> terms;
  if (cur.done()) cur.fail("missing digit list");
  do {
    const std::size_t term_pos = cur.pos();
    Digit d = 0;
    if (cur.accept('(')) {
      std::vector<Digit> coeffs;
      do {
        const long a = cur.integer();
        if (a < 0 || a >= p) cur.fail("coefficient out of range [0, p)");
        coeffs.push_back(static_cast<Digit>(a));
      } while (cur.accept(','));
      cur.expect(')');
      if (coeffs.size() != field->c()) cur.fail("coefficient tuple must have length c");
      d = field->gf().from_coefficients(coeffs);
    } else {
      const long a = cur.integer();
      if (field->c() != 1 && a != 0) cur.fail("digits of GF(p^c), c > 1, must be coefficient tuples");
      if (a < 0 || a >= p) cur.fail("digit out of range [0, p)");
      d = static_cast<Digit>(a);
      if (a == 0 && !cur.peek('@')) {
        // bare "0": the zero element
        if (!terms.empty() || !cur.done()) cur.fail("bare 0 must be the whole digit list");
        break;
      }
    }
    cur.expect('@');
    const long e = cur.integer();
    if (e < field->window().lo_min || e > field->window().hi_max) {
      throw ParseError("element literal: exponent outside the precision window", term_pos);
    }
    for (const auto& t : terms) {
      if (t.first == e) throw ParseError("element literal: repeated exponent " + std::to_string(e), term_pos);
    }
    terms.emplace_back(static_cast<int>(e), d);
  } while (cur.accept(','));
  if (!cur.done()) cur.fail("unexpected trailing characters");

  if (terms.empty()) return FieldElement(field);
  int lo = terms.front().first;
  int hi = lo;
  for (const auto& t : terms) {
    lo = std::min(lo, t.first);
    hi = std::max(hi, t.first);
  }
  std::vector<Digit> digits(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& t : terms) digits[static_cast<std::size_t>(t.first - lo)] = t.second;
  return from_digits(field, lo, std::move(digits));
}

std::complex<double> character_eval(const FieldElement& xi, const FieldElement& x) {
  require_same_field(xi, x);
  if (xi.is_zero() || x.is_zero()) return {1.0, 0.0};
  const auto& field = *xi.field();
  const auto& gf = field.gf();
  Digit coeff = 0;
  for (int e = xi.lo(); e <= xi.hi(); ++e) {
    const Digit a = xi.digit(e);
    if (a != 0) coeff = gf.add(coeff, gf.mul(a, x.digit(-1 - e)));
  }
  return field.root_of_unity(gf.trace(coeff));
}

// ---------------------------------------------------------------------------
// CosetGrid

CosetGrid::CosetGrid(const FieldParams& field, int resolution, int support)
    : resolution_(resolution), support_(support), q_(field.q()) {
  if (resolution + support < 0) {
    throw InvalidArgument("empty coset window: resolution " + std::to_string(resolution) + " below -support " +
                          std::to_string(-support));
  }
  if (resolution + support > 0) {
    const auto& w = field.window();
    if (-support < w.lo_min || resolution - 1 > w.hi_max) {
      throw PrecisionOverflow("grid exponents [" + std::to_string(-support) + ", " + std::to_string(resolution - 1) +
                              "] leave the precision window");
    }
  }
  size_ = checked_pow(q_, resolution + support, field.enumeration_limit());
}

void CosetGrid::decode(std::size_t index, std::span<Digit> out) const noexcept {
  for (auto& d : out) {
    d = static_cast<Digit>(index % q_);
    index /= q_;
  }
}

std::size_t CosetGrid::encode(std::span<const Digit> digits) const noexcept {
  std::size_t index = 0;
  for (std::size_t i = digits.size(); i-- > 0;) index = index * q_ + digits[i];
  return index;
}

FieldElement CosetGrid::rep(const FieldPtr& field, std::size_t index) const {
  const int n = positions();
  if (n == 0) return FieldElement(field);
  std::vector<Digit> pos_digits(static_cast<std::size_t>(n));
  decode(index, pos_digits);
  // Digit storage runs from exponent -support (position n-1) upward.
  std::vector<Digit> digits(pos_digits.rbegin(), pos_digits.rend());
  return FieldElement::from_digits(field, -support_, std::move(digits));
}

std::optional<std::size_t> CosetGrid::index_of(const FieldElement& x) const {
  if (!x.is_zero() && x.lo() < -support_) return std::nullopt;
  std::size_t index = 0;
  for (int pos = positions() - 1; pos >= 0; --pos) index = index * q_ + x.digit(exponent_at(pos));
  return index;
}

std::vector<CosetId> coset_reps(const FieldPtr& field, int m, int M) {
  CosetGrid grid(*field, m, M);
  std::vector<CosetId> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.push_back(CosetId{m, grid.rep(field, i)});
  return out;
}

}  // namespace lf
