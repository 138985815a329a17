#include "gelfand/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "text_internal.hpp"

namespace gelfand {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::mixed_fields: return "MixedFields";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::infinite_field: return "InfiniteField";
    case ErrorCode::none_found: return "NoneFound";
    case ErrorCode::wrong_kind: return "WrongKind";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::not_monic: return "NotMonic";
    case ErrorCode::zero_polynomial: return "ZeroPolynomial";
    case ErrorCode::has_root: return "HasRoot";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::point_out_of_range: return "PointOutOfRange";
    case ErrorCode::not_proper: return "NotProper";
    case ErrorCode::common_zero: return "CommonZero";
    case ErrorCode::origin_in_image: return "OriginInJ";
    case ErrorCode::avoidance_exhausted: return "AvoidanceExhausted";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

struct FieldDescriptor::Data {
  FieldKind kind;
  std::int64_t p = 0;
  int k = 1;
  std::vector<std::int64_t> modulus;  // t^0 .. t^k, monic
  std::int64_t d = 0;
};

namespace {

using Residues = std::vector<std::int64_t>;

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return mod_p(s0, p);
}

void trim(Residues& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by b over F_p; b nonzero with trimmed representation.
Residues poly_rem(Residues a, const Residues& b, std::int64_t p) {
  trim(a);
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t factor = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = mod_p(a[shift + j] - mul_mod(factor, b[j], p), p);
    }
    trim(a);
  }
  return a;
}

std::pair<Residues, Residues> poly_divmod(Residues a, const Residues& b, std::int64_t p) {
  trim(a);
  Residues q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t factor = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = mod_p(a[shift + j] - mul_mod(factor, b[j], p), p);
    }
    trim(a);
  }
  return {q, a};
}

Residues poly_sub_mul(const Residues& a, const Residues& q, const Residues& b, std::int64_t p) {
  // a - q*b
  Residues out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1), 0);
  std::copy(a.begin(), a.end(), out.begin());
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = mod_p(out[i + j] - mul_mod(q[i], b[j], p), p);
    }
  }
  trim(out);
  return out;
}

// Digits of `index` in base p, least significant first, padded to k.
Residues digits(std::uint64_t index, std::int64_t p, int k) {
  Residues out(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
  return out;
}

// p^k, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    out *= base;
  }
  return out;
}

bool has_root_mod_p(const Residues& f, std::int64_t p) {
  for (std::int64_t a = 0; a < p; ++a) {
    std::int64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod_p(mul_mod(acc, a, p) + *it, p);
    if (acc == 0) return true;
  }
  return false;
}

// No monic factor of degree 1..k/2, checked by trial division.
bool is_irreducible_mod_p(const Residues& f, std::int64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  const auto budget = checked_power(static_cast<std::uint64_t>(p), static_cast<unsigned>(k / 2));
  if (!budget || *budget > exhaustive_search_limit || static_cast<std::uint64_t>(p) > exhaustive_search_limit) {
    throw Error(ErrorCode::too_large, "irreducibility check for degree " + std::to_string(k) +
                                          " over F_" + std::to_string(p) + " exceeds the search limit");
  }
  if (has_root_mod_p(f, p)) return false;
  for (int d = 2; d <= k / 2; ++d) {
    const std::uint64_t count = *checked_power(static_cast<std::uint64_t>(p), static_cast<unsigned>(d));
    for (std::uint64_t n = 0; n < count; ++n) {
      Residues g = digits(n, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

void require_kind(const FieldElement& x, FieldKind kind, const char* what) {
  if (x.field().kind() != kind) throw Error(ErrorCode::wrong_kind, std::string(what) + " requires a different field kind");
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldDescriptor

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::int64_t p) {
  if (p > max_characteristic || !is_prime(p)) {
    throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not a supported prime");
  }
  return FieldDescriptor(std::make_shared<const Data>(Data{FieldKind::prime, p, 1, {}, 0}));
}

FieldDescriptor FieldDescriptor::extension(std::int64_t p, int k, std::vector<std::int64_t> modulus) {
  if (p > max_characteristic || !is_prime(p)) {
    throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not a supported prime");
  }
  if (k < 1 || k > max_extension_degree) {
    throw Error(ErrorCode::invalid_argument,
                "extension degree must lie in [1, 8], got " + std::to_string(k));
  }
  for (auto& c : modulus) c = mod_p(c, p);
  trim(modulus);
  if (modulus.size() != static_cast<std::size_t>(k) + 1) {
    throw Error(ErrorCode::invalid_argument, "modulus must have degree " + std::to_string(k));
  }
  if (modulus.back() != 1) throw Error(ErrorCode::not_monic, "modulus must be monic");
  if (!is_irreducible_mod_p(modulus, p)) {
    throw Error(ErrorCode::invalid_argument, "modulus " + detail::format_residue_poly(modulus, "t") +
                                                 " is reducible over F_" + std::to_string(p));
  }
  return FieldDescriptor(std::make_shared<const Data>(Data{FieldKind::extension, p, k, std::move(modulus), 0}));
}

FieldDescriptor FieldDescriptor::extension(std::int64_t p, int k) {
  if (p > max_characteristic || !is_prime(p)) {
    throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not a supported prime");
  }
  if (k < 1 || k > max_extension_degree) {
    throw Error(ErrorCode::invalid_argument,
                "extension degree must lie in [1, 8], got " + std::to_string(k));
  }
  const auto count = checked_power(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
  if (!count || *count > exhaustive_search_limit) {
    throw Error(ErrorCode::too_large, "modulus search over F_" + std::to_string(p) + " of degree " +
                                          std::to_string(k) + " exceeds the search limit");
  }
  // Index order with c_0 least significant is lexicographic on (c_{k-1}, ..., c_0).
  for (std::uint64_t n = 0; n < *count; ++n) {
    Residues candidate = digits(n, p, k);
    candidate.push_back(1);
    if (is_irreducible_mod_p(candidate, p)) {
      return FieldDescriptor(std::make_shared<const Data>(Data{FieldKind::extension, p, k, std::move(candidate), 0}));
    }
  }
  throw Error(ErrorCode::none_found, "no irreducible modulus found");
}

FieldDescriptor FieldDescriptor::rationals() {
  static const auto data = std::make_shared<const Data>(Data{FieldKind::rational, 0, 1, {}, 0});
  return FieldDescriptor(data);
}

FieldDescriptor FieldDescriptor::quadratic(std::int64_t d) {
  if (d >= 0) throw Error(ErrorCode::invalid_argument, "quadratic fields require d < 0");
  if (d < -(std::int64_t{1} << 40)) throw Error(ErrorCode::invalid_argument, "radicand out of range");
  return FieldDescriptor(std::make_shared<const Data>(Data{FieldKind::quadratic, 0, 2, {}, d}));
}

FieldKind FieldDescriptor::kind() const noexcept { return data_->kind; }

bool FieldDescriptor::is_finite() const noexcept {
  return data_->kind == FieldKind::prime || data_->kind == FieldKind::extension;
}

std::int64_t FieldDescriptor::characteristic() const noexcept { return data_->p; }
int FieldDescriptor::degree() const noexcept { return data_->k; }
std::span<const std::int64_t> FieldDescriptor::modulus() const noexcept { return data_->modulus; }
std::int64_t FieldDescriptor::radicand() const noexcept { return data_->d; }

std::uint64_t FieldDescriptor::order() const {
  if (!is_finite()) throw Error(ErrorCode::infinite_field, to_string() + " is infinite");
  const auto q = checked_power(static_cast<std::uint64_t>(data_->p), static_cast<unsigned>(data_->k));
  if (!q) throw Error(ErrorCode::too_large, "field order overflows 64 bits");
  return *q;
}

std::string FieldDescriptor::generator_symbol() const {
  switch (data_->kind) {
    case FieldKind::extension: return "t";
    case FieldKind::quadratic:
      return data_->d == -1 ? "i" : "sqrt(" + std::to_string(data_->d) + ")";
    default: return "";
  }
}

std::string FieldDescriptor::to_string() const {
  switch (data_->kind) {
    case FieldKind::prime: return "Fp(" + std::to_string(data_->p) + ")";
    case FieldKind::extension:
      return "Fq(" + std::to_string(data_->p) + "," + std::to_string(data_->k) + "," +
             detail::format_residue_poly(data_->modulus, "t") + ")";
    case FieldKind::rational: return "Q";
    case FieldKind::quadratic: return "Q(sqrt(" + std::to_string(data_->d) + "))";
  }
  return "?";
}

bool FieldDescriptor::operator==(const FieldDescriptor& other) const noexcept {
  if (data_ == other.data_) return true;
  return data_->kind == other.data_->kind && data_->p == other.data_->p && data_->k == other.data_->k &&
         data_->modulus == other.data_->modulus && data_->d == other.data_->d;
}

FieldElement FieldDescriptor::zero() const { return from_integer(0); }
FieldElement FieldDescriptor::one() const { return from_integer(1); }

FieldElement FieldDescriptor::from_integer(const Integer& n) const {
  if (is_finite()) {
    Residues r(static_cast<std::size_t>(data_->k), 0);
    Integer m = n % data_->p;
    if (m < 0) m += data_->p;
    r[0] = static_cast<std::int64_t>(m);
    return FieldElement(*this, std::move(r));
  }
  return FieldElement(*this, Rational(n), Rational(0));
}

FieldElement FieldDescriptor::from_rational(const Rational& r) const {
  if (is_finite()) {
    return from_integer(numerator(r)) / from_integer(denominator(r));
  }
  return FieldElement(*this, r, Rational(0));
}

FieldElement FieldDescriptor::generator() const {
  switch (data_->kind) {
    case FieldKind::extension: {
      // For k = 1 the class of t is the root of t + c_0.
      if (data_->k == 1) return FieldElement(*this, Residues{mod_p(-data_->modulus[0], data_->p)});
      Residues r(static_cast<std::size_t>(data_->k), 0);
      r[1] = 1;
      return FieldElement(*this, std::move(r));
    }
    case FieldKind::quadratic: return FieldElement(*this, Rational(0), Rational(1));
    default: throw Error(ErrorCode::wrong_kind, to_string() + " has no adjoined generator");
  }
}

FieldElement FieldDescriptor::element_at(std::uint64_t index) const {
  if (index >= order()) throw Error(ErrorCode::invalid_argument, "element index out of range");
  return FieldElement(*this, digits(index, data_->p, data_->k));
}

std::vector<FieldElement> FieldDescriptor::enumerate() const {
  const std::uint64_t q = order();
  if (q > exhaustive_search_limit) throw Error(ErrorCode::too_large, "field too large to enumerate");
  std::vector<FieldElement> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(element_at(i));
  return out;
}

FieldElement FieldDescriptor::parse_element(std::string_view text) const {
  return detail::parse_constant(text, *this);
}

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  FieldDescriptor parse() {
    skip_ws();
    FieldDescriptor out = FieldDescriptor::rationals();
    if (accept("Fp")) {
      expect("(");
      const auto p = integer();
      expect(")");
      out = FieldDescriptor::prime(p);
    } else if (accept("Fq")) {
      expect("(");
      const auto p = integer();
      expect(",");
      const auto k = integer();
      if (accept(",")) {
        const std::size_t begin = pos_;
        std::size_t depth = 0;
        while (pos_ < text_.size() && !(depth == 0 && text_[pos_] == ')')) {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')') --depth;
          ++pos_;
        }
        if (p > FieldDescriptor::max_characteristic || !is_prime(p)) {
          throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not a supported prime");
        }
        const auto base = FieldDescriptor::prime(p);
        const auto coeffs = detail::parse_univariate(text_, begin, pos_, base, "t");
        std::vector<std::int64_t> modulus;
        for (const auto& c : coeffs) modulus.push_back(c.residues()[0]);
        expect(")");
        out = FieldDescriptor::extension(p, static_cast<int>(k), std::move(modulus));
      } else {
        expect(")");
        out = FieldDescriptor::extension(p, static_cast<int>(k));
      }
    } else if (accept("Q")) {
      if (accept("(")) {
        expect("sqrt");
        expect("(");
        const bool negative = accept("-");
        const auto d = integer();
        expect(")");
        expect(")");
        out = FieldDescriptor::quadratic(negative ? -d : d);
      }
    } else {
      throw ParseError(pos_, "one of Fp, Fq, Q", std::string(text_));
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input", std::string(text_));
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) throw ParseError(pos_, "'" + std::string(token) + "'", std::string(text_));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_ || pos_ - begin > 18) throw ParseError(begin, "integer", std::string(text_));
    return std::stoll(std::string(text_.substr(begin, pos_ - begin)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldDescriptor FieldDescriptor::parse(std::string_view text) { return DescriptorParser(text).parse(); }

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldDescriptor field, std::vector<std::int64_t> residues)
    : field_(std::move(field)), residues_(std::move(residues)) {}

FieldElement::FieldElement(FieldDescriptor field, Rational a, Rational b)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw Error(ErrorCode::mixed_fields,
                "operands belong to " + field_.to_string() + " and " + rhs.field_.to_string());
  }
}

bool FieldElement::is_zero() const noexcept {
  if (field_.is_finite()) return std::all_of(residues_.begin(), residues_.end(), [](auto c) { return c == 0; });
  return a_ == 0 && b_ == 0;
}

bool FieldElement::is_one() const { return *this == field_.one(); }

FieldElement FieldElement::operator-() const {
  if (field_.is_finite()) {
    Residues r = residues_;
    for (auto& c : r) c = mod_p(-c, field_.characteristic());
    return FieldElement(field_, std::move(r));
  }
  return FieldElement(field_, Rational(-a_), Rational(-b_));
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  if (field_.is_finite()) {
    Residues r = residues_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_p(r[i] + rhs.residues_[i], field_.characteristic());
    return FieldElement(field_, std::move(r));
  }
  return FieldElement(field_, Rational(a_ + rhs.a_), Rational(b_ + rhs.b_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  const auto p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::prime:
      return FieldElement(field_, Residues{mul_mod(residues_[0], rhs.residues_[0], p)});
    case FieldKind::extension: {
      const std::size_t k = residues_.size();
      Residues prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i) {
        if (residues_[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          prod[i + j] = mod_p(prod[i + j] + mul_mod(residues_[i], rhs.residues_[j], p), p);
        }
      }
      const auto modulus = field_.modulus();
      for (std::size_t deg = prod.size() - 1; deg >= k; --deg) {
        const std::int64_t c = prod[deg];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= k; ++j) {
          prod[deg - k + j] = mod_p(prod[deg - k + j] - mul_mod(c, modulus[j], p), p);
        }
      }
      prod.resize(k);
      return FieldElement(field_, std::move(prod));
    }
    case FieldKind::rational: return FieldElement(field_, Rational(a_ * rhs.a_), Rational(0));
    case FieldKind::quadratic: {
      const Rational d(field_.radicand());
      Rational a = a_ * rhs.a_ + d * b_ * rhs.b_;
      Rational b = a_ * rhs.b_ + b_ * rhs.a_;
      return FieldElement(field_, std::move(a), std::move(b));
    }
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero in " + field_.to_string());
  const auto p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::prime: return FieldElement(field_, Residues{inv_mod(residues_[0], p)});
    case FieldKind::extension: {
      // Extended Euclid on (modulus, x): s*x = 1 mod modulus.
      Residues r0(field_.modulus().begin(), field_.modulus().end());
      Residues r1 = residues_;
      trim(r1);
      Residues s0, s1{1};
      while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1, p);
        Residues s = poly_sub_mul(s0, q, s1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
      }
      // r0 is a nonzero constant since the modulus is irreducible.
      const std::int64_t scale = inv_mod(r0[0], p);
      Residues out(residues_.size(), 0);
      for (std::size_t i = 0; i < s0.size(); ++i) out[i] = mul_mod(s0[i], scale, p);
      return FieldElement(field_, std::move(out));
    }
    case FieldKind::rational: return FieldElement(field_, Rational(1 / a_), Rational(0));
    case FieldKind::quadratic: {
      const Rational n = a_ * a_ - Rational(field_.radicand()) * b_ * b_;
      return FieldElement(field_, Rational(a_ / n), Rational(-b_ / n));
    }
  }
  return *this;
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_field(rhs);
  return *this * rhs.inverse();
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& rhs) const noexcept {
  if (!(field_ == rhs.field_)) return false;
  if (field_.is_finite()) return residues_ == rhs.residues_;
  return a_ == rhs.a_ && b_ == rhs.b_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& rhs) const {
  require_same_field(rhs);
  if (field_.is_finite()) {
    for (std::size_t i = residues_.size(); i-- > 0;) {
      if (auto c = residues_[i] <=> rhs.residues_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  if (a_ != rhs.a_) return a_ < rhs.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (b_ != rhs.b_) return b_ < rhs.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::uint64_t FieldElement::index() const {
  field_.order();  // throws for infinite fields and oversized orders
  std::uint64_t out = 0;
  const auto p = static_cast<std::uint64_t>(field_.characteristic());
  for (std::size_t i = residues_.size(); i-- > 0;) out = out * p + static_cast<std::uint64_t>(residues_[i]);
  return out;
}

namespace {

std::string rational_text(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

std::string FieldElement::to_string() const {
  switch (field_.kind()) {
    case FieldKind::prime: return std::to_string(residues_[0]);
    case FieldKind::extension: return detail::format_residue_poly(residues_, "t");
    case FieldKind::rational: return rational_text(a_);
    case FieldKind::quadratic: {
      const std::string symbol = field_.generator_symbol();
      if (b_ == 0) return rational_text(a_);
      std::string imag;
      const Rational magnitude = b_ < 0 ? Rational(-b_) : b_;
      imag = magnitude == 1 ? symbol : rational_text(magnitude) + "*" + symbol;
      if (a_ == 0) return (b_ < 0 ? "-" : "") + imag;
      return rational_text(a_) + (b_ < 0 ? "-" : "+") + imag;
    }
  }
  return "?";
}

FieldElement inv(const FieldElement& x) { return x.inverse(); }

FieldElement conjugate(const FieldElement& x) {
  require_kind(x, FieldKind::quadratic, "conjugate");
  return x.field().from_rational(x.rational_part()) -
         x.field().from_rational(x.irrational_part()) * x.field().generator();
}

FieldElement norm(const FieldElement& x) {
  require_kind(x, FieldKind::quadratic, "norm");
  const auto product = x * conjugate(x);
  // The irrational part of x * conj(x) cancels identically.
  return FieldDescriptor::rationals().from_rational(product.rational_part());
}

// ---------------------------------------------------------------------------
// Valuation

Valuation Valuation::operator+(const Valuation& rhs) const noexcept {
  if (is_infinite() || rhs.is_infinite()) return infinity();
  return finite(*value_ + *rhs.value_);
}

std::strong_ordering Valuation::operator<=>(const Valuation& rhs) const noexcept {
  if (is_infinite() || rhs.is_infinite()) {
    if (is_infinite() && rhs.is_infinite()) return std::strong_ordering::equal;
    return is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *value_ <=> *rhs.value_;
}

std::string Valuation::to_string() const { return is_infinite() ? "+inf" : std::to_string(*value_); }

namespace {

std::int64_t multiplicity(Integer n, std::int64_t p) {
  if (n < 0) n = -n;
  std::int64_t count = 0;
  while (n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

}  // namespace

Valuation padic_valuation(const Rational& r, std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  if (r == 0) return Valuation::infinity();
  return Valuation::finite(multiplicity(numerator(r), p) - multiplicity(denominator(r), p));
}

Valuation padic_valuation(const FieldElement& r, std::int64_t p) {
  require_kind(r, FieldKind::rational, "padic_valuation");
  return padic_valuation(r.rational_part(), p);
}

// ---------------------------------------------------------------------------
// Root-free search

FieldElement evaluate_univariate(std::span<const FieldElement> coefficients, const FieldElement& at) {
  FieldElement acc = at.field().zero();
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::vector<FieldElement> find_rootfree_monic(const FieldDescriptor& field, unsigned m) {
  if (m < 2) {
    throw Error(ErrorCode::invalid_argument,
                "root-free monic search needs degree >= 2 (every monic linear polynomial has a root)");
  }
  const std::uint64_t q = field.order();
  const auto candidates = checked_power(q, m);
  if (!candidates || *candidates > exhaustive_search_limit) {
    throw Error(ErrorCode::too_large, "q^m exceeds the search limit");
  }
  const auto elements = field.enumerate();
  for (std::uint64_t n = 0; n < *candidates; ++n) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(m + 1);
    std::uint64_t rest = n;
    for (unsigned i = 0; i < m; ++i) {
      coeffs.push_back(elements[rest % q]);
      rest /= q;
    }
    coeffs.push_back(field.one());
    const bool root_free = std::none_of(elements.begin(), elements.end(), [&](const FieldElement& a) {
      return evaluate_univariate(coeffs, a).is_zero();
    });
    if (root_free) return coeffs;
  }
  throw Error(ErrorCode::none_found, "no root-free monic polynomial of degree " + std::to_string(m) +
                                         " over " + field.to_string());
}

}  // namespace gelfand
