#pragma once

// Exact arithmetic over the supported field instances:
//
//   Fp(p)            prime field, residues in [0, p)
//   Fq(p, k, m(t))   F_p[t]/(m(t)) for a monic irreducible m of degree 2 <= k <= 8
//   Q                rationals (arbitrary precision)
//   Q(sqrt(d))       imaginary quadratic extension, d < 0 not a square
//
// FieldDescriptor is a cheap, immutable handle; FieldElement is a value type
// holding its canonical payload together with the descriptor it belongs to.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gelfand/errors.hpp"

namespace gelfand {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { prime, extension, rational, quadratic };

class FieldElement;

class FieldDescriptor {
 public:
  /// Largest accepted characteristic; keeps residue products inside 64 bits.
  static constexpr std::int64_t max_characteristic = (std::int64_t{1} << 31) - 1;
  static constexpr int max_extension_degree = 8;

  static FieldDescriptor prime(std::int64_t p);
  /// `modulus` lists coefficients from t^0 up to t^k and must be monic.
  static FieldDescriptor extension(std::int64_t p, int k, std::vector<std::int64_t> modulus);
  /// Uses the lexicographically first monic irreducible of degree k.
  static FieldDescriptor extension(std::int64_t p, int k);
  static FieldDescriptor rationals();
  static FieldDescriptor quadratic(std::int64_t d);

  /// Parses `Fp(5)`, `Fq(2,3,t^3+t+1)`, `Fq(3,2)`, `Q` or `Q(sqrt(-1))`.
  static FieldDescriptor parse(std::string_view text);

  FieldKind kind() const noexcept;
  bool is_finite() const noexcept;
  /// p for finite fields, 0 otherwise.
  std::int64_t characteristic() const noexcept;
  /// Extension degree k over the prime field (1 for Fp, 2 for Q(sqrt d)).
  int degree() const noexcept;
  /// Modulus coefficients t^0..t^k; empty unless kind() == extension.
  std::span<const std::int64_t> modulus() const noexcept;
  /// d of Q(sqrt d); 0 for other kinds.
  std::int64_t radicand() const noexcept;
  /// Number of elements q = p^k. Throws InfiniteField for Q and Q(sqrt d).
  std::uint64_t order() const;

  /// Symbol naming the adjoined generator in element text: "t", "i" (d = -1),
  /// "sqrt(d)"; empty for Fp and Q.
  std::string generator_symbol() const;
  std::string to_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(const Integer& n) const;
  /// Rational and quadratic kinds only.
  FieldElement from_rational(const Rational& r) const;
  /// The adjoined generator t or sqrt(d). Throws WrongKind for Fp and Q.
  FieldElement generator() const;
  /// The element whose enumeration index is `index` (finite fields only).
  FieldElement element_at(std::uint64_t index) const;
  /// Parses an element literal such as `3`, `-1/2`, `t^2+1` or `1/2-3*i`.
  FieldElement parse_element(std::string_view text) const;

  /// Every element exactly once, ordered lexicographically on the
  /// coefficient tuple read from the highest power of t down.
  std::vector<FieldElement> enumerate() const;

  bool operator==(const FieldDescriptor& other) const noexcept;

  struct Data;

 private:
  explicit FieldDescriptor(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend class FieldElement;
};

class FieldElement {
 public:
  const FieldDescriptor& field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  /// Throws DivisionByZero for zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  /// Structural equality of canonical forms. Elements of different fields are unequal.
  bool operator==(const FieldElement& rhs) const noexcept;
  /// Canonical total order: enumeration order for finite fields, numeric
  /// order on (a, b) for Q and Q(sqrt d). Throws MixedFields across fields.
  std::strong_ordering operator<=>(const FieldElement& rhs) const;

  /// Enumeration index in [0, q). Finite fields only.
  std::uint64_t index() const;
  /// Residues c_0..c_{k-1} (finite fields only).
  std::span<const std::int64_t> residues() const noexcept { return residues_; }
  /// a for Q; a of a + b*sqrt(d) for quadratic.
  const Rational& rational_part() const noexcept { return a_; }
  /// b of a + b*sqrt(d); zero for other kinds.
  const Rational& irrational_part() const noexcept { return b_; }

  std::string to_string() const;

 private:
  FieldElement(FieldDescriptor field, std::vector<std::int64_t> residues);
  FieldElement(FieldDescriptor field, Rational a, Rational b);

  void require_same_field(const FieldElement& rhs) const;

  FieldDescriptor field_;
  std::vector<std::int64_t> residues_;
  Rational a_;
  Rational b_;

  friend class FieldDescriptor;
};

FieldElement inv(const FieldElement& x);

/// a - b*sqrt(d). Throws WrongKind unless x lies in Q(sqrt d).
FieldElement conjugate(const FieldElement& x);
/// x * conjugate(x) = a^2 - d*b^2 as an element of Q. Throws WrongKind.
FieldElement norm(const FieldElement& x);

/// p-adic valuation of a rational; +infinity for zero.
class Valuation {
 public:
  static Valuation infinity() noexcept { return Valuation(); }
  static Valuation finite(std::int64_t v) noexcept { return Valuation(v); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws std::bad_optional_access for +infinity.
  std::int64_t value() const { return value_.value(); }

  Valuation operator+(const Valuation& rhs) const noexcept;
  bool operator==(const Valuation& rhs) const noexcept = default;
  /// +infinity compares greater than every finite value.
  std::strong_ordering operator<=>(const Valuation& rhs) const noexcept;

  std::string to_string() const;

 private:
  Valuation() = default;
  explicit Valuation(std::int64_t v) : value_(v) {}
  std::optional<std::int64_t> value_;
};

bool is_prime(std::int64_t n) noexcept;

Valuation padic_valuation(const Rational& r, std::int64_t p);
/// Requires an element of Q.
Valuation padic_valuation(const FieldElement& r, std::int64_t p);

/// Guard on the number of candidates/evaluations a search may perform.
inline constexpr std::uint64_t exhaustive_search_limit = 10'000'000;

/// First monic degree-m polynomial (coefficients c_0..c_m, c_m = 1) with no
/// root in the finite field F, in lexicographic order of (c_{m-1}, ..., c_0).
/// Throws InvalidArgument for m < 2, TooLarge when q^m exceeds the search
/// limit and NoneFound if no candidate is root-free.
std::vector<FieldElement> find_rootfree_monic(const FieldDescriptor& field, unsigned m);

/// Evaluates c_0 + c_1 a + ... by Horner's rule.
FieldElement evaluate_univariate(std::span<const FieldElement> coefficients, const FieldElement& at);

}  // namespace gelfand
