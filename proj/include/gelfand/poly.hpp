#pragma once

// Sparse multivariate polynomials over a FieldDescriptor.
//
// Terms live in a map keyed by exponent vectors under graded-lexicographic
// order, highest first, and zero coefficients are never stored. Text form is
// `x1^2 + x1*x2 + x2^2`; coefficients use the element syntax of the field and
// are parenthesized when they are compound, e.g. `(t+1)*x1`.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gelfand/field.hpp"

namespace gelfand {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}
  static Monomial one(std::size_t arity) { return Monomial(std::vector<std::uint32_t>(arity, 0)); }
  static Monomial variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
  std::uint64_t total_degree() const noexcept;
  bool is_constant() const noexcept { return total_degree() == 0; }

  Monomial operator*(const Monomial& rhs) const;
  bool operator==(const Monomial&) const = default;

  /// Renders with the given variable names; "1" for the constant monomial.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded-lex with the greater monomial first: higher total degree, then
/// lexicographically larger exponent vector (x1 > x2 > ...).
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, FieldElement, GrlexDescending>;

  /// The zero polynomial in `arity` variables.
  MultiPoly(FieldDescriptor field, std::size_t arity);

  static MultiPoly constant(std::size_t arity, const FieldElement& c);
  /// x_{index+1}; index is zero-based.
  static MultiPoly variable(const FieldDescriptor& field, std::size_t arity, std::size_t index);
  static MultiPoly term(const FieldElement& c, Monomial m);
  /// c_0 + c_1 x1 + ... + c_d x1^d. Requires a nonempty coefficient list.
  static MultiPoly univariate(std::span<const FieldElement> coefficients);

  /// Parses text in variables x1..x{arity} over `field`. Accepts any
  /// expression built from +, -, *, ^ (non-negative integer exponents),
  /// division by nonzero constants and parentheses.
  static MultiPoly parse(std::string_view text, const FieldDescriptor& field, std::size_t arity);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Maximum total degree; nullopt stands for the degree of the zero polynomial.
  std::optional<std::uint64_t> degree() const noexcept;
  /// True when every stored monomial has the same total degree (vacuous for zero).
  bool is_homogeneous() const noexcept;
  FieldElement coefficient(const Monomial& m) const;
  FieldElement constant_term() const;

  /// Term-wise exact evaluation with cached powers per variable.
  FieldElement evaluate(std::span<const FieldElement> point) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator*(const FieldElement& c) const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly pow(std::uint64_t exponent) const;

  /// The same polynomial viewed in `arity` >= arity() variables.
  MultiPoly extend_arity(std::size_t arity) const;

  bool operator==(const MultiPoly& rhs) const noexcept;

  /// Canonical text with variables x1..xn.
  std::string to_string() const;
  std::string to_string(std::span<const std::string> names) const;

 private:
  void require_compatible(const MultiPoly& rhs) const;
  void add_term(const Monomial& m, const FieldElement& c);

  FieldDescriptor field_;
  std::size_t arity_;
  TermMap terms_;
};

/// y^m f(x/y) for a monic univariate f of degree m >= 1: each term c x^i
/// becomes c x^i y^{m-i}. Throws ZeroPolynomial, NotMonic, ArityMismatch.
MultiPoly homogenize2(const MultiPoly& f);

/// g2(h(x1..xn), x_{n+1}) fully expanded. Throws ArityMismatch unless g2 is
/// bivariate, MixedFields if the fields differ.
MultiPoly compose_last(const MultiPoly& g2, const MultiPoly& h);

/// Parses a univariate polynomial written in `variable` (default "x") as an
/// arity-1 MultiPoly.
MultiPoly parse_univariate(std::string_view text, const FieldDescriptor& field, std::string_view variable = "x");

inline FieldElement constant_term(const MultiPoly& f) { return f.constant_term(); }

}  // namespace gelfand
