// Recursive-descent parser shared by element literals, field moduli and
// polynomial text.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | 'sqrt' '(' ['-'] integer ')' | '(' expr ')'

#include <cctype>
#include <functional>

#include "gelfand/poly.hpp"
#include "text_internal.hpp"

namespace gelfand {
namespace {

using VariableLookup = std::function<std::optional<std::size_t>(std::string_view)>;

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t begin, std::size_t end, FieldDescriptor field,
                   std::size_t arity, VariableLookup lookup)
      : text_(text), pos_(begin), end_(end), field_(std::move(field)), arity_(arity), lookup_(std::move(lookup)) {}

  MultiPoly parse_all() {
    MultiPoly out = expr();
    skip_ws();
    if (pos_ != end_) fail("operator or end of input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected, std::string(text_)); }

  void skip_ws() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < end_ ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc += -term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        MultiPoly divisor = unary();
        if (divisor.degree().value_or(0) != 0) {
          pos_ = at;
          fail("constant divisor");
        }
        acc = acc * divisor.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const Integer e = integer();
      if (e > 1'000'000) fail("exponent at most 1000000");
      return base.pow(static_cast<std::uint64_t>(e));
    }
    return base;
  }

  Integer integer() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("integer");
    return Integer(std::string(text_.substr(begin, pos_ - begin)));
  }

  MultiPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return MultiPoly::constant(arity_, field_.from_integer(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t begin = pos_;
      while (pos_ < end_ && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(begin, pos_ - begin);
      if (auto index = lookup_(name)) return MultiPoly::variable(field_, arity_, *index);
      if (field_.kind() == FieldKind::extension && name == "t") {
        return MultiPoly::constant(arity_, field_.generator());
      }
      if (field_.kind() == FieldKind::quadratic) {
        if (name == "i" && field_.radicand() == -1) return MultiPoly::constant(arity_, field_.generator());
        if (name == "sqrt") {
          if (!accept('(')) fail("'('");
          const bool negative = accept('-');
          skip_ws();
          const std::size_t at = pos_;
          Integer d = integer();
          if (negative) d = -d;
          if (d != field_.radicand()) {
            pos_ = at;
            fail("radicand " + std::to_string(field_.radicand()));
          }
          if (!accept(')')) fail("')'");
          return MultiPoly::constant(arity_, field_.generator());
        }
      }
      pos_ = begin;
      fail("variable or field constant");
    }
    fail("integer, variable or '('");
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
  FieldDescriptor field_;
  std::size_t arity_;
  VariableLookup lookup_;
};

VariableLookup indexed_variables(std::size_t arity) {
  return [arity](std::string_view name) -> std::optional<std::size_t> {
    if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return std::nullopt;
    std::size_t index = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      index = index * 10 + static_cast<std::size_t>(name[i] - '0');
      if (index > arity) return std::nullopt;
    }
    return index - 1;
  };
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const FieldDescriptor& field, std::size_t arity) {
  return ExpressionParser(text, 0, text.size(), field, arity, indexed_variables(arity)).parse_all();
}

MultiPoly parse_univariate(std::string_view text, const FieldDescriptor& field, std::string_view variable) {
  auto lookup = [variable](std::string_view name) -> std::optional<std::size_t> {
    if (name == variable || name == "x1") return 0;
    return std::nullopt;
  };
  return ExpressionParser(text, 0, text.size(), field, 1, lookup).parse_all();
}

namespace detail {

std::vector<FieldElement> parse_univariate(std::string_view text, std::size_t begin, std::size_t end,
                                           const FieldDescriptor& field, std::string_view variable) {
  auto lookup = [variable](std::string_view name) -> std::optional<std::size_t> {
    if (name == variable) return 0;
    return std::nullopt;
  };
  const MultiPoly f = ExpressionParser(text, begin, end, field, 1, lookup).parse_all();
  std::vector<FieldElement> coeffs;
  const std::uint64_t degree = f.degree().value_or(0);
  for (std::uint64_t i = 0; i <= degree; ++i) coeffs.push_back(f.coefficient(Monomial({static_cast<std::uint32_t>(i)})));
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

FieldElement parse_constant(std::string_view text, const FieldDescriptor& field) {
  auto none = [](std::string_view) -> std::optional<std::size_t> { return std::nullopt; };
  return ExpressionParser(text, 0, text.size(), field, 0, none).parse_all().constant_term();
}

std::string format_residue_poly(std::span<const std::int64_t> coefficients, std::string_view symbol) {
  std::string out;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const std::int64_t c = coefficients[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += symbol;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail
}  // namespace gelfand
