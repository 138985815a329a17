#include "gelfand/poly.hpp"

#include <algorithm>
#include <numeric>

namespace gelfand {

Monomial Monomial::variable(std::size_t arity, std::size_t index) {
  std::vector<std::uint32_t> exps(arity, 0);
  exps.at(index) = 1;
  return Monomial(std::move(exps));
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  std::vector<std::uint32_t> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += rhs.exponents_[i];
  return Monomial(std::move(exps));
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(FieldDescriptor field, std::size_t arity) : field_(std::move(field)), arity_(arity) {}

MultiPoly MultiPoly::constant(std::size_t arity, const FieldElement& c) {
  MultiPoly out(c.field(), arity);
  out.add_term(Monomial::one(arity), c);
  return out;
}

MultiPoly MultiPoly::variable(const FieldDescriptor& field, std::size_t arity, std::size_t index) {
  if (index >= arity) throw Error(ErrorCode::arity_mismatch, "variable index out of range");
  MultiPoly out(field, arity);
  out.add_term(Monomial::variable(arity, index), field.one());
  return out;
}

MultiPoly MultiPoly::term(const FieldElement& c, Monomial m) {
  MultiPoly out(c.field(), m.arity());
  out.add_term(m, c);
  return out;
}

MultiPoly MultiPoly::univariate(std::span<const FieldElement> coefficients) {
  if (coefficients.empty()) throw Error(ErrorCode::invalid_argument, "empty coefficient list");
  MultiPoly out(coefficients.front().field(), 1);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!(coefficients[i].field() == out.field_)) throw Error(ErrorCode::mixed_fields, "coefficients of mixed fields");
    out.add_term(Monomial({static_cast<std::uint32_t>(i)}), coefficients[i]);
  }
  return out;
}

void MultiPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_compatible(const MultiPoly& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw Error(ErrorCode::mixed_fields, "polynomials over " + field_.to_string() + " and " + rhs.field_.to_string());
  }
  if (arity_ != rhs.arity_) {
    throw Error(ErrorCode::arity_mismatch, "polynomials in " + std::to_string(arity_) + " and " +
                                               std::to_string(rhs.arity_) + " variables");
  }
}

std::optional<std::uint64_t> MultiPoly::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  // Graded order puts the highest total degree first.
  return terms_.begin()->first.total_degree();
}

bool MultiPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.total_degree() == d; });
}

FieldElement MultiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

FieldElement MultiPoly::constant_term() const { return coefficient(Monomial::one(arity_)); }

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != arity_) {
    throw Error(ErrorCode::arity_mismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                               std::to_string(arity_) + " variables");
  }
  for (const auto& x : point) {
    if (!(x.field() == field_)) throw Error(ErrorCode::mixed_fields, "point coordinate outside " + field_.to_string());
  }
  std::vector<std::uint32_t> max_exp(arity_, 0);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  }
  std::vector<std::vector<FieldElement>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    powers[i].reserve(max_exp[i] + 1);
    powers[i].push_back(field_.one());
    for (std::uint32_t e = 1; e <= max_exp[i]; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  FieldElement acc = field_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElement value = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] != 0) value *= powers[i][m[i]];
    }
    acc += value;
  }
  return acc;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_, arity_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly out(*this);
  out += rhs;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  require_compatible(rhs);
  MultiPoly out(field_, arity_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly MultiPoly::operator*(const FieldElement& c) const {
  if (!(c.field() == field_)) throw Error(ErrorCode::mixed_fields, "scalar outside " + field_.to_string());
  MultiPoly out(field_, arity_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
  return out;
}

MultiPoly MultiPoly::pow(std::uint64_t exponent) const {
  MultiPoly result = constant(arity_, field_.one());
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::extend_arity(std::size_t arity) const {
  if (arity < arity_) throw Error(ErrorCode::arity_mismatch, "cannot shrink arity");
  MultiPoly out(field_, arity);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
    exps.resize(arity, 0);
    out.terms_.emplace(Monomial(std::move(exps)), c);
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const noexcept {
  return field_ == rhs.field_ && arity_ == rhs.arity_ && terms_ == rhs.terms_;
}

std::string MultiPoly::to_string() const {
  std::vector<std::string> names;
  names.reserve(arity_);
  for (std::size_t i = 0; i < arity_; ++i) names.push_back("x" + std::to_string(i + 1));
  return to_string(names);
}

namespace {

// A coefficient needs parentheses when it has a top-level + or - past its first character.
bool is_compound(std::string_view text) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && i > 0 && (text[i] == '+' || text[i] == '-')) return true;
  }
  return false;
}

}  // namespace

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (names.size() != arity_) throw Error(ErrorCode::arity_mismatch, "wrong number of variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = false;
    if (is_compound(coeff)) {
      coeff = "(" + coeff + ")";
    } else if (coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    std::string body;
    if (m.is_constant()) {
      body = coeff;
    } else if (coeff == "1") {
      body = m.to_string(names);
    } else {
      body = coeff + "*" + m.to_string(names);
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

MultiPoly homogenize2(const MultiPoly& f) {
  if (f.arity() != 1) throw Error(ErrorCode::arity_mismatch, "homogenize2 expects a univariate polynomial");
  if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "cannot homogenize the zero polynomial");
  const auto m = *f.degree();
  if (m < 1) throw Error(ErrorCode::invalid_argument, "homogenize2 expects degree >= 1");
  if (!f.terms().begin()->second.is_one()) throw Error(ErrorCode::not_monic, f.to_string() + " is not monic");
  MultiPoly out(f.field(), 2);
  for (const auto& [mono, c] : f.terms()) {
    const auto i = mono[0];
    out += MultiPoly::term(c, Monomial({i, static_cast<std::uint32_t>(m - i)}));
  }
  return out;
}

MultiPoly compose_last(const MultiPoly& g2, const MultiPoly& h) {
  if (g2.arity() != 2) throw Error(ErrorCode::arity_mismatch, "compose_last expects a bivariate outer polynomial");
  if (!(g2.field() == h.field())) {
    throw Error(ErrorCode::mixed_fields, "compose_last over " + g2.field().to_string() + " and " + h.field().to_string());
  }
  const std::size_t n = h.arity();
  const MultiPoly inner = h.extend_arity(n + 1);
  const MultiPoly last = MultiPoly::variable(h.field(), n + 1, n);

  std::vector<MultiPoly> inner_powers{MultiPoly::constant(n + 1, h.field().one())};
  std::vector<MultiPoly> last_powers{MultiPoly::constant(n + 1, h.field().one())};
  MultiPoly out(h.field(), n + 1);
  for (const auto& [mono, c] : g2.terms()) {
    while (inner_powers.size() <= mono[0]) inner_powers.push_back(inner_powers.back() * inner);
    while (last_powers.size() <= mono[1]) last_powers.push_back(last_powers.back() * last);
    out += (inner_powers[mono[0]] * last_powers[mono[1]]) * c;
  }
  return out;
}

}  // namespace gelfand
