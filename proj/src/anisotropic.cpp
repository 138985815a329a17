#include "gelfand/anisotropic.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace gelfand {

const char* evidence_name(RootFreeEvidence evidence) noexcept {
  switch (evidence) {
    case RootFreeEvidence::exhaustive: return "exhaustive";
    case RootFreeEvidence::rational_root_test: return "rational-root-test";
  }
  return "unknown";
}

const char* status_name(VerificationStatus status) noexcept {
  switch (status) {
    case VerificationStatus::exhaustive_passed: return "exhaustive";
    case VerificationStatus::valuation_passed: return "valuation";
    case VerificationStatus::sampled_passed: return "sampled";
    case VerificationStatus::failed: return "failed";
  }
  return "unknown";
}

namespace {

constexpr std::int64_t rational_root_coefficient_limit = 1'000'000'000'000;

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> small, large;
  const Integer m = n < 0 ? Integer(-n) : n;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d * d != m) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void check_root_free_rational(const MultiPoly& f, const std::vector<FieldElement>& coeffs) {
  Integer lcm = 1;
  for (const auto& c : coeffs) {
    const Integer den = denominator(c.rational_part());
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<Integer> ints;
  for (const auto& c : coeffs) ints.push_back(Integer(numerator(c.rational_part()) * (lcm / denominator(c.rational_part()))));
  if (ints.front() == 0) throw HasRoot("0");
  const Integer bound(rational_root_coefficient_limit);
  if (abs(ints.front()) > bound || abs(ints.back()) > bound) {
    throw Error(ErrorCode::too_large, "rational root test needs |constant| and |leading| <= 10^12");
  }
  const auto& field = f.field();
  for (const auto& r : positive_divisors(ints.front())) {
    for (const auto& s : positive_divisors(ints.back())) {
      for (const int sign : {1, -1}) {
        const FieldElement candidate = field.from_rational(Rational(sign * r, s));
        if (evaluate_univariate(coeffs, candidate).is_zero()) throw HasRoot(candidate.to_string());
      }
    }
  }
}

}  // namespace

RootFreeEvidence check_root_free(const MultiPoly& f) {
  if (f.arity() != 1) throw Error(ErrorCode::arity_mismatch, "base polynomial must be univariate");
  if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "base polynomial is zero");
  const auto m = *f.degree();
  if (m < 2) throw Error(ErrorCode::invalid_argument, "base polynomial must have degree >= 2");
  if (!f.terms().begin()->second.is_one()) throw Error(ErrorCode::not_monic, f.to_string() + " is not monic");

  std::vector<FieldElement> coeffs;
  for (std::uint64_t i = 0; i <= m; ++i) coeffs.push_back(f.coefficient(Monomial({static_cast<std::uint32_t>(i)})));

  switch (f.field().kind()) {
    case FieldKind::prime:
    case FieldKind::extension:
      for (const auto& a : f.field().enumerate()) {
        if (evaluate_univariate(coeffs, a).is_zero()) throw HasRoot(a.to_string());
      }
      return RootFreeEvidence::exhaustive;
    case FieldKind::rational:
      check_root_free_rational(f, coeffs);
      return RootFreeEvidence::rational_root_test;
    case FieldKind::quadratic:
      break;
  }
  throw Error(ErrorCode::wrong_kind, "root-free bases over " + f.field().to_string() +
                                         " are not supported; use the norm form");
}

MultiPoly build_fn(const MultiPoly& f, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "arity must be >= 1");
  check_root_free(f);
  if (n == 1) return MultiPoly::variable(f.field(), 1, 0);
  const MultiPoly f2 = homogenize2(f);
  MultiPoly fk = f2;
  for (std::size_t k = 2; k < n; ++k) fk = compose_last(f2, fk);
  return fk;
}

Verification verify_vanishing_exhaustive(const MultiPoly& g, const FieldDescriptor& field, unsigned workers) {
  if (!(g.field() == field)) throw Error(ErrorCode::mixed_fields, "polynomial is not over " + field.to_string());
  const std::uint64_t q = field.order();
  const std::size_t n = g.arity();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > exhaustive_point_limit / q) throw Error(ErrorCode::too_large, "q^n exceeds the enumeration guard");
    total *= q;
  }
  const auto elements = field.enumerate();

  // Index -> point with the first coordinate most significant, so index order
  // is lexicographic order on points.
  auto point_at = [&](std::uint64_t index) {
    std::vector<FieldElement> pt(n, field.zero());
    for (std::size_t i = n; i-- > 0;) {
      pt[i] = elements[index % q];
      index /= q;
    }
    return pt;
  };
  auto offends = [&](std::uint64_t index) {
    const bool zero = g.evaluate(point_at(index)).is_zero();
    return index == 0 ? !zero : zero;
  };
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  auto first_offender = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (offends(i)) return i;
    }
    return none;
  };

  const std::uint64_t chunks = std::clamp<std::uint64_t>(workers, 1, total);
  std::vector<std::uint64_t> found(chunks, none);
  if (chunks == 1) {
    found[0] = first_offender(0, total);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < chunks; ++w) {
      threads.emplace_back([&, w] { found[w] = first_offender(total * w / chunks, total * (w + 1) / chunks); });
    }
    for (auto& t : threads) t.join();
  }
  const std::uint64_t smallest = *std::min_element(found.begin(), found.end());
  if (smallest == none) return {VerificationStatus::exhaustive_passed, total, {}};
  return {VerificationStatus::failed, total, point_at(smallest)};
}

Verification verify_vanishing_sampled(const MultiPoly& g, std::span<const std::vector<FieldElement>> samples) {
  const std::vector<FieldElement> origin(g.arity(), g.field().zero());
  if (!g.evaluate(origin).is_zero()) return {VerificationStatus::failed, 0, origin};
  std::uint64_t checked = 0;
  for (const auto& pt : samples) {
    if (std::all_of(pt.begin(), pt.end(), [](const FieldElement& x) { return x.is_zero(); })) continue;
    ++checked;
    if (g.evaluate(pt).is_zero()) return {VerificationStatus::failed, checked, pt};
  }
  return {VerificationStatus::sampled_passed, checked, {}};
}

FieldElement norm_form_eval(std::span<const FieldElement> points) {
  FieldElement acc = FieldDescriptor::rationals().zero();
  for (const auto& x : points) {
    if (!(x.field() == points.front().field())) throw Error(ErrorCode::mixed_fields, "norm form over mixed fields");
    acc += norm(x);
  }
  return acc;
}

Verification valuation_identity_check(std::int64_t p, std::span<const std::pair<Rational, Rational>> samples) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  const auto Q = FieldDescriptor::rationals();
  std::uint64_t checked = 0;
  for (const auto& [x, y] : samples) {
    ++checked;
    const Rational value = x * x - Rational(p) * y * y;
    bool ok = false;
    if (x == 0 && y == 0) {
      ok = value == 0;
    } else {
      const Valuation vx = padic_valuation(x, p);
      const Valuation vy = padic_valuation(y, p);
      const Valuation lhs = padic_valuation(value, p);
      const Valuation rhs = std::min(vx + vx, Valuation::finite(1) + vy + vy);
      ok = !lhs.is_infinite() && lhs == rhs;
    }
    if (!ok) return {VerificationStatus::failed, checked, {Q.from_rational(x), Q.from_rational(y)}};
  }
  return {VerificationStatus::valuation_passed, checked, {}};
}

}  // namespace gelfand
