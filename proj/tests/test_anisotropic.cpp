#include <doctest.h>

#include "gelfand/anisotropic.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

std::vector<FieldElement> point(const FieldDescriptor& field, const std::vector<std::int64_t>& coords) {
  std::vector<FieldElement> out;
  for (const auto c : coords) out.push_back(field.from_integer(c));
  return out;
}

FieldElement gaussian(const FieldDescriptor& qi, const oracle::Gaussian& z) {
  return qi.from_rational(Rational(z.re.num, z.re.den)) + qi.from_rational(Rational(z.im.num, z.im.den)) * qi.generator();
}

}  // namespace

TEST_CASE("build_fn examples") {
  const auto q = FieldDescriptor::rationals();
  CHECK(build_fn(parse_univariate("x^2 + 1", q), 2) == MultiPoly::parse("x1^2 + x2^2", q, 2));

  const auto f2 = FieldDescriptor::prime(2);
  const auto f3 = build_fn(parse_univariate("x^2 + x + 1", f2), 3);
  CHECK(f3.degree() == 4u);
  CHECK(f3 == MultiPoly::parse("(x1^2 + x1*x2 + x2^2)^2 + (x1^2 + x1*x2 + x2^2)*x3 + x3^2", f2, 3));

  CHECK(build_fn(parse_univariate("x^2 + 1", q), 1) == MultiPoly::variable(q, 1, 0));
}

TEST_CASE("build_fn rejects a base with a root") {
  const auto f5 = FieldDescriptor::prime(5);
  try {
    (void)build_fn(parse_univariate("x^2 + 1", f5), 2);  // 2^2 + 1 = 0 mod 5
    FAIL("expected HasRoot");
  } catch (const HasRoot& e) {
    CHECK(e.root() == "2");
  }
  const auto q = FieldDescriptor::rationals();
  CHECK_THROWS_AS((void)build_fn(parse_univariate("x^2 - 4", q), 2), HasRoot);
  CHECK_THROWS_AS((void)build_fn(parse_univariate("x^2 + 1", q), 0), Error);
}

TEST_CASE("rational root test over Q") {
  const auto q = FieldDescriptor::rationals();
  CHECK(check_root_free(parse_univariate("x^2 - 2", q)) == RootFreeEvidence::rational_root_test);
  CHECK(check_root_free(parse_univariate("x^3 + x + 1", q)) == RootFreeEvidence::rational_root_test);
  CHECK_THROWS_AS(check_root_free(parse_univariate("x^3 - 1/8", q)), HasRoot);
}

TEST_CASE("exhaustive vanishing check") {
  const auto f2 = FieldDescriptor::prime(2);
  const auto ok = verify_vanishing_exhaustive(MultiPoly::parse("x1^2 + x1*x2 + x2^2", f2, 2), f2);
  CHECK(ok.status == VerificationStatus::exhaustive_passed);
  CHECK(ok.checked == 4);

  const auto bad = verify_vanishing_exhaustive(MultiPoly::parse("x1*x2", f2, 2), f2);
  CHECK(bad.status == VerificationStatus::failed);
  CHECK(bad.counterexample == point(f2, {0, 1}));

  const auto f3 = FieldDescriptor::prime(3);
  const auto cube = verify_vanishing_exhaustive(build_fn(parse_univariate("x^2 + 1", f3), 3), f3);
  CHECK(cube.status == VerificationStatus::exhaustive_passed);
  CHECK(cube.checked == 27);
}

TEST_CASE("a polynomial nonzero at the origin fails at the origin") {
  const auto f3 = FieldDescriptor::prime(3);
  const auto v = verify_vanishing_exhaustive(MultiPoly::parse("x1^2 + 1", f3, 1), f3);
  CHECK(v.status == VerificationStatus::failed);
  CHECK(v.counterexample == point(f3, {0}));
}

TEST_CASE("parallel workers report the same smallest counterexample") {
  const auto f5 = FieldDescriptor::prime(5);
  const auto g = MultiPoly::parse("x1*x2*x3 + x1^2*x3", f5, 3);
  const auto one = verify_vanishing_exhaustive(g, f5, 1);
  for (const unsigned workers : {2u, 3u, 8u}) {
    const auto many = verify_vanishing_exhaustive(g, f5, workers);
    CHECK(many.status == one.status);
    CHECK(many.counterexample == one.counterexample);
  }
  const auto good = build_fn(MultiPoly::univariate(find_rootfree_monic(f5, 2)), 3);
  CHECK(verify_vanishing_exhaustive(good, f5, 4).checked == 125);
}

TEST_CASE("exhaustive results agree with a brute-force zero count") {
  for (const std::int64_t p : {2, 3, 5}) {
    const auto field = FieldDescriptor::prime(p);
    const auto fn = build_fn(MultiPoly::univariate(find_rootfree_monic(field, 2)), 2);
    oracle::TermMap terms;
    for (const auto& [m, c] : fn.terms()) {
      terms[std::vector<unsigned>(m.exponents().begin(), m.exponents().end())] = static_cast<std::int64_t>(c.index());
    }
    std::size_t zeros = 0;
    for (const auto& pt : oracle::all_points(p, 2)) zeros += oracle::eval_mod_p(terms, pt, p) == 0;
    CHECK(zeros == 1);
  }
}

TEST_CASE("norm form examples") {
  const auto qi = FieldDescriptor::quadratic(-1);
  CHECK(norm_form_eval(std::vector{qi.zero(), qi.zero()}).is_zero());
  CHECK(norm_form_eval(std::vector{qi.one() + qi.generator(), qi.from_integer(2)}).rational_part() == 6);
  CHECK(norm_form_eval(std::vector{qi.generator()}).rational_part() == 1);
}

TEST_CASE("norm form is zero only at the zero tuple") {
  const auto qi = FieldDescriptor::quadratic(-1);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    std::vector<oracle::Gaussian> zs;
    for (int k = 0; k < 3; ++k) zs.push_back({oracle::random_fraction(rng), oracle::random_fraction(rng)});
    if (i % 10 == 0) zs = {{0, 0}, {0, 0}, {0, 0}};
    oracle::Fraction expected = 0;
    bool all_zero = true;
    std::vector<FieldElement> xs;
    for (const auto& z : zs) {
      expected = expected + oracle::gaussian_norm(z);
      all_zero = all_zero && z.re.num == 0 && z.im.num == 0;
      xs.push_back(gaussian(qi, z));
    }
    const auto value = norm_form_eval(xs);
    CHECK(value.rational_part() == Rational(expected.num, expected.den));
    CHECK(value.is_zero() == all_zero);
  }
}

TEST_CASE("valuation identity") {
  // The origin is the one expected zero: value 0, valuation +inf.
  const std::vector<std::pair<Rational, Rational>> origin = {{Rational(0), Rational(0)}};
  CHECK(valuation_identity_check(2, origin).passed());
  CHECK(padic_valuation(Rational(0), 2).is_infinite());
  CHECK_THROWS_AS((void)valuation_identity_check(4, origin), Error);

  std::mt19937_64 rng(41);
  for (const std::int64_t p : {2, 3, 5}) {
    std::vector<std::pair<Rational, Rational>> samples;
    for (int i = 0; i < 100; ++i) {
      const auto x = oracle::random_nonzero_fraction(rng);
      const auto y = oracle::random_nonzero_fraction(rng);
      samples.emplace_back(Rational(x.num, x.den), Rational(y.num, y.den));
      // v_p(x^2) is even and v_p(p y^2) is odd, so the minimum is attained once.
      const int vx = oracle::valuation(x, p);
      const int vy = oracle::valuation(y, p);
      const auto lhs = oracle::valuation(x * x - oracle::Fraction(p) * y * y, p);
      CHECK(lhs == std::min(2 * vx, 1 + 2 * vy));
    }
    const auto v = valuation_identity_check(p, samples);
    CHECK(v.status == VerificationStatus::valuation_passed);
    CHECK(v.checked == 100);
  }
}

TEST_CASE("sampled check catches a planted zero") {
  const auto q = FieldDescriptor::rationals();
  const auto g = MultiPoly::parse("x1^2 - x2^2", q, 2);
  const std::vector<std::vector<FieldElement>> samples = {point(q, {1, 2}), point(q, {3, 3}), point(q, {0, 0})};
  const auto v = verify_vanishing_sampled(g, samples);
  CHECK(v.status == VerificationStatus::failed);
  CHECK(v.counterexample == point(q, {3, 3}));
}
