// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cli.hpp"
#include "gelfand/anisotropic.hpp"
#include "gelfand/covers.hpp"
#include "gelfand/function_ring.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

FieldDescriptor field_of_order(std::int64_t q) {
  switch (q) {
    case 4: return FieldDescriptor::extension(2, 2);
    case 8: return FieldDescriptor::extension(2, 3);
    case 9: return FieldDescriptor::extension(3, 2);
    default: return FieldDescriptor::prime(q);
  }
}

std::uint64_t power(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

FieldElement gaussian(const FieldDescriptor& qi, const oracle::Gaussian& z) {
  return qi.from_rational(Rational(z.re.num, z.re.den)) + qi.from_rational(Rational(z.im.num, z.im.den)) * qi.generator();
}

std::vector<ImagePoint> all_points(const FieldDescriptor& field, std::size_t n) {
  std::vector<ImagePoint> out{{}};
  const auto elements = field.enumerate();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ImagePoint> next;
    for (const auto& prefix : out) {
      for (const auto& a : elements) {
        auto pt = prefix;
        pt.push_back(a);
        next.push_back(std::move(pt));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool is_origin(const ImagePoint& pt) {
  return std::all_of(pt.begin(), pt.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Outcome exhaustive_suite() {
  Outcome o;
  std::size_t instances = 0;
  for (const std::int64_t q : {2, 3, 4, 5, 7, 9}) {
    const auto field = field_of_order(q);
    const auto base = MultiPoly::univariate(find_rootfree_monic(field, 2));
    for (unsigned n = 1; n <= 3; ++n) {
      const auto start = std::chrono::steady_clock::now();
      const auto v = verify_vanishing_exhaustive(build_fn(base, n), field);
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      const std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      o.require(v.status == VerificationStatus::exhaustive_passed, tag + " did not pass");
      o.require(v.checked == power(static_cast<std::uint64_t>(q), n), tag + " checked the wrong number of points");
      o.require(ms < 1000.0, tag + " took " + std::to_string(ms) + " ms");
      ++instances;
    }
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances, up to 729 points each";
  return o;
}

Outcome degree_law() {
  Outcome o;
  const std::vector<FieldDescriptor> fields = {FieldDescriptor::prime(2), FieldDescriptor::prime(3),
                                               FieldDescriptor::prime(5), FieldDescriptor::extension(2, 2),
                                               FieldDescriptor::rationals()};
  std::size_t instances = 0;
  for (const auto& field : fields) {
    for (unsigned m = 2; m <= 3; ++m) {
      const MultiPoly base = field.is_finite() ? MultiPoly::univariate(find_rootfree_monic(field, m))
                             : m == 2          ? parse_univariate("x^2 + 1", field)
                                               : parse_univariate("x^3 - 2", field);
      for (unsigned n = 2; n <= 4; ++n) {
        const auto fn = build_fn(base, n);
        const std::string tag = field.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        o.require(fn.degree() == power(m, n - 1), tag + ": degree mismatch");
        o.require(fn.constant_term().is_zero(), tag + ": nonzero constant term");
        ++instances;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(instances) + " symbolic checks";
  return o;
}

Outcome gelfand_instances() {
  Outcome o;
  std::size_t instances = 0;
  for (const std::int64_t q : {2, 3, 4}) {
    const auto field = field_of_order(q);
    for (std::size_t n = 1; n <= 6; ++n) {
      const FiniteSpace space(n);
      const std::string tag = "q=" + std::to_string(q) + " |X|=" + std::to_string(n);
      const bool oracle = q == 2 && n <= 3;
      const auto report = check_homeomorphism(space, field, oracle);
      o.require(report.max_ideal_count == n, tag + ": wrong number of maximal ideals");
      o.require(report.bijective, tag + ": not a bijection");
      o.require(report.topology_match, tag + ": topology mismatch");

      // Discrete topology as a set system: every subset of X is closed.
      const auto spectrum = max_spectrum(space, field);
      std::set<PointSet> closed(spectrum.closed_sets.begin(), spectrum.closed_sets.end());
      std::set<PointSet> discrete;
      for (PointSet s = 0; s <= space.all_points(); ++s) discrete.insert(s);
      o.require(closed == discrete, tag + ": closed sets are not all subsets");

      if (oracle) {
        o.require(report.oracle_agrees == true, tag + ": oracle disagrees");
        const auto ideals = enumerate_ideals_bruteforce(space, field);
        const auto maximal = std::count_if(ideals.begin(), ideals.end(), [](const OracleIdeal& i) { return i.maximal; });
        o.require(ideals.size() == power(2, static_cast<unsigned>(n)), tag + ": oracle ideal count");
        o.require(static_cast<std::size_t>(maximal) == n, tag + ": oracle maximal count");
      }
      ++instances;
    }
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances, oracle on 3";
  return o;
}

Outcome case2_interpolation() {
  Outcome o;
  std::mt19937_64 rng(2024);
  const std::int64_t qs[] = {2, 3, 5};
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = qs[trial % 3];
    const std::size_t n = 1 + static_cast<std::size_t>((trial / 3) % 2);
    const auto field = FieldDescriptor::prime(q);
    const auto points = all_points(field, n);
    std::vector<ImagePoint> j;
    while (j.empty()) {
      for (const auto& pt : points) {
        if (!is_origin(pt) && rng() % 2 == 0) j.push_back(pt);
      }
    }
    const auto f = interpolate_case2(j, field);
    const std::string tag = "trial " + std::to_string(trial);
    o.require(f.constant_term().is_zero(), tag + ": constant term");
    for (const auto& pt : points) {
      const bool in_j = std::find(j.begin(), j.end(), pt) != j.end();
      const auto value = f.evaluate(pt);
      if (in_j) o.require(value == field.one(), tag + ": not 1 on J");
      if (is_origin(pt)) o.require(value.is_zero(), tag + ": nonzero at origin");
      if (!in_j) o.require(value.is_zero(), tag + ": nonzero off J");
    }
  }
  if (o.pass) o.detail = "50 seeded subsets";
  return o;
}

Outcome case3_avoidance() {
  Outcome o;
  std::mt19937_64 rng(77);
  const std::int64_t qs[] = {5, 7, 11};
  std::size_t steps = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto q = qs[trial % 3];
    const auto field = FieldDescriptor::prime(q);
    const auto size = static_cast<std::size_t>(oracle::draw(rng, 1, q - 1));
    const auto count = static_cast<std::size_t>(oracle::draw(rng, 1, 5));
    std::vector<std::vector<std::int64_t>> raw;
    for (;;) {
      raw.assign(count, std::vector<std::int64_t>(size));
      for (auto& f : raw) {
        for (auto& v : f) v = oracle::draw(rng, 0, q - 1);
      }
      bool covers = true;
      for (std::size_t x = 0; x < size; ++x) {
        covers = covers && std::any_of(raw.begin(), raw.end(), [&](const auto& f) { return f[x] != 0; });
      }
      if (covers) break;
    }
    std::vector<RingElement> functions;
    for (const auto& f : raw) {
      std::vector<FieldElement> values;
      for (const auto v : f) values.push_back(field.from_integer(v));
      functions.emplace_back(std::move(values));
    }
    const auto cert = unit_combination_case3(check_cover(functions));
    const std::string tag = "trial " + std::to_string(trial) + " q=" + std::to_string(q);
    o.require(certify(cert).pass, tag + ": certify failed");
    for (const auto& step : cert.steps) o.require(step.invariant_holds, tag + ": invariant broken");
    steps += cert.steps.size();
    for (std::size_t x = 0; x < size; ++x) {
      std::int64_t value = 0;
      for (std::size_t k = 0; k < count; ++k) {
        value = oracle::mod(value + static_cast<std::int64_t>(cert.coefficients[k].index()) * raw[k][x], q);
      }
      o.require(value != 0, tag + ": combination vanishes at point " + std::to_string(x));
    }
  }
  if (o.pass) o.detail = "50 seeded covers, " + std::to_string(steps) + " replacement steps";
  return o;
}

Outcome gaussian_norms() {
  Outcome o;
  const auto qi = FieldDescriptor::quadratic(-1);
  std::mt19937_64 rng(606);
  std::size_t zero_tuples = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::draw(rng, 1, 4));
    std::vector<FieldElement> xs;
    bool all_zero = true;
    oracle::Fraction expected = 0;
    for (std::size_t k = 0; k < n; ++k) {
      oracle::Gaussian z{oracle::random_fraction(rng), oracle::random_fraction(rng)};
      if (trial % 8 == 0 || rng() % 5 == 0) z = {0, 0};
      all_zero = all_zero && z.re.num == 0 && z.im.num == 0;
      expected = expected + oracle::gaussian_norm(z);
      xs.push_back(gaussian(qi, z));
    }
    zero_tuples += all_zero;
    const auto value = norm_form_eval(xs);
    o.require(value.is_zero() == all_zero, "norm form zero-ness at tuple " + std::to_string(trial));
    o.require(value.rational_part() == Rational(expected.num, expected.den), "norm form value at tuple " + std::to_string(trial));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const oracle::Gaussian a{oracle::random_fraction(rng), oracle::random_fraction(rng)};
    const oracle::Gaussian b{oracle::random_fraction(rng), oracle::random_fraction(rng)};
    const auto x = gaussian(qi, a);
    const auto y = gaussian(qi, b);
    o.require(norm(x * y) == norm(x) * norm(y), "multiplicativity at pair " + std::to_string(trial));
    const auto expected = oracle::gaussian_norm(oracle::mul(a, b));
    o.require(norm(x * y).rational_part() == Rational(expected.num, expected.den), "oracle norm at pair " + std::to_string(trial));
  }
  if (o.pass) o.detail = "200 tuples (" + std::to_string(zero_tuples) + " zero), 200 pairs";
  return o;
}

Outcome valuation_identity() {
  Outcome o;
  std::mt19937_64 rng(8080);
  for (const std::int64_t p : {2, 3, 5}) {
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = oracle::random_nonzero_fraction(rng);
      const auto y = oracle::random_nonzero_fraction(rng);
      pairs.emplace_back(Rational(x.num, x.den), Rational(y.num, y.den));
      const auto value = x * x - oracle::Fraction(p) * y * y;
      const int expected = std::min(2 * oracle::valuation(x, p), 1 + 2 * oracle::valuation(y, p));
      o.require(value.num != 0, "x^2 - p*y^2 vanished");
      o.require(oracle::valuation(value, p) == expected, "oracle identity failed for p=" + std::to_string(p));
    }
    const auto v = valuation_identity_check(p, pairs);
    o.require(v.status == VerificationStatus::valuation_passed && v.checked == 200,
              "library check failed for p=" + std::to_string(p));
  }
  if (o.pass) o.detail = "3 primes x 200 pairs";
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"anisotropic", "--field", "Fp(3)", "--m", "2", "--n", "1..3", "--workers", "4"},
      {"anisotropic", "--field", "Q", "--p", "3", "--n", "2..3", "--seed", "12"},
      {"anisotropic", "--field", "Q(sqrt(-1))", "--n", "1..3", "--seed", "5"},
      {"gelfand", "--field", "Fp(2),Fp(3)", "--space", "1..5"},
      {"gelfand", "--field", "Fp(2)", "--space", "3", "--oracle"},
      {"cover", "--field", "Fq(3,2)", "--random", "3", "--space", "5", "--seed", "21", "--case", "all"},
      {"cover", "--field", "Fp(7)", "--random", "4", "--space", "6", "--seed", "3", "--case", "3"},
      {"field", "find-rootfree", "--field", "Fq(2,3)", "--m", "3"},
  };
  auto report = [](const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    auto json = nlohmann::ordered_json::parse(out.str());
    json.erase("wall_time_ms");
    return json.dump();
  };
  for (const auto& args : commands) {
    int first_code = -1;
    int second_code = -1;
    const auto first = report(args, first_code);
    const auto second = report(args, second_code);
    o.require(first == second && first_code == second_code, "reports differ for " + args.front());
    o.require(first_code == cli::exit_ok, args.front() + " exited with " + std::to_string(first_code));
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands run twice";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exhaustive zero-set suite", exhaustive_suite},
      {"degree law and zero constant term", degree_law},
      {"Gelfand correspondence on finite discrete spaces", gelfand_instances},
      {"interpolation on random subsets", case2_interpolation},
      {"projective avoidance on random covers", case3_avoidance},
      {"norm form over Q(i)", gaussian_norms},
      {"valuation identity", valuation_identity},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu: %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
