#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <istream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "gelfand/anisotropic.hpp"
#include "gelfand/covers.hpp"
#include "report.hpp"

namespace gelfand::cli {

using report::Json;

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (const char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == separator && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::vector<std::uint64_t> parse_range(std::string_view text) {
  auto number = [&](std::string_view part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos || part.size() > 9) {
      throw Error(ErrorCode::invalid_argument, "expected a non-negative integer or range, got \"" + std::string(text) + "\"");
    }
    return std::stoull(std::string(part));
  };
  std::vector<std::uint64_t> out;
  for (const auto& part : split_top_level(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(part));
      continue;
    }
    const auto lo = number(std::string_view(part).substr(0, dots));
    const auto hi = number(std::string_view(part).substr(dots + 2));
    if (hi < lo) throw Error(ErrorCode::invalid_argument, "empty range \"" + part + "\"");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<RingElement> parse_functions(std::istream& in, const FieldDescriptor& field) {
  std::vector<RingElement> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<FieldElement> values;
    try {
      for (const auto& literal : split_top_level(line, ',')) values.push_back(field.parse_element(literal));
    } catch (const Error& e) {
      throw Error(e.code(), "functions file line " + std::to_string(line_number) + ": " + e.what());
    }
    out.emplace_back(std::move(values));
  }
  return out;
}

namespace {

struct RunConfig {
  std::string command;
  std::string field = "Fp(2)";
  std::string space = "3";
  std::string arity = "2";
  std::uint64_t degree = 2;
  std::uint64_t prime = 0;
  std::string witness;
  std::string base;
  std::string functions_path;
  std::uint64_t random_functions = 0;
  std::string which_case = "all";
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool oracle = false;
  std::string out_path;
};

struct Tally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  bool input_error = false;

  void record(bool pass) { pass ? ++passed : ++failed; }
  int exit_code() const { return input_error ? exit_input_error : failed > 0 ? exit_verification_failed : exit_ok; }
};

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational random_rational(std::mt19937_64& rng) { return Rational(draw(rng, -20, 20), draw(rng, 1, 9)); }

FieldElement random_element(std::mt19937_64& rng, const FieldDescriptor& field) {
  switch (field.kind()) {
    case FieldKind::prime:
    case FieldKind::extension:
      return field.element_at(rng() % field.order());
    case FieldKind::rational: return field.from_rational(random_rational(rng));
    case FieldKind::quadratic: {
      const Rational a = random_rational(rng);
      const Rational b = random_rational(rng);
      return field.from_rational(a) + field.from_rational(b) * field.generator();
    }
  }
  return field.zero();
}

Json error_json(const Error& e) {
  Json out;
  out["error"] = error_name(e.code());
  out["message"] = e.what();
  if (const auto* common = dynamic_cast<const CommonZero*>(&e)) out["point"] = common->point();
  if (const auto* root = dynamic_cast<const HasRoot*>(&e)) out["root"] = root->root();
  if (const auto* exhausted = dynamic_cast<const AvoidanceExhausted*>(&e)) {
    out["step"] = exhausted->step();
    out["suggestion"] = "CaseII";
  }
  if (const auto* parse = dynamic_cast<const ParseError*>(&e)) {
    out["position"] = parse->position();
    out["expected"] = parse->expected();
  }
  return out;
}

// Returns the x^2 - p witness's prime, if the base has that shape.
std::optional<std::int64_t> valuation_prime(const MultiPoly& base) {
  if (base.term_count() != 2 || base.degree() != 2u) return std::nullopt;
  if (!base.coefficient(Monomial({1})).is_zero()) return std::nullopt;
  const Rational c = base.constant_term().rational_part();
  if (c >= 0 || denominator(c) != 1 || -c > FieldDescriptor::max_characteristic) return std::nullopt;
  const auto p = static_cast<std::int64_t>(Integer(-numerator(c)));
  return is_prime(p) ? std::optional(p) : std::nullopt;
}

// x^2 + c with c > 0 over Q: every f_n is a positive combination of even powers.
bool positive_definite(const MultiPoly& base) {
  if (base.degree() != 2u || !base.coefficient(Monomial({1})).is_zero()) return false;
  if (base.coefficient(Monomial({2})) != base.field().one()) return false;
  return base.constant_term().rational_part() > 0;
}

// ---------------------------------------------------------------------------

void cmd_anisotropic(const RunConfig& config, Json& instances, Tally& tally) {
  const auto field = FieldDescriptor::parse(config.field);
  const auto arities = parse_range(config.arity);
  for (const auto n : arities) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "arity guard violated: n >= 1");
  }

  if (field.kind() == FieldKind::quadratic) {
    std::mt19937_64 rng(config.seed);
    for (const auto n : arities) {
      Json instance;
      std::string form;
      for (std::uint64_t i = 1; i <= n; ++i) {
        if (i > 1) form += " + ";
        form += "x" + std::to_string(i) + "*conj(x" + std::to_string(i) + ")";
      }
      instance["base"] = "norm form";
      instance["arity"] = n;
      instance["form"] = form;
      instance["degree"] = 2;
      Verification v{VerificationStatus::sampled_passed, 0, {}};
      const std::vector<FieldElement> origin(n, field.zero());
      if (!norm_form_eval(origin).is_zero()) v = {VerificationStatus::failed, 0, origin};
      for (std::uint64_t s = 0; v.passed() && s < config.samples; ++s) {
        std::vector<FieldElement> pt;
        for (std::uint64_t i = 0; i < n; ++i) pt.push_back(random_element(rng, field));
        const bool nonzero_point = std::any_of(pt.begin(), pt.end(), [](const FieldElement& x) { return !x.is_zero(); });
        if (!nonzero_point) continue;
        ++v.checked;
        if (norm_form_eval(pt).is_zero()) v = {VerificationStatus::failed, v.checked, pt};
      }
      instance["verification"] = report::to_json(v);
      instance["verification"]["note"] = "positive-definite norm form (d < 0)";
      instance["pass"] = v.passed();
      tally.record(v.passed());
      instances.push_back(std::move(instance));
    }
    return;
  }

  if (field.is_finite() && config.witness.empty() && config.degree < 2) {
    throw Error(ErrorCode::invalid_argument, "degree guard violated: m >= 2 (every monic linear polynomial has a root)");
  }
  MultiPoly base = [&] {
    if (!config.witness.empty()) return parse_univariate(config.witness, field);
    if (config.prime != 0) {
      if (field.kind() != FieldKind::rational) throw Error(ErrorCode::wrong_kind, "--p applies to Q only");
      if (!is_prime(static_cast<std::int64_t>(config.prime))) {
        throw Error(ErrorCode::invalid_argument, "prime guard violated: --p must be prime");
      }
      return parse_univariate("x^2-" + std::to_string(config.prime), field);
    }
    if (field.is_finite()) {
      const auto coeffs = find_rootfree_monic(field, static_cast<unsigned>(config.degree));
      return MultiPoly::univariate(coeffs);
    }
    return parse_univariate("x^2+1", field);
  }();
  const RootFreeEvidence evidence = check_root_free(base);

  for (const auto n : arities) {
    AnisotropicWitness witness{base, n, build_fn(base, n), {}};
    Json extra;
    if (field.is_finite()) {
      witness.verification = verify_vanishing_exhaustive(witness.form, field, config.workers);
    } else {
      std::mt19937_64 rng(config.seed);
      std::vector<std::vector<FieldElement>> samples;
      for (std::uint64_t s = 0; s < config.samples; ++s) {
        std::vector<FieldElement> pt;
        for (std::uint64_t i = 0; i < n; ++i) pt.push_back(random_element(rng, field));
        samples.push_back(std::move(pt));
      }
      witness.verification = verify_vanishing_sampled(witness.form, samples);
      const auto p = valuation_prime(base);
      if (witness.verification.passed() && p && n >= 2) {
        // f_n = f_2(f_{n-1}, x_n): certify each sample through the pair (f_{n-1}(x'), x_n).
        const MultiPoly inner = build_fn(base, n - 1);
        std::vector<std::pair<Rational, Rational>> pairs;
        for (const auto& pt : samples) {
          const auto head = std::span<const FieldElement>(pt).first(n - 1);
          pairs.emplace_back(inner.evaluate(head).rational_part(), pt.back().rational_part());
        }
        witness.verification = valuation_identity_check(*p, pairs);
        extra["prime"] = *p;
      }
      if (positive_definite(base)) extra["note"] = "positive-definite: f_n > 0 away from the origin";
      extra["seed"] = config.seed;
    }
    Json instance = report::to_json(witness);
    instance["verification"]["root_free_evidence"] = evidence_name(evidence);
    for (auto& [key, value] : extra.items()) instance["verification"][key] = value;
    instance["pass"] = witness.verification.passed();
    tally.record(witness.verification.passed());
    instances.push_back(std::move(instance));
  }
}

void cmd_gelfand(const RunConfig& config, Json& instances, Tally& tally) {
  std::vector<FieldDescriptor> fields;
  for (const auto& text : split_top_level(config.field, ',')) fields.push_back(FieldDescriptor::parse(text));
  const auto sizes = parse_range(config.space);
  for (const auto& field : fields) {
    if (!field.is_finite()) throw Error(ErrorCode::infinite_field, "gelfand needs a finite field, got " + field.to_string());
  }
  for (const auto& field : fields) {
    for (const auto size : sizes) {
      const auto result = check_homeomorphism(FiniteSpace(size), field, config.oracle);
      tally.record(result.passed());
      instances.push_back(report::to_json(result));
    }
  }
}

std::vector<RingElement> random_cover_functions(const RunConfig& config, const FieldDescriptor& field) {
  const auto sizes = parse_range(config.space);
  if (sizes.size() != 1) throw Error(ErrorCode::invalid_argument, "--space must be a single size for random covers");
  const FiniteSpace space(sizes.front());
  std::mt19937_64 rng(config.seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<RingElement> functions;
    for (std::uint64_t k = 0; k < config.random_functions; ++k) {
      std::vector<FieldElement> values;
      for (std::size_t x = 0; x < space.size(); ++x) values.push_back(random_element(rng, field));
      functions.emplace_back(std::move(values));
    }
    PointSet covered = 0;
    for (const auto& f : functions) covered |= f.support();
    if (covered == space.all_points()) return functions;
  }
  throw Error(ErrorCode::none_found, "no random cover found after 1000 attempts");
}

void cmd_cover(const RunConfig& config, Json& instances, Tally& tally, Json& root) {
  const auto field = FieldDescriptor::parse(config.field);
  std::vector<RingElement> functions;
  if (!config.functions_path.empty()) {
    std::ifstream in(config.functions_path);
    if (!in) throw Error(ErrorCode::invalid_argument, "cannot open " + config.functions_path);
    functions = parse_functions(in, field);
  } else if (config.random_functions > 0) {
    functions = random_cover_functions(config, field);
  } else {
    throw Error(ErrorCode::invalid_argument, "cover needs --functions FILE or --random K");
  }

  const Cover cover = check_cover(std::move(functions));
  Json listed = Json::array();
  for (const auto& f : cover.functions()) listed.push_back(f.to_string());
  root["functions"] = std::move(listed);

  const bool all = config.which_case == "all";
  auto wanted = [&](const char* c) { return all || config.which_case == c; };
  if (!all && config.which_case != "1" && config.which_case != "2" && config.which_case != "3") {
    throw Error(ErrorCode::invalid_argument, "--case must be 1, 2, 3 or all");
  }

  auto emit = [&](const CombinationCertificate& cert) {
    const auto result = certify(cert);
    tally.record(result.pass);
    instances.push_back(report::to_json(cert, result));
  };
  auto skip = [&](const char* mode, const Error& e) {
    Json entry = error_json(e);
    entry["mode"] = mode;
    entry["skipped"] = true;
    instances.push_back(std::move(entry));
  };

  if (wanted("1")) {
    if (field.kind() == FieldKind::quadratic) {
      emit(combine_case1_norm(cover));
    } else {
      MultiPoly base = !config.base.empty() ? parse_univariate(config.base, field)
                       : field.is_finite()  ? MultiPoly::univariate(find_rootfree_monic(field, 2))
                                            : parse_univariate("x^2+1", field);
      emit(combine_case1(cover, base));
    }
  }
  if (wanted("2")) {
    if (field.is_finite()) {
      emit(combine_case2(cover));
    } else if (!all) {
      throw Error(ErrorCode::infinite_field, "interpolation needs a finite field");
    }
  }
  if (wanted("3")) {
    if (!field.is_finite()) {
      if (!all) throw Error(ErrorCode::infinite_field, "projective avoidance is implemented for finite fields");
    } else {
      try {
        emit(unit_combination_case3(cover));
      } catch (const AvoidanceExhausted& e) {
        if (!all) throw;
        skip("CaseIII", e);
      }
    }
  }
}

void cmd_find_rootfree(const RunConfig& config, Json& instances, Tally& tally) {
  const auto field = FieldDescriptor::parse(config.field);
  const auto coeffs = find_rootfree_monic(field, static_cast<unsigned>(config.degree));
  Json instance;
  instance["field"] = field.to_string();
  instance["degree"] = config.degree;
  instance["polynomial"] = MultiPoly::univariate(coeffs).to_string(std::vector<std::string>{"x"});
  Json list = Json::array();
  for (const auto& c : coeffs) list.push_back(c.to_string());
  instance["coefficients"] = std::move(list);
  tally.record(true);
  instances.push_back(std::move(instance));
}

Json config_echo(const RunConfig& c) {
  Json out;
  out["command"] = c.command;
  out["field"] = c.field;
  if (c.command == "anisotropic") {
    out["m"] = c.degree;
    out["n"] = c.arity;
    out["witness"] = c.witness;
    out["p"] = c.prime;
    out["samples"] = c.samples;
    out["seed"] = c.seed;
    out["workers"] = c.workers;
  } else if (c.command == "gelfand") {
    out["space"] = c.space;
    out["oracle"] = c.oracle;
  } else if (c.command == "cover") {
    out["case"] = c.which_case;
    out["functions"] = c.functions_path;
    out["random"] = c.random_functions;
    out["space"] = c.space;
    out["seed"] = c.seed;
    out["base"] = c.base;
  } else {
    out["m"] = c.degree;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact computations around the Gelfand correspondence for finite instances", "gelfand-cli"};
  app.require_subcommand(1);

  auto* anisotropic = app.add_subcommand("anisotropic", "Build f_n from a root-free base and verify its zero set");
  anisotropic->add_option("--field", config.field, "Field, e.g. Fp(3), Fq(2,2), Q, Q(sqrt(-1))")->required();
  anisotropic->add_option("--m", config.degree, "Degree of the auto-found root-free base");
  anisotropic->add_option("--n", config.arity, "Arity n, a list or a range a..b");
  anisotropic->add_option("--witness", config.witness, "Root-free base polynomial in x");
  anisotropic->add_option("--p", config.prime, "Over Q: use x^2 - p and certify by p-adic valuation");
  anisotropic->add_option("--samples", config.samples, "Sample count over infinite fields");
  anisotropic->add_option("--seed", config.seed, "Seed for sampled checks");
  anisotropic->add_option("--workers", config.workers, "Parallel workers for exhaustive checks")->check(CLI::Range(1u, 256u));

  auto* gelfand = app.add_subcommand("gelfand", "Check X -> Max(C(X,F)) for finite discrete X");
  gelfand->add_option("--field", config.field, "Field or comma-separated list of fields")->required();
  gelfand->add_option("--space", config.space, "Space size, a list or a range a..b");
  gelfand->add_flag("--oracle", config.oracle, "Cross-check against brute-force ideal enumeration");

  auto* cover = app.add_subcommand("cover", "Certify a nowhere-vanishing element of the ideal of a cover");
  cover->add_option("--field", config.field, "Field")->required();
  cover->add_option("--functions", config.functions_path, "File with one function per line");
  cover->add_option("--random", config.random_functions, "Generate this many random functions instead");
  cover->add_option("--space", config.space, "Space size for --random");
  cover->add_option("--seed", config.seed, "Seed for --random");
  cover->add_option("--case", config.which_case, "1, 2, 3 or all");
  cover->add_option("--base", config.base, "Root-free base for case 1");

  auto* field_cmd = app.add_subcommand("field", "Field utilities");
  field_cmd->require_subcommand(1);
  auto* find_rootfree = field_cmd->add_subcommand("find-rootfree", "First root-free monic of degree m");
  find_rootfree->add_option("--field", config.field, "Finite field")->required();
  find_rootfree->add_option("--m", config.degree, "Degree")->required();

  for (auto* sub : {anisotropic, gelfand, cover, find_rootfree}) {
    sub->add_option("--out", config.out_path, "Write the report here instead of stdout");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input_error;
  }

  config.command = anisotropic->parsed()  ? "anisotropic"
                   : gelfand->parsed()    ? "gelfand"
                   : cover->parsed()      ? "cover"
                                          : "field find-rootfree";

  const auto start = std::chrono::steady_clock::now();
  Json root;
  root["command"] = config.command;
  root["config"] = config_echo(config);
  Json instances = Json::array();
  Tally tally;
  try {
    if (config.command == "anisotropic") {
      cmd_anisotropic(config, instances, tally);
    } else if (config.command == "gelfand") {
      cmd_gelfand(config, instances, tally);
    } else if (config.command == "cover") {
      cmd_cover(config, instances, tally, root);
    } else {
      cmd_find_rootfree(config, instances, tally);
    }
  } catch (const Error& e) {
    tally.input_error = true;
    root["error"] = error_json(e);
    err << "error: " << e.what() << "\n";
  }
  root["instances"] = std::move(instances);
  root["totals"] = {{"passed", tally.passed}, {"failed", tally.failed}};
  root["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (config.out_path.empty()) {
    out << root.dump(2) << "\n";
  } else {
    std::ofstream file(config.out_path);
    if (!file) {
      err << "error: cannot write " << config.out_path << "\n";
      return exit_input_error;
    }
    file << root.dump(2) << "\n";
  }
  return tally.exit_code();
}

}  // namespace gelfand::cli
