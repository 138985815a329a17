#include "report.hpp"

namespace gelfand::report {

namespace {

Json element_list(const std::vector<FieldElement>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

Json to_json(const Verification& verification) {
  Json out;
  out["mode"] = status_name(verification.status);
  switch (verification.status) {
    case VerificationStatus::exhaustive_passed: out["points_checked"] = verification.checked; break;
    case VerificationStatus::valuation_passed:
    case VerificationStatus::sampled_passed: out["samples"] = verification.checked; break;
    case VerificationStatus::failed: out["counterexample"] = element_list(verification.counterexample); break;
  }
  return out;
}

Json to_json(const AnisotropicWitness& witness) {
  Json out;
  out["base"] = witness.base.to_string(std::vector<std::string>{"x"});
  out["arity"] = witness.arity;
  out["form"] = witness.form.to_string();
  out["degree"] = witness.form.degree().value_or(0);
  out["verification"] = to_json(witness.verification);
  return out;
}

Json to_json(const HomeomorphismReport& report) {
  Json out;
  out["space_size"] = report.space_size;
  out["field"] = report.field;
  out["instance"] = "finite discrete X";
  out["max_ideal_count"] = report.max_ideal_count;
  out["injective"] = report.injective;
  out["surjective"] = report.surjective;
  out["bijective"] = report.bijective;
  out["continuous"] = report.continuous;
  out["closed_map"] = report.closed_map;
  out["topology_match"] = report.topology_match;
  out["closed_set_count"] = report.closed_set_count;
  out["oracle_checked"] = report.oracle_checked;
  if (report.oracle_agrees) out["oracle_agrees"] = *report.oracle_agrees;
  if (report.oracle_ideal_count) out["oracle_ideal_count"] = *report.oracle_ideal_count;
  out["pass"] = report.passed();
  return out;
}

Json to_json(const CombinationCertificate& certificate, const CertifyResult& result) {
  Json out;
  out["mode"] = mode_name(certificate.mode);
  switch (certificate.mode) {
    case CombinationMode::case1:
    case CombinationMode::case2: out["witness"] = certificate.witness->to_string(); break;
    case CombinationMode::case1_norm: {
      std::string text;
      for (std::size_t i = 1; i <= certificate.cover.count(); ++i) {
        if (i > 1) text += " + ";
        text += "x" + std::to_string(i) + "*conj(x" + std::to_string(i) + ")";
      }
      out["witness"] = text;
      break;
    }
    case CombinationMode::case3: out["witness"] = element_list(certificate.coefficients); break;
  }
  out["composite_values"] = element_list(certificate.composite.values());
  out["pass"] = result.pass;
  if (!result.pass) out["reason"] = result.reason;
  if (result.first_vanishing_point) out["first_vanishing_point"] = *result.first_vanishing_point;
  if (certificate.mode == CombinationMode::case3) {
    Json log = Json::array();
    for (const auto& step : certificate.steps) {
      Json entry;
      entry["step"] = step.step;
      entry["restricted_points"] = step.restricted_size;
      entry["image_size"] = step.image_size;
      entry["chosen_a"] = step.chosen.to_string();
      entry["cover_invariant"] = step.invariant_holds;
      log.push_back(std::move(entry));
    }
    out["per_step_log"] = std::move(log);
  }
  return out;
}

}  // namespace gelfand::report
