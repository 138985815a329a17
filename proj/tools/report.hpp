#pragma once

// JSON records for the CLI reports.

#include <json.hpp>

#include "gelfand/anisotropic.hpp"
#include "gelfand/covers.hpp"
#include "gelfand/function_ring.hpp"

namespace gelfand::report {

using Json = nlohmann::ordered_json;

/// {mode, points_checked | samples | counterexample}
Json to_json(const Verification& verification);

/// {base, arity, form, degree, verification}
Json to_json(const AnisotropicWitness& witness);

/// {space_size, field, max_ideal_count, bijective, topology_match,
///  oracle_checked, closed_set_count, ...}
Json to_json(const HomeomorphismReport& report);

/// {mode, witness, composite_values, pass, per_step_log}
Json to_json(const CombinationCertificate& certificate, const CertifyResult& result);

}  // namespace gelfand::report
