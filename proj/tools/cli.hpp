#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gelfand/field.hpp"
#include "gelfand/function_ring.hpp"

namespace gelfand::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_input_error = 2,
};

/// Runs the command line `args` (without the program name). The JSON report
/// goes to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits on `separator` outside parentheses: "Fp(2),Fq(2,2)" -> {"Fp(2)", "Fq(2,2)"}.
std::vector<std::string> split_top_level(std::string_view text, char separator);

/// "3", "1..5" or "1,2,4" -> the listed values in order.
std::vector<std::uint64_t> parse_range(std::string_view text);

/// One function per line as comma-separated element literals; blank lines and
/// lines starting with '#' are skipped.
std::vector<RingElement> parse_functions(std::istream& in, const FieldDescriptor& field);

}  // namespace gelfand::cli
