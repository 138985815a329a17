#pragma once

// Shared text helpers for field elements, field descriptors and polynomials.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gelfand/field.hpp"

namespace gelfand::detail {

/// Parses text[begin, end) as a polynomial in the single variable `variable`
/// over `field`; returns coefficients c_0..c_deg with trailing zeros trimmed.
/// Error positions refer to the full `text`.
std::vector<FieldElement> parse_univariate(std::string_view text, std::size_t begin, std::size_t end,
                                           const FieldDescriptor& field, std::string_view variable);

/// Parses a constant expression over `field`.
FieldElement parse_constant(std::string_view text, const FieldDescriptor& field);

/// Renders c_0 + c_1 s + ... as "c_k*s^k+...+c_0" with unit coefficients elided.
std::string format_residue_poly(std::span<const std::int64_t> coefficients, std::string_view symbol);

}  // namespace gelfand::detail
