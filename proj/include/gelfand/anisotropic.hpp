#pragma once

// Polynomials F^n -> F whose only zero is the origin, built from a root-free
// monic f by homogenizing (f_2) and composing in the last variable
// (f_{k+1} = f_2(f_k, x_{k+1})), plus the checks that certify the zero set.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/field.hpp"
#include "gelfand/poly.hpp"

namespace gelfand {

/// How a base polynomial was shown to have no roots.
enum class RootFreeEvidence {
  exhaustive,          ///< every element of a finite field evaluated
  rational_root_test,  ///< no candidate +-r/s survives over Q
};

const char* evidence_name(RootFreeEvidence evidence) noexcept;

/// Checks that `f` is a monic univariate polynomial of degree >= 2 without
/// roots in its field. Finite fields are searched exhaustively (HasRoot with the
/// smallest root on failure); over Q the rational root theorem is applied.
/// Throws WrongKind for Q(sqrt d), whose anisotropic form is the norm form.
RootFreeEvidence check_root_free(const MultiPoly& f);

/// f_1 = x1, f_2 = homogenize2(f), f_{k+1} = compose_last(f_2, f_k).
/// Verifies the root-free precondition first. Result has degree m^{n-1} for
/// n >= 2 and zero constant term.
MultiPoly build_fn(const MultiPoly& f, std::size_t n);

enum class VerificationStatus {
  exhaustive_passed,
  valuation_passed,
  sampled_passed,
  failed,
};

const char* status_name(VerificationStatus status) noexcept;

struct Verification {
  VerificationStatus status = VerificationStatus::failed;
  /// Points (exhaustive) or samples (valuation, sampled) examined.
  std::uint64_t checked = 0;
  /// Offending point when failed: a nonzero root, or the origin if it is not a root.
  std::vector<FieldElement> counterexample;

  bool passed() const noexcept { return status != VerificationStatus::failed; }
};

struct AnisotropicWitness {
  MultiPoly base;
  std::size_t arity;
  MultiPoly form;
  Verification verification;
};

/// Guard on q^n for exhaustive enumeration of F^n.
inline constexpr std::uint64_t exhaustive_point_limit = 10'000'000;

/// Evaluates `g` on all of F^n (F finite) and reports whether its zero set is
/// exactly the origin. The counterexample is the lexicographically smallest
/// offending point regardless of `workers`. Throws TooLarge past the guard.
Verification verify_vanishing_exhaustive(const MultiPoly& g, const FieldDescriptor& field, unsigned workers = 1);

/// Sampled check for infinite fields: g(origin) = 0 and g(pt) != 0 for every
/// nonzero sample point.
Verification verify_vanishing_sampled(const MultiPoly& g, std::span<const std::vector<FieldElement>> samples);

/// Sum of norm(x_i) over elements of one Q(sqrt d); a nonnegative rational.
FieldElement norm_form_eval(std::span<const FieldElement> points);

/// Certifies that x^2 - p*y^2 vanishes only at (0,0) on the given samples by
/// checking v_p(x^2 - p y^2) = min(2 v_p(x), 1 + 2 v_p(y)) for nonzero pairs
/// (the two sides of the min always differ in parity) and value 0 at (0,0).
Verification valuation_identity_check(std::int64_t p, std::span<const std::pair<Rational, Rational>> samples);

}  // namespace gelfand
