#pragma once

// Given functions psi_1..psi_n on a finite X with no common zero, produce an
// element of the ideal they generate that vanishes nowhere:
//
//   Case I    f_n(psi_1, ..., psi_n) with f_n the anisotropic form built from a
//             root-free base (or the norm form sum psi_i * conj(psi_i) over
//             Q(sqrt d)).
//   Case II   g(psi_1, ..., psi_n) with g interpolating 1 on the finite image
//             J and 0 at the origin.
//   Case III  a linear combination sum a_i psi_i, with the a_i chosen one at a
//             time to avoid the image of [psi~, psi_i] in the projective line.
//
// Any such element is a unit lying in every ideal containing the psi_i, which
// is the contradiction that makes every maximal ideal a point ideal.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gelfand/field.hpp"
#include "gelfand/function_ring.hpp"
#include "gelfand/poly.hpp"

namespace gelfand {

/// Functions psi_1..psi_n on one finite space with no common zero.
class Cover {
 public:
  const FiniteSpace& space() const noexcept { return space_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  const std::vector<RingElement>& functions() const noexcept { return functions_; }
  std::size_t count() const noexcept { return functions_.size(); }

  /// (psi_1(x), ..., psi_n(x)).
  std::vector<FieldElement> values_at(std::size_t point) const;

 private:
  Cover(FiniteSpace space, FieldDescriptor field, std::vector<RingElement> functions)
      : space_(space), field_(std::move(field)), functions_(std::move(functions)) {}

  FiniteSpace space_;
  FieldDescriptor field_;
  std::vector<RingElement> functions_;

  friend Cover check_cover(std::vector<RingElement> functions);
};

/// Validates X = D(psi_1) cup ... cup D(psi_n). Throws CommonZero with the
/// smallest common zero, InvalidArgument for an empty list.
Cover check_cover(std::vector<RingElement> functions);

/// Point [u, v] of P_1(F), stored as [u/v, 1] or [1, 0].
class ProjectivePoint {
 public:
  /// Throws InvalidArgument for (0, 0).
  ProjectivePoint(const FieldElement& u, const FieldElement& v);

  bool is_infinity() const noexcept { return at_infinity_; }
  /// The affine coordinate a of [a, 1]; meaningless at infinity.
  const FieldElement& affine() const noexcept { return affine_; }
  const FieldElement& u() const noexcept { return u_; }
  const FieldElement& v() const noexcept { return v_; }

  bool operator==(const ProjectivePoint& rhs) const noexcept;
  /// Affine points in field order, then infinity.
  bool operator<(const ProjectivePoint& rhs) const;
  std::string to_string() const;

 private:
  bool at_infinity_;
  FieldElement u_;
  FieldElement v_;
  FieldElement affine_;
};

using ImagePoint = std::vector<FieldElement>;

/// J = {(psi_1(x), ..., psi_n(x)) : x in X}, sorted lexicographically.
std::vector<ImagePoint> image_points(const Cover& cover);

/// prod_i (1 - (x_i - a_i)^(q-1)): 1 at a, 0 elsewhere on F^n.
MultiPoly indicator_poly(const ImagePoint& a, const FieldDescriptor& field);

/// sum over a in J of indicator_poly(a). Throws OriginInJ, InvalidArgument for
/// empty J.
MultiPoly interpolate_case2(const std::vector<ImagePoint>& j, const FieldDescriptor& field);

enum class CombinationMode { case1, case1_norm, case2, case3 };

const char* mode_name(CombinationMode mode) noexcept;

struct AvoidanceStep {
  std::size_t step;              // index i of psi_i, 2-based as in psi_2..psi_n
  std::size_t restricted_size;   // |Y_i|
  std::size_t image_size;        // |image in P_1(F)|
  FieldElement chosen;           // a with [a, 1] outside the image
  bool invariant_holds;          // X = D(psi~) cup D(psi_{i+1}) cup ... cup D(psi_n)
};

struct CombinationCertificate {
  CombinationMode mode;
  Cover cover;
  /// Case I / II: g with g(psi_1..psi_n) the composite.
  std::optional<MultiPoly> witness;
  /// Case III: composite = sum coefficients[i] * psi_{i+1}.
  std::vector<FieldElement> coefficients;
  RingElement composite;
  /// composite(x) for every x, recorded at construction.
  std::vector<FieldElement> evidence;
  std::vector<AvoidanceStep> steps;
};

/// Case I over a finite field or Q: witness = build_fn(base, n).
CombinationCertificate combine_case1(const Cover& cover, const MultiPoly& base);
/// Case I over Q(sqrt d): composite = sum psi_i * conj(psi_i).
CombinationCertificate combine_case1_norm(const Cover& cover);
/// Case II over a finite field: witness = interpolate_case2(image_points(cover)).
CombinationCertificate combine_case2(const Cover& cover);
/// Case III over a finite field. Throws AvoidanceExhausted(i) when the image
/// at step i meets every affine point [a, 1].
CombinationCertificate unit_combination_case3(const Cover& cover);

struct CertifyResult {
  bool pass = false;
  /// Smallest point where the recomputed composite vanishes.
  std::optional<std::size_t> first_vanishing_point;
  std::string reason;
};

/// Recomputes the composite from the witness (or coefficients) and the cover,
/// checks that it matches the recorded composite, vanishes nowhere, and that
/// it lies in the ideal generated by the cover (zero constant term for Cases
/// I/II, linear combination for Case III).
CertifyResult certify(const CombinationCertificate& certificate);

}  // namespace gelfand
