#include "gelfand/covers.hpp"

#include <algorithm>
#include <bit>

#include "gelfand/anisotropic.hpp"

namespace gelfand {

const char* mode_name(CombinationMode mode) noexcept {
  switch (mode) {
    case CombinationMode::case1: return "CaseI";
    case CombinationMode::case1_norm: return "CaseI-norm";
    case CombinationMode::case2: return "CaseII";
    case CombinationMode::case3: return "CaseIII";
  }
  return "unknown";
}

std::vector<FieldElement> Cover::values_at(std::size_t point) const {
  std::vector<FieldElement> out;
  out.reserve(functions_.size());
  for (const auto& psi : functions_) out.push_back(psi(point));
  return out;
}

Cover check_cover(std::vector<RingElement> functions) {
  if (functions.empty()) throw Error(ErrorCode::invalid_argument, "a cover needs at least one function");
  const FiniteSpace space(functions.front().size());
  const FieldDescriptor field = functions.front().field();
  PointSet covered = 0;
  for (const auto& psi : functions) {
    if (psi.size() != space.size()) throw Error(ErrorCode::arity_mismatch, "functions on spaces of different size");
    if (!(psi.field() == field)) throw Error(ErrorCode::mixed_fields, "functions with values in different fields");
    covered |= psi.support();
  }
  const PointSet uncovered = space.all_points() & ~covered;
  if (uncovered != 0) throw CommonZero(points_of(uncovered).front());
  return Cover(space, field, std::move(functions));
}

// ---------------------------------------------------------------------------

ProjectivePoint::ProjectivePoint(const FieldElement& u, const FieldElement& v)
    : at_infinity_(v.is_zero()), u_(u), v_(v), affine_(u.field().zero()) {
  if (u.is_zero() && v.is_zero()) throw Error(ErrorCode::invalid_argument, "[0,0] is not a projective point");
  if (at_infinity_) {
    u_ = u.field().one();
  } else {
    affine_ = u / v;
    u_ = affine_;
    v_ = v.field().one();
  }
}

bool ProjectivePoint::operator==(const ProjectivePoint& rhs) const noexcept {
  return at_infinity_ == rhs.at_infinity_ && (at_infinity_ || affine_ == rhs.affine_);
}

bool ProjectivePoint::operator<(const ProjectivePoint& rhs) const {
  if (at_infinity_ != rhs.at_infinity_) return rhs.at_infinity_;
  return !at_infinity_ && affine_ < rhs.affine_;
}

std::string ProjectivePoint::to_string() const { return "[" + u_.to_string() + "," + v_.to_string() + "]"; }

// ---------------------------------------------------------------------------

std::vector<ImagePoint> image_points(const Cover& cover) {
  std::set<ImagePoint> image;
  for (std::size_t x = 0; x < cover.space().size(); ++x) image.insert(cover.values_at(x));
  return {image.begin(), image.end()};
}

MultiPoly indicator_poly(const ImagePoint& a, const FieldDescriptor& field) {
  const std::uint64_t q = field.order();
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "indicator of an empty tuple");
  const MultiPoly one = MultiPoly::constant(n, field.one());
  MultiPoly out = one;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i].field() == field)) throw Error(ErrorCode::mixed_fields, "point coordinate outside " + field.to_string());
    const MultiPoly shifted = MultiPoly::variable(field, n, i) - MultiPoly::constant(n, a[i]);
    out = out * (one - shifted.pow(q - 1));
  }
  return out;
}

MultiPoly interpolate_case2(const std::vector<ImagePoint>& j, const FieldDescriptor& field) {
  if (j.empty()) throw Error(ErrorCode::invalid_argument, "interpolation set is empty");
  const std::size_t n = j.front().size();
  MultiPoly out(field, n);
  for (const auto& a : j) {
    if (a.size() != n) throw Error(ErrorCode::arity_mismatch, "interpolation points of different arity");
    if (std::all_of(a.begin(), a.end(), [](const FieldElement& c) { return c.is_zero(); })) {
      throw Error(ErrorCode::origin_in_image, "the origin lies in the interpolation set");
    }
    out += indicator_poly(a, field);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

RingElement compose(const MultiPoly& g, const Cover& cover) {
  std::vector<FieldElement> values;
  values.reserve(cover.space().size());
  for (std::size_t x = 0; x < cover.space().size(); ++x) values.push_back(g.evaluate(cover.values_at(x)));
  return RingElement(std::move(values));
}

RingElement norm_sum(const Cover& cover) {
  std::vector<FieldElement> values;
  for (std::size_t x = 0; x < cover.space().size(); ++x) {
    FieldElement acc = cover.field().zero();
    for (const auto& psi : cover.functions()) acc += psi(x) * conjugate(psi(x));
    values.push_back(acc);
  }
  return RingElement(std::move(values));
}

RingElement linear_combination(const Cover& cover, const std::vector<FieldElement>& coefficients) {
  RingElement acc = RingElement::constant(cover.space(), cover.field().zero());
  for (std::size_t i = 0; i < coefficients.size(); ++i) acc = acc + cover.functions()[i] * coefficients[i];
  return acc;
}

CombinationCertificate make_certificate(CombinationMode mode, const Cover& cover, std::optional<MultiPoly> witness,
                                        std::vector<FieldElement> coefficients, RingElement composite) {
  std::vector<FieldElement> evidence = composite.values();
  return {mode, cover, std::move(witness), std::move(coefficients), std::move(composite), std::move(evidence), {}};
}

}  // namespace

CombinationCertificate combine_case1(const Cover& cover, const MultiPoly& base) {
  if (!(base.field() == cover.field())) {
    throw Error(ErrorCode::mixed_fields, "base polynomial is not over " + cover.field().to_string());
  }
  MultiPoly witness = build_fn(base, cover.count());
  RingElement composite = compose(witness, cover);
  return make_certificate(CombinationMode::case1, cover, std::move(witness), {}, std::move(composite));
}

CombinationCertificate combine_case1_norm(const Cover& cover) {
  if (cover.field().kind() != FieldKind::quadratic) {
    throw Error(ErrorCode::wrong_kind, "the norm form needs an imaginary quadratic field");
  }
  return make_certificate(CombinationMode::case1_norm, cover, std::nullopt, {}, norm_sum(cover));
}

CombinationCertificate combine_case2(const Cover& cover) {
  MultiPoly witness = interpolate_case2(image_points(cover), cover.field());
  RingElement composite = compose(witness, cover);
  return make_certificate(CombinationMode::case2, cover, std::move(witness), {}, std::move(composite));
}

CombinationCertificate unit_combination_case3(const Cover& cover) {
  const auto& field = cover.field();
  const auto elements = field.enumerate();
  const auto& psi = cover.functions();
  const std::size_t n = psi.size();
  const PointSet all = cover.space().all_points();

  std::vector<FieldElement> coefficients(n, field.zero());
  coefficients[0] = field.one();
  RingElement current = psi[0];
  std::vector<AvoidanceStep> steps;

  for (std::size_t i = 1; i < n; ++i) {
    // Y_i = X minus (D(psi_{i+1}) cup ... cup D(psi_n)).
    PointSet later = 0;
    for (std::size_t j = i + 1; j < n; ++j) later |= psi[j].support();
    const PointSet restricted = all & ~later;

    std::set<ProjectivePoint> image;
    for (const auto x : points_of(restricted)) image.emplace(current(x), psi[i](x));

    const auto avoided = std::find_if(elements.begin(), elements.end(), [&](const FieldElement& a) {
      return !image.contains(ProjectivePoint(a, field.one()));
    });
    if (avoided == elements.end()) throw AvoidanceExhausted(i + 1);
    const FieldElement& a = *avoided;

    current = current - psi[i] * a;
    coefficients[i] = -a;
    const bool invariant = ((current.support() | later) & all) == all;
    steps.push_back({i + 1, static_cast<std::size_t>(std::popcount(restricted)), image.size(), a, invariant});
    if (!invariant) {
      throw Error(ErrorCode::invalid_argument, "cover invariant broken at step " + std::to_string(i + 1));
    }
  }

  auto certificate = make_certificate(CombinationMode::case3, cover, std::nullopt, std::move(coefficients), current);
  certificate.steps = std::move(steps);
  return certificate;
}

CertifyResult certify(const CombinationCertificate& certificate) {
  const Cover& cover = certificate.cover;
  CertifyResult result;

  std::optional<RingElement> recomputed;
  switch (certificate.mode) {
    case CombinationMode::case1:
    case CombinationMode::case2: {
      if (!certificate.witness) {
        result.reason = "missing witness polynomial";
        return result;
      }
      const MultiPoly& g = *certificate.witness;
      if (g.arity() != cover.count() || !(g.field() == cover.field())) {
        result.reason = "witness does not match the cover";
        return result;
      }
      recomputed = compose(g, cover);
      break;
    }
    case CombinationMode::case1_norm:
      if (cover.field().kind() != FieldKind::quadratic) {
        result.reason = "norm form outside an imaginary quadratic field";
        return result;
      }
      recomputed = norm_sum(cover);
      break;
    case CombinationMode::case3:
      if (certificate.coefficients.size() != cover.count()) {
        result.reason = "coefficient count does not match the cover";
        return result;
      }
      recomputed = linear_combination(cover, certificate.coefficients);
      break;
  }

  const PointSet zeros = recomputed->zero_set();
  if (zeros != 0) {
    result.first_vanishing_point = points_of(zeros).front();
    result.reason = "composite vanishes at point " + std::to_string(*result.first_vanishing_point);
    return result;
  }
  if (!(*recomputed == certificate.composite) || recomputed->values() != certificate.evidence) {
    result.reason = "recorded composite differs from recomputation";
    return result;
  }
  if ((certificate.mode == CombinationMode::case1 || certificate.mode == CombinationMode::case2) &&
      !certificate.witness->constant_term().is_zero()) {
    result.reason = "witness has a nonzero constant term";
    return result;
  }
  result.pass = true;
  return result;
}

}  // namespace gelfand
