#include "gelfand/function_ring.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gelfand {

FiniteSpace::FiniteSpace(std::size_t size) : size_(size) {
  if (size < 1 || size > max_size) {
    throw Error(ErrorCode::invalid_argument, "space size must lie in [1, 63], got " + std::to_string(size));
  }
}

std::vector<std::size_t> points_of(PointSet set) {
  std::vector<std::size_t> out;
  while (set != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(set)));
    set &= set - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(std::vector<FieldElement> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::invalid_argument, "ring elements need at least one point");
  if (values_.size() > FiniteSpace::max_size) throw Error(ErrorCode::invalid_argument, "too many points");
  for (const auto& v : values_) {
    if (!(v.field() == values_.front().field())) throw Error(ErrorCode::mixed_fields, "function values from mixed fields");
  }
}

RingElement RingElement::constant(const FiniteSpace& space, const FieldElement& c) {
  return RingElement(std::vector<FieldElement>(space.size(), c));
}

RingElement RingElement::indicator(const FiniteSpace& space, const FieldDescriptor& field, std::size_t point) {
  if (point >= space.size()) throw Error(ErrorCode::point_out_of_range, "point " + std::to_string(point) + " outside X");
  std::vector<FieldElement> values(space.size(), field.zero());
  values[point] = field.one();
  return RingElement(std::move(values));
}

PointSet RingElement::zero_set() const {
  PointSet out = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) out |= PointSet{1} << i;
  }
  return out;
}

PointSet RingElement::support() const { return ~zero_set() & ((PointSet{1} << values_.size()) - 1); }

void RingElement::require_compatible(const RingElement& rhs) const {
  if (values_.size() != rhs.values_.size()) throw Error(ErrorCode::arity_mismatch, "functions on spaces of different size");
  if (!(field() == rhs.field())) throw Error(ErrorCode::mixed_fields, "functions with values in different fields");
}

RingElement RingElement::operator+(const RingElement& rhs) const {
  require_compatible(rhs);
  std::vector<FieldElement> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] + rhs.values_[i]);
  return RingElement(std::move(out));
}

RingElement RingElement::operator-(const RingElement& rhs) const {
  require_compatible(rhs);
  std::vector<FieldElement> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] - rhs.values_[i]);
  return RingElement(std::move(out));
}

RingElement RingElement::operator*(const RingElement& rhs) const {
  require_compatible(rhs);
  std::vector<FieldElement> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] * rhs.values_[i]);
  return RingElement(std::move(out));
}

RingElement RingElement::operator*(const FieldElement& c) const {
  std::vector<FieldElement> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v * c);
  return RingElement(std::move(out));
}

bool RingElement::operator<(const RingElement& rhs) const {
  require_compatible(rhs);
  return std::lexicographical_compare(values_.begin(), values_.end(), rhs.values_.begin(), rhs.values_.end());
}

std::string RingElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ",";
    out += values_[i].to_string();
  }
  return out + ")";
}

std::vector<RingElement> enumerate_ring(const FiniteSpace& space, const FieldDescriptor& field, std::uint64_t limit) {
  const std::uint64_t q = field.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (total > limit / q) {
      throw Error(ErrorCode::too_large, "C(X,F) has more than " + std::to_string(limit) + " elements");
    }
    total *= q;
  }
  const auto elements = field.enumerate();
  std::vector<RingElement> out;
  out.reserve(total);
  std::vector<FieldElement> values(space.size(), field.zero());
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = space.size(); i-- > 0;) {
      values[i] = elements[rest % q];
      rest /= q;
    }
    out.emplace_back(values);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideals

namespace {

void require_member_shape(const FiniteSpace& space, const FieldDescriptor& field, const RingElement& f) {
  if (f.size() != space.size()) throw Error(ErrorCode::arity_mismatch, "function defined on a different space");
  if (!(f.field() == field)) throw Error(ErrorCode::mixed_fields, "function with values outside " + field.to_string());
}

bool sorted_contains(const std::vector<RingElement>& sorted, const RingElement& f) {
  return std::binary_search(sorted.begin(), sorted.end(), f);
}

}  // namespace

IdealRepr::IdealRepr(FiniteSpace space, FieldDescriptor field, Form form, std::vector<RingElement> members,
                     PointSet vanishing)
    : space_(space), field_(std::move(field)), form_(form), members_(std::move(members)), vanishing_(vanishing) {}

IdealRepr IdealRepr::explicit_members(const FiniteSpace& space, const FieldDescriptor& field,
                                      std::vector<RingElement> members) {
  for (const auto& f : members) require_member_shape(space, field, f);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return IdealRepr(space, field, Form::explicit_members, std::move(members), 0);
}

IdealRepr IdealRepr::structural(const FiniteSpace& space, const FieldDescriptor& field, PointSet vanishing) {
  if ((vanishing & ~space.all_points()) != 0) throw Error(ErrorCode::point_out_of_range, "vanishing set outside X");
  return IdealRepr(space, field, Form::structural, {}, vanishing);
}

bool IdealRepr::contains(const RingElement& f) const {
  require_member_shape(space_, field_, f);
  if (form_ == Form::explicit_members) return sorted_contains(members_, f);
  return (f.zero_set() & vanishing_) == vanishing_;
}

std::vector<RingElement> IdealRepr::generators() const {
  if (form_ == Form::explicit_members) return members_;
  std::vector<RingElement> out;
  for (std::size_t x = 0; x < space_.size(); ++x) {
    if ((vanishing_ >> x & 1U) == 0) out.push_back(RingElement::indicator(space_, field_, x));
  }
  if (out.empty()) out.push_back(RingElement::constant(space_, field_.zero()));
  return out;
}

std::vector<RingElement> IdealRepr::materialize() const {
  if (form_ == Form::explicit_members) return members_;
  std::vector<RingElement> out;
  for (auto& f : enumerate_ring(space_, field_)) {
    if (contains(f)) out.push_back(std::move(f));
  }
  return out;
}

bool is_ideal(const FiniteSpace& space, const FieldDescriptor& field, const std::vector<RingElement>& members) {
  std::vector<RingElement> sorted(members);
  std::sort(sorted.begin(), sorted.end());
  if (!sorted_contains(sorted, RingElement::constant(space, field.zero()))) return false;
  for (const auto& a : sorted) {
    for (const auto& b : sorted) {
      if (!sorted_contains(sorted, a + b)) return false;
    }
  }
  const auto ring = enumerate_ring(space, field);
  for (const auto& r : ring) {
    for (const auto& a : sorted) {
      if (!sorted_contains(sorted, r * a)) return false;
    }
  }
  return true;
}

std::vector<RingElement> generated_ideal(const FiniteSpace& space, const FieldDescriptor& field,
                                         const std::vector<RingElement>& generators) {
  const auto ring = enumerate_ring(space, field);
  std::set<RingElement> members{RingElement::constant(space, field.zero())};
  std::vector<RingElement> frontier;
  for (const auto& g : generators) {
    require_member_shape(space, field, g);
    if (members.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<RingElement> next;
    for (const auto& a : frontier) {
      for (const auto& r : ring) {
        auto product = r * a;
        if (members.insert(product).second) next.push_back(std::move(product));
      }
      const std::vector<RingElement> snapshot(members.begin(), members.end());
      for (const auto& b : snapshot) {
        auto sum = a + b;
        if (members.insert(sum).second) next.push_back(std::move(sum));
      }
    }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

bool is_proper(const IdealRepr& ideal) {
  if (ideal.form() == IdealRepr::Form::structural) return ideal.vanishing_set() != 0;
  return !ideal.contains(RingElement::constant(ideal.space(), ideal.field().one()));
}

bool is_maximal(const IdealRepr& ideal) {
  if (!is_proper(ideal)) return false;
  const auto& space = ideal.space();
  const auto& field = ideal.field();
  const RingElement one = RingElement::constant(space, field.one());

  if (ideal.form() == IdealRepr::Form::explicit_members) {
    for (const auto& f : enumerate_ring(space, field)) {
      if (ideal.contains(f)) continue;
      auto gens = ideal.members();
      gens.push_back(f);
      if (!sorted_contains(generated_ideal(space, field, gens), one)) return false;
    }
    return true;
  }

  // Membership in Structural(V) depends only on the zero set Z(f), and every
  // subset Z is the zero set of the characteristic function of X \ Z, so it
  // suffices to range over Z. Adjoining f gives Structural(V cap Z).
  if (space.size() > 20) throw Error(ErrorCode::too_large, "maximality check limited to 20 points");
  const PointSet v = ideal.vanishing_set();
  for (PointSet z = 0; z <= space.all_points(); ++z) {
    const bool in_ideal = (z & v) == v;
    if (!in_ideal && (v & z) != 0) return false;
  }
  return true;
}

IdealRepr gelfand_map(const FiniteSpace& space, const FieldDescriptor& field, std::size_t point) {
  if (point >= space.size()) {
    throw Error(ErrorCode::point_out_of_range,
                "point " + std::to_string(point) + " outside a space of size " + std::to_string(space.size()));
  }
  return IdealRepr::structural(space, field, PointSet{1} << point);
}

std::vector<OracleIdeal> enumerate_ideals_bruteforce(const FiniteSpace& space, const FieldDescriptor& field) {
  const auto ring = enumerate_ring(space, field, bruteforce_ring_limit);
  const std::size_t r = ring.size();
  auto index_of = [&](const RingElement& f) {
    return static_cast<std::size_t>(std::lower_bound(ring.begin(), ring.end(), f) - ring.begin());
  };
  std::vector<std::vector<std::size_t>> add(r, std::vector<std::size_t>(r));
  std::vector<std::vector<std::size_t>> mul(r, std::vector<std::size_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      add[i][j] = index_of(ring[i] + ring[j]);
      mul[i][j] = index_of(ring[i] * ring[j]);
    }
  }
  const std::size_t zero = index_of(RingElement::constant(space, field.zero()));

  std::vector<OracleIdeal> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    auto has = [mask](std::size_t i) { return (mask >> i & 1U) != 0; };
    if (!has(zero)) continue;
    bool closed = true;
    for (std::size_t i = 0; closed && i < r; ++i) {
      if (!has(i)) continue;
      for (std::size_t j = 0; closed && j < r; ++j) {
        if (has(j) && !has(add[i][j])) closed = false;
        if (!has(mul[j][i])) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<RingElement> members;
    for (std::size_t i = 0; i < r; ++i) {
      if (has(i)) members.push_back(ring[i]);
    }
    auto ideal = IdealRepr::explicit_members(space, field, std::move(members));
    const bool proper = is_proper(ideal);
    const bool maximal = proper && is_maximal(ideal);
    out.push_back({std::move(ideal), proper, maximal});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum

ZariskiSpace max_spectrum(const FiniteSpace& space, const FieldDescriptor& field) {
  if (space.size() > 16) throw Error(ErrorCode::too_large, "spectrum construction limited to 16 points");
  ZariskiSpace out;
  for (std::size_t x = 0; x < space.size(); ++x) out.points.push_back(gelfand_map(space, field, x));

  for (PointSet v = 1; v <= space.all_points(); ++v) {
    if (is_maximal(IdealRepr::structural(space, field, v))) out.structural_maximal.push_back(v);
  }

  std::set<PointSet> family;
  for (const auto& f : enumerate_ring(space, field)) family.insert(closed_set(out, {f}));
  // Close under finite union and intersection; the family is finite, so
  // arbitrary intersections reduce to finite ones.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<PointSet> snapshot(family.begin(), family.end());
    for (const auto a : snapshot) {
      for (const auto b : snapshot) {
        grew |= family.insert(a | b).second;
        grew |= family.insert(a & b).second;
      }
    }
  }
  out.closed_sets.assign(family.begin(), family.end());
  return out;
}

PointSet closed_set(const ZariskiSpace& spectrum, const std::vector<RingElement>& s) {
  PointSet out = 0;
  for (std::size_t i = 0; i < spectrum.points.size(); ++i) {
    const bool all_in = std::all_of(s.begin(), s.end(), [&](const RingElement& f) { return spectrum.points[i].contains(f); });
    if (all_in) out |= PointSet{1} << i;
  }
  return out;
}

PointSet basic_open(const ZariskiSpace& spectrum, const RingElement& f) {
  PointSet out = 0;
  for (std::size_t i = 0; i < spectrum.points.size(); ++i) {
    if (!spectrum.points[i].contains(f)) out |= PointSet{1} << i;
  }
  return out;
}

PointSet preimage_of_ideal(const IdealRepr& ideal) {
  if (!is_proper(ideal)) throw Error(ErrorCode::not_proper, "the ideal is the whole ring");
  PointSet covered = 0;
  for (const auto& psi : ideal.generators()) covered |= psi.support();
  return ideal.space().all_points() & ~covered;
}

namespace {

bool ideals_equal(const IdealRepr& a, const IdealRepr& b) {
  const auto ga = a.generators();
  const auto gb = b.generators();
  return std::all_of(ga.begin(), ga.end(), [&](const RingElement& f) { return b.contains(f); }) &&
         std::all_of(gb.begin(), gb.end(), [&](const RingElement& f) { return a.contains(f); });
}

}  // namespace

HomeomorphismReport check_homeomorphism(const FiniteSpace& space, const FieldDescriptor& field, bool use_oracle) {
  HomeomorphismReport report;
  report.space_size = space.size();
  report.field = field.to_string();

  const ZariskiSpace spectrum = max_spectrum(space, field);
  const std::size_t n = space.size();
  report.max_ideal_count = spectrum.structural_maximal.size();

  report.injective = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (!is_maximal(spectrum.points[x])) report.injective = false;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (ideals_equal(spectrum.points[x], spectrum.points[y])) report.injective = false;
    }
  }
  report.surjective = std::all_of(spectrum.structural_maximal.begin(), spectrum.structural_maximal.end(), [&](PointSet v) {
    const auto m = IdealRepr::structural(space, field, v);
    return std::any_of(spectrum.points.begin(), spectrum.points.end(),
                       [&](const IdealRepr& p) { return ideals_equal(m, p); });
  });
  report.bijective = report.injective && report.surjective && report.max_ideal_count == n;

  // Spectrum point i is I_F(i), so masks transport verbatim between X and Max.
  // Every subset of the discrete X is closed, hence continuity holds as soon
  // as each preimage is a subset of X; the map is closed iff every subset's
  // image is a Zariski closed set.
  const std::set<PointSet> family(spectrum.closed_sets.begin(), spectrum.closed_sets.end());
  report.continuous = std::all_of(family.begin(), family.end(), [&](PointSet c) { return (c & ~space.all_points()) == 0; });
  report.closed_map = true;
  for (PointSet a = 0; a <= space.all_points(); ++a) {
    if (!family.contains(a)) {
      report.closed_map = false;
      break;
    }
  }
  report.closed_set_count = spectrum.closed_sets.size();
  report.topology_match = report.continuous && report.closed_map && report.closed_set_count == (std::size_t{1} << n);

  if (use_oracle) {
    std::uint64_t ring_size = 1;
    bool feasible = true;
    for (std::size_t i = 0; i < n && feasible; ++i) {
      ring_size *= field.order();
      feasible = ring_size <= bruteforce_ring_limit;
    }
    if (feasible) {
      const auto ideals = enumerate_ideals_bruteforce(space, field);
      report.oracle_checked = true;
      report.oracle_ideal_count = ideals.size();
      std::vector<PointSet> oracle_max;
      bool members_match = true;
      for (const auto& candidate : ideals) {
        if (!candidate.maximal) continue;
        const PointSet v = preimage_of_ideal(candidate.ideal);
        oracle_max.push_back(v);
        if (std::popcount(v) == 1) {
          const auto x = static_cast<std::size_t>(std::countr_zero(v));
          members_match &= spectrum.points[x].materialize() == candidate.ideal.members();
        } else {
          members_match = false;
        }
      }
      std::sort(oracle_max.begin(), oracle_max.end());
      std::vector<PointSet> structural(spectrum.structural_maximal);
      std::sort(structural.begin(), structural.end());
      report.oracle_agrees = members_match && oracle_max == structural;
    }
  }
  return report;
}

}  // namespace gelfand
