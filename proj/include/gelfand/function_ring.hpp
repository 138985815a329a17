#pragma once

// The ring C(X, F) of F-valued functions on a finite discrete space X, its
// ideals, its maximal spectrum with the Zariski topology, and the Gelfand map
// x -> ker(ev_x). Only the finite discrete instance is representable here;
// every function on such an X is continuous.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/field.hpp"

namespace gelfand {

/// Subset of a finite space as a bit mask (bit x set iff point x is a member).
using PointSet = std::uint64_t;

class FiniteSpace {
 public:
  static constexpr std::size_t max_size = 63;

  /// Throws InvalidArgument unless 1 <= size <= max_size.
  explicit FiniteSpace(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  PointSet all_points() const noexcept { return (PointSet{1} << size_) - 1; }
  bool operator==(const FiniteSpace&) const = default;

 private:
  std::size_t size_;
};

std::vector<std::size_t> points_of(PointSet set);

class RingElement {
 public:
  explicit RingElement(std::vector<FieldElement> values);
  static RingElement constant(const FiniteSpace& space, const FieldElement& c);
  /// 1 at `point`, 0 elsewhere.
  static RingElement indicator(const FiniteSpace& space, const FieldDescriptor& field, std::size_t point);

  const FieldDescriptor& field() const noexcept { return values_.front().field(); }
  std::size_t size() const noexcept { return values_.size(); }
  const FieldElement& operator()(std::size_t point) const { return values_.at(point); }
  const std::vector<FieldElement>& values() const noexcept { return values_; }

  /// Points where the function vanishes.
  PointSet zero_set() const;
  /// Points where the function does not vanish.
  PointSet support() const;

  RingElement operator+(const RingElement& rhs) const;
  RingElement operator-(const RingElement& rhs) const;
  RingElement operator*(const RingElement& rhs) const;
  RingElement operator*(const FieldElement& c) const;

  bool operator==(const RingElement& rhs) const = default;
  /// Lexicographic on the value tuple.
  bool operator<(const RingElement& rhs) const;

  std::string to_string() const;

 private:
  void require_compatible(const RingElement& rhs) const;
  std::vector<FieldElement> values_;
};

/// All q^n elements of C(X, F) in lexicographic order. Guarded by `limit`.
std::vector<RingElement> enumerate_ring(const FiniteSpace& space, const FieldDescriptor& field,
                                        std::uint64_t limit = 1u << 20);

/// An ideal of C(X, F): either an explicit member list or the structural form
/// {f : f vanishes on V}.
class IdealRepr {
 public:
  enum class Form { explicit_members, structural };

  static IdealRepr explicit_members(const FiniteSpace& space, const FieldDescriptor& field,
                                    std::vector<RingElement> members);
  static IdealRepr structural(const FiniteSpace& space, const FieldDescriptor& field, PointSet vanishing);

  Form form() const noexcept { return form_; }
  const FiniteSpace& space() const noexcept { return space_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  /// Sorted, duplicate-free; empty for the structural form.
  const std::vector<RingElement>& members() const noexcept { return members_; }
  /// Meaningful for the structural form only.
  PointSet vanishing_set() const noexcept { return vanishing_; }

  bool contains(const RingElement& f) const;
  /// A generating set: the members, or the indicators of points outside V.
  std::vector<RingElement> generators() const;
  /// Explicit member list (enumerates the ring for the structural form).
  std::vector<RingElement> materialize() const;

 private:
  IdealRepr(FiniteSpace space, FieldDescriptor field, Form form, std::vector<RingElement> members, PointSet vanishing);

  FiniteSpace space_;
  FieldDescriptor field_;
  Form form_;
  std::vector<RingElement> members_;
  PointSet vanishing_ = 0;
};

/// True when `members` contains 0 and is closed under addition and under
/// multiplication by every ring element.
bool is_ideal(const FiniteSpace& space, const FieldDescriptor& field, const std::vector<RingElement>& members);

/// Smallest ideal containing `generators`, by closure (small rings only).
std::vector<RingElement> generated_ideal(const FiniteSpace& space, const FieldDescriptor& field,
                                         const std::vector<RingElement>& generators);

/// Does not contain 1.
bool is_proper(const IdealRepr& ideal);

/// Proper, and for every f outside M the ideal generated by M and f is the
/// whole ring. Explicit ideals are closed by brute force; structural ones use
/// (V, f) -> V cap Z(f).
bool is_maximal(const IdealRepr& ideal);

/// I_F(x) = ker(ev_x) = Structural({x}). Throws PointOutOfRange.
IdealRepr gelfand_map(const FiniteSpace& space, const FieldDescriptor& field, std::size_t point);

/// Guard for the subset-enumeration oracle: q^n <= 12.
inline constexpr std::uint64_t bruteforce_ring_limit = 12;

struct OracleIdeal {
  IdealRepr ideal;
  bool proper;
  bool maximal;
};

/// Every subset of C(X, F) that is an ideal, found by testing all 2^(q^n)
/// subsets. Throws TooLarge when q^n > 12.
std::vector<OracleIdeal> enumerate_ideals_bruteforce(const FiniteSpace& space, const FieldDescriptor& field);

/// Max(C(X, F)) with its Zariski closed sets as masks over the point list.
struct ZariskiSpace {
  /// points[i] = I_F(i).
  std::vector<IdealRepr> points;
  /// Sorted, duplicate-free masks over indices of `points`.
  std::vector<PointSet> closed_sets;
  /// Nonempty vanishing sets V with Structural(V) maximal, found independently of the Gelfand map.
  std::vector<PointSet> structural_maximal;
};

/// Builds the spectrum and closes {C_f : f in C(X, F)} under finite union and
/// arbitrary intersection.
ZariskiSpace max_spectrum(const FiniteSpace& space, const FieldDescriptor& field);

/// C_S = {M : S subset of M}, as a mask over spectrum points.
PointSet closed_set(const ZariskiSpace& spectrum, const std::vector<RingElement>& s);
/// D(f) = {M : f not in M}.
PointSet basic_open(const ZariskiSpace& spectrum, const RingElement& f);

/// X minus the union of D(psi) over generators psi of M: the points where every
/// element of M vanishes. Throws NotProper for the whole ring.
PointSet preimage_of_ideal(const IdealRepr& ideal);

struct HomeomorphismReport {
  std::size_t space_size = 0;
  std::string field;
  std::size_t max_ideal_count = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
  bool continuous = false;
  bool closed_map = false;
  bool topology_match = false;
  std::size_t closed_set_count = 0;
  bool oracle_checked = false;
  std::optional<bool> oracle_agrees;
  std::optional<std::size_t> oracle_ideal_count;

  bool passed() const noexcept {
    return bijective && topology_match && oracle_agrees.value_or(true);
  }
};

/// Checks that the Gelfand map is a bijection onto the maximal ideals and a
/// homeomorphism for the discrete topology on X. With `use_oracle`, and when
/// q^n is within the brute-force guard, the maximal ideals are cross-checked
/// against subset enumeration.
HomeomorphismReport check_homeomorphism(const FiniteSpace& space, const FieldDescriptor& field, bool use_oracle);

}  // namespace gelfand
