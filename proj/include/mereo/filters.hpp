#pragma once

#include <vector>

#include "mereo/boolean_algebra.hpp"
#include "mereo/eca.hpp"
#include "mereo/report.hpp"

namespace mereo {

enum class SetKind { filter, ideal };

/// A set of elements of a finite Boolean algebra, tagged as a filter or an
/// ideal. Instances returned by this module have been checked against the tag.
struct FilterOrIdeal {
  FiniteBooleanAlgebra algebra;
  ElementSet members = 0;
  SetKind kind = SetKind::filter;

  bool contains(Element a) const { return (members >> a) & 1U; }
  friend bool operator==(const FilterOrIdeal&, const FilterOrIdeal&) = default;
};

/// Nonempty, upward closed, closed under meet.
bool is_filter(const FiniteBooleanAlgebra& ba, ElementSet s);
/// Nonempty, downward closed, closed under join.
bool is_ideal(const FiniteBooleanAlgebra& ba, ElementSet s);
/// A proper filter containing exactly one of a, a⋆ for every a.
bool is_maximal_filter(const FiniteBooleanAlgebra& ba, ElementSet s);

/// ↑a.
FilterOrIdeal principal_filter(const FiniteBooleanAlgebra& ba, Element a);
/// Throws InvalidArgument unless s is a filter.
FilterOrIdeal make_filter(const FiniteBooleanAlgebra& ba, ElementSet s);

/// ↑α for each atom α, in atom order. Each is checked with is_maximal_filter.
std::vector<FilterOrIdeal> maximal_filters(const FiniteBooleanAlgebra& ba);

/// {b : (a, b) ⊢ d for some a in u}. No checks; see left_set.
ElementSet left_members(const CoveringRelation& v, ElementSet u, Element d);
/// {a : (a, b) ⊢ d for some b in v}.
ElementSet right_members(const CoveringRelation& v, ElementSet vset, Element d);

/// The left set of filter u at d, checked to be an ideal. Throws
/// InvalidArgument if u is not a filter and InvariantViolation if the result
/// is not an ideal.
FilterOrIdeal left_set(const ExtendedContactAlgebra& e, const FilterOrIdeal& u, Element d);
FilterOrIdeal right_set(const ExtendedContactAlgebra& e, const FilterOrIdeal& v, Element d);

struct DisjointnessAgreement {
  /// (a, b) ⊬ d for all a in u, b in v.
  bool no_pair_covers = false;
  /// left set of u at d is disjoint from v.
  bool left_disjoint = false;
  /// u is disjoint from the right set of v at d.
  bool right_disjoint = false;
  bool agree = false;
};

/// Throws InvalidArgument unless u and v are filters.
DisjointnessAgreement check_disjointness_agreement(const ExtendedContactAlgebra& e, const FilterOrIdeal& u,
                                                   const FilterOrIdeal& v, Element d);

/// Sweeps every filter (all ↑a, including the improper ↑0) and every d.
/// Verdicts "left_set_ideal" (u, d), "right_set_ideal" (v, d) and
/// "covering_disjointness_agree" (u, v, d), where filters are named by their
/// generator.
Report check_filter_properties(const ExtendedContactAlgebra& e, const Caps& caps = {});

}  // namespace mereo
