#include "mereo/filters.hpp"

#include "mereo/point_set.hpp"
#include "parallel.hpp"

namespace mereo {

namespace {

bool has(ElementSet s, Element a) { return (s >> a) & 1U; }

ElementSet all_elements(const FiniteBooleanAlgebra& ba) { return full_mask(ba.size()); }

}  // namespace

bool is_filter(const FiniteBooleanAlgebra& ba, ElementSet s) {
  if (s == 0 || (s & ~all_elements(ba)) != 0) return false;
  const auto n = static_cast<Element>(ba.size());
  for (Element a = 0; a < n; ++a) {
    if (!has(s, a)) continue;
    for (Element b = 0; b < n; ++b) {
      if (ba.leq(a, b) && !has(s, b)) return false;
      if (has(s, b) && !has(s, ba.meet(a, b))) return false;
    }
  }
  return true;
}

bool is_ideal(const FiniteBooleanAlgebra& ba, ElementSet s) {
  if (s == 0 || (s & ~all_elements(ba)) != 0) return false;
  const auto n = static_cast<Element>(ba.size());
  for (Element a = 0; a < n; ++a) {
    if (!has(s, a)) continue;
    for (Element b = 0; b < n; ++b) {
      if (ba.leq(b, a) && !has(s, b)) return false;
      if (has(s, b) && !has(s, ba.join(a, b))) return false;
    }
  }
  return true;
}

bool is_maximal_filter(const FiniteBooleanAlgebra& ba, ElementSet s) {
  if (!is_filter(ba, s) || has(s, ba.zero())) return false;
  const auto n = static_cast<Element>(ba.size());
  for (Element a = 0; a < n; ++a) {
    if (has(s, a) == has(s, ba.complement(a))) return false;
  }
  return true;
}

FilterOrIdeal principal_filter(const FiniteBooleanAlgebra& ba, Element a) {
  if (!ba.contains(a)) throw InvalidArgument("generator outside the algebra");
  ElementSet s = 0;
  detail::for_each_superset(a, ba.one(), [&](std::uint64_t b) {
    s |= ElementSet{1} << b;
    return false;
  });
  return {ba, s, SetKind::filter};
}

FilterOrIdeal make_filter(const FiniteBooleanAlgebra& ba, ElementSet s) {
  if (!is_filter(ba, s)) throw InvalidArgument("element set is not a filter");
  return {ba, s, SetKind::filter};
}

std::vector<FilterOrIdeal> maximal_filters(const FiniteBooleanAlgebra& ba) {
  std::vector<FilterOrIdeal> out;
  for (unsigned i = 0; i < ba.atom_count(); ++i) {
    FilterOrIdeal f = principal_filter(ba, ba.atom(i));
    if (!is_maximal_filter(ba, f.members)) throw InvariantViolation("principal filter of an atom is not maximal");
    out.push_back(f);
  }
  return out;
}

ElementSet left_members(const CoveringRelation& v, ElementSet u, Element d) {
  const auto n = static_cast<Element>(v.element_count());
  ElementSet out = 0;
  for (Element a = 0; a < n; ++a) {
    if (!has(u, a)) continue;
    for (Element b = 0; b < n; ++b) {
      if (v.covers(a, b, d)) out |= ElementSet{1} << b;
    }
  }
  return out;
}

ElementSet right_members(const CoveringRelation& v, ElementSet vset, Element d) {
  const auto n = static_cast<Element>(v.element_count());
  ElementSet out = 0;
  for (Element b = 0; b < n; ++b) {
    if (!has(vset, b)) continue;
    for (Element a = 0; a < n; ++a) {
      if (v.covers(a, b, d)) out |= ElementSet{1} << a;
    }
  }
  return out;
}

namespace {

void require_filter(const ExtendedContactAlgebra& e, const FilterOrIdeal& f) {
  if (f.kind != SetKind::filter || !(f.algebra == e.algebra()) || !is_filter(e.algebra(), f.members)) {
    throw InvalidArgument("argument is not a filter of this algebra");
  }
}

FilterOrIdeal checked_ideal(const FiniteBooleanAlgebra& ba, ElementSet s, const char* which) {
  if (!is_ideal(ba, s)) throw InvariantViolation(std::string(which) + " set is not an ideal");
  return {ba, s, SetKind::ideal};
}

}  // namespace

FilterOrIdeal left_set(const ExtendedContactAlgebra& e, const FilterOrIdeal& u, Element d) {
  require_filter(e, u);
  if (!e.algebra().contains(d)) throw InvalidArgument("element outside the algebra");
  return checked_ideal(e.algebra(), left_members(e.covering(), u.members, d), "left");
}

FilterOrIdeal right_set(const ExtendedContactAlgebra& e, const FilterOrIdeal& v, Element d) {
  require_filter(e, v);
  if (!e.algebra().contains(d)) throw InvalidArgument("element outside the algebra");
  return checked_ideal(e.algebra(), right_members(e.covering(), v.members, d), "right");
}

DisjointnessAgreement check_disjointness_agreement(const ExtendedContactAlgebra& e, const FilterOrIdeal& u,
                                                   const FilterOrIdeal& v, Element d) {
  require_filter(e, u);
  require_filter(e, v);
  if (!e.algebra().contains(d)) throw InvalidArgument("element outside the algebra");
  const CoveringRelation& cov = e.covering();
  const auto n = static_cast<Element>(e.algebra().size());
  DisjointnessAgreement r;
  r.no_pair_covers = true;
  for (Element a = 0; a < n && r.no_pair_covers; ++a) {
    if (!u.contains(a)) continue;
    for (Element b = 0; b < n; ++b) {
      if (v.contains(b) && cov.covers(a, b, d)) {
        r.no_pair_covers = false;
        break;
      }
    }
  }
  r.left_disjoint = (left_members(cov, u.members, d) & v.members) == 0;
  r.right_disjoint = (u.members & right_members(cov, v.members, d)) == 0;
  r.agree = r.no_pair_covers == r.left_disjoint && r.left_disjoint == r.right_disjoint;
  return r;
}

Report check_filter_properties(const ExtendedContactAlgebra& e, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = e.algebra();
  require_cap(ba.atom_count(), caps.max_axiom_atoms, "atom count for filter sweeps");
  const auto n = static_cast<Element>(ba.size());
  std::vector<FilterOrIdeal> filters;
  for (Element g = 0; g < n; ++g) filters.push_back(principal_filter(ba, g));
  const CoveringRelation& cov = e.covering();

  Report r;
  r.verdicts.push_back(detail::verdict("left_set_ideal", detail::first_witness(n, [&](std::size_t g) {
    std::optional<detail::Witness> w;
    for (Element d = 0; d < n && !w; ++d) {
      if (!is_ideal(ba, left_members(cov, filters[g].members, d))) w = detail::Witness{g, d};
    }
    return w;
  })));
  r.verdicts.push_back(detail::verdict("right_set_ideal", detail::first_witness(n, [&](std::size_t g) {
    std::optional<detail::Witness> w;
    for (Element d = 0; d < n && !w; ++d) {
      if (!is_ideal(ba, right_members(cov, filters[g].members, d))) w = detail::Witness{g, d};
    }
    return w;
  })));
  r.verdicts.push_back(detail::verdict("covering_disjointness_agree", detail::first_witness(n, [&](std::size_t g) {
    for (Element h = 0; h < n; ++h) {
      for (Element d = 0; d < n; ++d) {
        if (!check_disjointness_agreement(e, filters[g], filters[h], d).agree) {
          return std::optional{detail::Witness{g, h, d}};
        }
      }
    }
    return std::optional<detail::Witness>{};
  })));
  return r;
}

}  // namespace mereo
