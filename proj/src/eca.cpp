#include "mereo/eca.hpp"

namespace mereo {

std::string to_string(Strength s) { return s == Strength::eca ? "ECA" : "WECA"; }

namespace {

std::string failed_names(const AxiomReport& r) {
  std::string out;
  for (const Verdict& v : r.verdicts) {
    if (v.pass) continue;
    if (!out.empty()) out += ", ";
    out += v.name;
  }
  return out;
}

void require_eca(const ExtendedContactAlgebra& e, const char* op) {
  if (e.strength() != Strength::eca) {
    throw InvalidArgument(std::string(op) + " requires an algebra verified against ECA1-ECA5");
  }
}

}  // namespace

ExtendedContactAlgebra ExtendedContactAlgebra::verify(CoveringRelation covering, Strength strength, const Caps& caps) {
  AxiomReport r = strength == Strength::eca ? check_eca(covering, caps) : check_weca(covering, caps);
  if (!r.all_pass()) {
    throw AxiomViolation("covering fails " + to_string(strength) + " axioms: " + failed_names(r), std::move(r));
  }
  return {std::move(covering), strength};
}

ExtendedContactAlgebra ExtendedContactAlgebra::classify(CoveringRelation covering, const Caps& caps) {
  if (check_eca(covering, caps).all_pass()) return {std::move(covering), Strength::eca};
  AxiomReport r = check_weca(covering, caps);
  if (!r.all_pass()) {
    throw AxiomViolation("covering fails WECA axioms: " + failed_names(r), std::move(r));
  }
  return {std::move(covering), Strength::weca};
}

ContactRelation derived_contact(const ExtendedContactAlgebra& e) {
  require_eca(e, "derived_contact");
  return relative_contact(e, e.algebra().zero());
}

ContactRelation relative_contact(const ExtendedContactAlgebra& e, Element g) {
  require_eca(e, "relative_contact");
  if (!e.algebra().contains(g)) throw InvalidArgument("parameter g is outside the algebra");
  return ContactRelation::from_predicate(e.algebra(), [&](Element a, Element b) { return !e.covers(a, b, g); });
}

AxiomReport check_relative_contact(const ExtendedContactAlgebra& e, const Caps& caps) {
  require_eca(e, "check_relative_contact");
  return check_relative_contact(e.covering(), caps);
}

AxiomReport check_weca_consequences(const ExtendedContactAlgebra& e, const Caps& caps) {
  return check_weca_consequences(e.covering(), caps);
}

bool internally_connected_algebraic(const CoveringRelation& v, Element a) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  if (!ba.contains(a)) throw InvalidArgument("element outside the algebra");
  const Element rest = ba.complement(a);
  // b and d range over nonzero elements below a whose join is a.
  for (Element b = a; b != 0; b = (b - 1) & a) {
    for (Element d = a; d != 0; d = (d - 1) & a) {
      if ((b | d) == a && v.covers(b, d, rest)) return false;
    }
  }
  return true;
}

bool internally_connected_algebraic(const ExtendedContactAlgebra& e, Element a) {
  return internally_connected_algebraic(e.covering(), a);
}

ExtendedContactAlgebra eca_from_rc(const RegularClosedAlgebra& alg, const Caps& caps) {
  require_cap(alg.carrier().size(), caps.max_elements, "regular closed carrier size");
  const auto k = static_cast<unsigned>(alg.atom_count());
  const FiniteBooleanAlgebra ba(k);
  if (ba.size() != alg.carrier().size()) {
    throw InvariantViolation("regular closed carrier is not the join-closure of its atoms");
  }
  std::vector<PointSet> sets(ba.size());
  for (Element m = 0; m < ba.size(); ++m) {
    sets[m] = alg.from_atom_mask(m);
    if (!alg.contains(sets[m])) throw InvariantViolation("join of atoms is not regular closed");
  }
  auto v = CoveringRelation::from_predicate(
      ba, [&](Element a, Element b, Element d) { return (sets[a] & sets[b]).subset_of(sets[d]); });
  return ExtendedContactAlgebra::verify(std::move(v), Strength::eca, caps);
}

}  // namespace mereo
