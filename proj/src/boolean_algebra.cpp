#include "mereo/boolean_algebra.hpp"

#include <string>

#include "mereo/error.hpp"

namespace mereo {

FiniteBooleanAlgebra::FiniteBooleanAlgebra(unsigned atom_count) : atoms_(atom_count) {
  if (atom_count == 0) throw InvalidArgument("a Boolean algebra with no atoms is degenerate (0 = 1)");
  if (atom_count > kMaxAtoms) {
    throw InvalidArgument("atom count " + std::to_string(atom_count) + " exceeds the supported maximum of " +
                          std::to_string(kMaxAtoms));
  }
}

namespace {
void require_element(const FiniteBooleanAlgebra& ba, Element e) {
  if (!ba.contains(e)) throw InvalidArgument("element " + std::to_string(e) + " is outside the algebra");
}
}  // namespace

ContactRelation::ContactRelation(FiniteBooleanAlgebra algebra) : algebra_(algebra), rows_(algebra.size(), 0) {}

ContactRelation ContactRelation::from_predicate(FiniteBooleanAlgebra algebra,
                                                const std::function<bool(Element, Element)>& p) {
  ContactRelation c(algebra);
  const auto n = static_cast<Element>(algebra.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (p(a, b)) c.rows_[a] |= ElementSet{1} << b;
  return c;
}

void ContactRelation::set(Element a, Element b, bool value) {
  require_element(algebra_, a);
  require_element(algebra_, b);
  if (value) {
    rows_[a] |= ElementSet{1} << b;
  } else {
    rows_[a] &= ~(ElementSet{1} << b);
  }
}

CoveringRelation::CoveringRelation(FiniteBooleanAlgebra algebra)
    : algebra_(algebra), rows_(algebra.size() * algebra.size(), 0) {}

CoveringRelation CoveringRelation::from_predicate(FiniteBooleanAlgebra algebra,
                                                  const std::function<bool(Element, Element, Element)>& p) {
  CoveringRelation v(algebra);
  const auto n = static_cast<Element>(algebra.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      ElementSet row = 0;
      for (Element d = 0; d < n; ++d)
        if (p(a, b, d)) row |= ElementSet{1} << d;
      v.rows_[v.index(a, b)] = row;
    }
  return v;
}

CoveringRelation CoveringRelation::discrete(FiniteBooleanAlgebra algebra) {
  return from_predicate(algebra, [&](Element a, Element b, Element d) { return algebra.leq(a & b, d); });
}

void CoveringRelation::set(Element a, Element b, Element d, bool value) {
  require_element(algebra_, a);
  require_element(algebra_, b);
  require_element(algebra_, d);
  if (value) {
    rows_[index(a, b)] |= ElementSet{1} << d;
  } else {
    rows_[index(a, b)] &= ~(ElementSet{1} << d);
  }
}

}  // namespace mereo
