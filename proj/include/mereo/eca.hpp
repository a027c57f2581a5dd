#pragma once

#include <string>

#include "mereo/axioms.hpp"
#include "mereo/boolean_algebra.hpp"
#include "mereo/caps.hpp"
#include "mereo/error.hpp"
#include "mereo/topology.hpp"

namespace mereo {

enum class Strength { weca, eca };

std::string to_string(Strength s);

/// Thrown when a covering table fails the axiom suite it was supposed to satisfy.
class AxiomViolation : public Error {
 public:
  AxiomViolation(const std::string& what, AxiomReport report) : Error(what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// A Boolean algebra with a covering relation that has been checked against
/// the weak (WECA1-4) or full (ECA1-5) axiom suite. Only constructible
/// through verify(), so the strength tag is always truthful.
class ExtendedContactAlgebra {
 public:
  /// Runs the axiom suite named by `strength`; throws AxiomViolation if any axiom fails.
  static ExtendedContactAlgebra verify(CoveringRelation covering, Strength strength, const Caps& caps = {});
  /// Tags as ECA if ECA1-5 hold, else as WECA if WECA1-4 hold; throws AxiomViolation otherwise.
  static ExtendedContactAlgebra classify(CoveringRelation covering, const Caps& caps = {});

  const FiniteBooleanAlgebra& algebra() const { return covering_.algebra(); }
  const CoveringRelation& covering() const { return covering_; }
  Strength strength() const { return strength_; }
  bool covers(Element a, Element b, Element d) const { return covering_.covers(a, b, d); }

 private:
  ExtendedContactAlgebra(CoveringRelation covering, Strength strength)
      : covering_(std::move(covering)), strength_(strength) {}

  CoveringRelation covering_;
  Strength strength_;
};

/// C(a, b) iff not (a, b) ⊢ 0. Requires an ECA.
ContactRelation derived_contact(const ExtendedContactAlgebra& e);
/// RC(g)(a, b) iff not (a, b) ⊢ g. Requires an ECA.
ContactRelation relative_contact(const ExtendedContactAlgebra& e, Element g);

/// Requires an ECA.
AxiomReport check_relative_contact(const ExtendedContactAlgebra& e, const Caps& caps = {});
AxiomReport check_weca_consequences(const ExtendedContactAlgebra& e, const Caps& caps = {});

/// For all nonzero b, d with a = b ∪ d: not (b, d) ⊢ a⋆.
bool internally_connected_algebraic(const CoveringRelation& v, Element a);
bool internally_connected_algebraic(const ExtendedContactAlgebra& e, Element a);

/// Tabulates the covering of a space's regular closed sets. Atom i of the
/// result is atom i of the RC algebra; an element mask stands for the union
/// of its atoms. The result is verified as an ECA.
ExtendedContactAlgebra eca_from_rc(const RegularClosedAlgebra& alg, const Caps& caps = {});

}  // namespace mereo
