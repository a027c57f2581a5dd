#pragma once

#include "mereo/boolean_algebra.hpp"
#include "mereo/caps.hpp"
#include "mereo/report.hpp"

/// Exhaustive axiom sweeps over finite algebras.
///
/// Every check enumerates all tuples of its quantified variables and reports,
/// per axiom, pass/fail plus the lexicographically least violating tuple.
/// The functions in `mereo` are the parallel word-level kernels; the ones in
/// `mereo::reference` are the literal nested loops, kept as their oracle.
///
/// Verdict names and witness variable orders:
///   CA1 (a,b,d,e)  CA2 (a,b,d,e)  CA3 (a,b)  CA4 (a)  CA5 (a,b)
///   ECA1 (a,b,d,e,f)  ECA2 (a,b,d,e,f)  ECA3 (a,b,f)  ECA4 (a,b,f)  ECA5 (a,b,f)
///   WECA1 (a,b,d,e,f)  WECA2 (a,b,f)  WECA3 (a,b,d,e,f)  WECA4 (a,b,d,f)
///   relative contact, with RC(g)(a,b) iff not (a,b) ⊢ g:
///     rc_monotone (a,b,d,e,g)  rc_join_split (a,b,d,e,g)  rc_nonzero (a,b,g)
///     rc_reflexive (a,g)  rc_symmetric (a,b,g)
///   WECA consequences:
///     zero_one_covers (a)  one_zero_covers (a)  left_join (a,b,d,e)
///     right_join (a,b,d,e)  left_down (a,b,d,e)  right_down (a,b,d,e)
namespace mereo {

AxiomReport check_ca(const ContactRelation& c, const Caps& caps = {});
AxiomReport check_eca(const CoveringRelation& v, const Caps& caps = {});
AxiomReport check_weca(const CoveringRelation& v, const Caps& caps = {});
AxiomReport check_relative_contact(const CoveringRelation& v, const Caps& caps = {});
AxiomReport check_weca_consequences(const CoveringRelation& v, const Caps& caps = {});

namespace reference {

AxiomReport check_ca(const ContactRelation& c, const Caps& caps = {});
AxiomReport check_eca(const CoveringRelation& v, const Caps& caps = {});
AxiomReport check_weca(const CoveringRelation& v, const Caps& caps = {});
AxiomReport check_relative_contact(const CoveringRelation& v, const Caps& caps = {});
AxiomReport check_weca_consequences(const CoveringRelation& v, const Caps& caps = {});

}  // namespace reference
}  // namespace mereo
