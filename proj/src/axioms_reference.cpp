// Literal transcriptions of each axiom as nested loops over all tuples, in
// lexicographic order, stopping at the first violation. Serial on purpose:
// these are the oracle for the kernels in axioms.cpp.

#include <array>
#include <optional>

#include "mereo/axioms.hpp"

namespace mereo::reference {

namespace {

template <std::size_t K, class Fails>
Verdict sweep(const char* name, Element n, Fails fails) {
  std::array<Element, K> t{};
  while (true) {
    if (fails(t)) {
      Verdict v{name, false, {}};
      v.witness.assign(t.begin(), t.end());
      return v;
    }
    std::size_t pos = K;
    while (pos > 0) {
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
      if (pos == 0) return Verdict{name, true, {}};
    }
  }
}

void require_sweep(const FiniteBooleanAlgebra& ba, const Caps& caps) {
  require_cap(ba.atom_count(), caps.max_axiom_atoms, "atom count for exhaustive axiom sweeps");
  require_cap(ba.size(), caps.max_elements, "element count");
}

}  // namespace

AxiomReport check_ca(const ContactRelation& c, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = c.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  auto C = [&](Element x, Element y) { return c.holds(x, y); };
  AxiomReport r;
  r.verdicts.push_back(sweep<4>("CA1", n, [&](const auto& t) {
    auto [a, b, d, e] = t;
    return C(a, b) && ba.leq(a, d) && ba.leq(b, e) && !C(d, e);
  }));
  r.verdicts.push_back(sweep<4>("CA2", n, [&](const auto& t) {
    auto [a, b, d, e] = t;
    return C(ba.join(a, d), ba.join(b, e)) && !(C(a, b) || C(a, e) || C(d, b) || C(d, e));
  }));
  r.verdicts.push_back(sweep<2>("CA3", n, [&](const auto& t) {
    auto [a, b] = t;
    return C(a, b) && !(a != ba.zero() && b != ba.zero());
  }));
  r.verdicts.push_back(sweep<1>("CA4", n, [&](const auto& t) { return t[0] != ba.zero() && !C(t[0], t[0]); }));
  r.verdicts.push_back(sweep<2>("CA5", n, [&](const auto& t) {
    auto [a, b] = t;
    return C(a, b) && !C(b, a);
  }));
  return r;
}

AxiomReport check_eca(const CoveringRelation& v, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  auto V = [&](Element x, Element y, Element z) { return v.covers(x, y, z); };
  AxiomReport r;
  r.verdicts.push_back(sweep<5>("ECA1", n, [&](const auto& t) {
    auto [a, b, d, e, f] = t;
    return V(a, b, f) && !V(ba.join(a, d), ba.join(b, e), ba.join(ba.join(d, e), f));
  }));
  r.verdicts.push_back(sweep<5>("ECA2", n, [&](const auto& t) {
    auto [a, b, d, e, f] = t;
    return V(a, b, d) && V(a, b, e) && V(d, e, f) && !V(a, b, f);
  }));
  r.verdicts.push_back(sweep<3>("ECA3", n, [&](const auto& t) {
    auto [a, b, f] = t;
    return (ba.leq(a, f) || ba.leq(b, f)) && !V(a, b, f);
  }));
  r.verdicts.push_back(sweep<3>("ECA4", n, [&](const auto& t) {
    auto [a, b, f] = t;
    return V(a, b, f) && !ba.leq(ba.meet(a, b), f);
  }));
  r.verdicts.push_back(sweep<3>("ECA5", n, [&](const auto& t) {
    auto [a, b, f] = t;
    return V(a, b, f) && !V(b, a, f);
  }));
  return r;
}

AxiomReport check_weca(const CoveringRelation& v, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  auto V = [&](Element x, Element y, Element z) { return v.covers(x, y, z); };
  AxiomReport r;
  r.verdicts.push_back(sweep<5>("WECA1", n, [&](const auto& t) {
    auto [a, b, d, e, f] = t;
    return ba.leq(a, d) && ba.leq(b, e) && V(d, e, f) && !V(a, b, f);
  }));
  r.verdicts.push_back(sweep<3>("WECA2", n, [&](const auto& t) {
    auto [a, b, f] = t;
    return (a == ba.zero() || b == ba.zero()) && !V(a, b, f);
  }));
  r.verdicts.push_back(sweep<5>("WECA3", n, [&](const auto& t) {
    auto [a, b, d, e, f] = t;
    return V(a, b, f) && V(d, e, f) &&
           !(V(ba.meet(a, d), ba.join(b, e), f) && V(ba.join(a, d), ba.meet(b, e), f));
  }));
  r.verdicts.push_back(sweep<4>("WECA4", n, [&](const auto& t) {
    auto [a, b, d, f] = t;
    return V(a, b, d) && ba.leq(d, f) && !V(a, b, f);
  }));
  return r;
}

AxiomReport check_relative_contact(const CoveringRelation& v, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  auto RC = [&](Element g, Element x, Element y) { return !v.covers(x, y, g); };
  AxiomReport r;
  r.verdicts.push_back(sweep<5>("rc_monotone", n, [&](const auto& t) {
    auto [a, b, d, e, g] = t;
    return RC(g, a, b) && ba.leq(a, d) && ba.leq(b, e) && !RC(g, d, e);
  }));
  r.verdicts.push_back(sweep<5>("rc_join_split", n, [&](const auto& t) {
    auto [a, b, d, e, g] = t;
    return RC(g, ba.join(a, d), ba.join(b, e)) && !(RC(g, a, b) || RC(g, a, e) || RC(g, d, b) || RC(g, d, e));
  }));
  r.verdicts.push_back(sweep<3>("rc_nonzero", n, [&](const auto& t) {
    auto [a, b, g] = t;
    return RC(g, a, b) && !(!ba.leq(a, g) && !ba.leq(b, g));
  }));
  r.verdicts.push_back(sweep<2>("rc_reflexive", n, [&](const auto& t) {
    auto [a, g] = t;
    return !ba.leq(a, g) && !RC(g, a, a);
  }));
  r.verdicts.push_back(sweep<3>("rc_symmetric", n, [&](const auto& t) {
    auto [a, b, g] = t;
    return RC(g, a, b) && !RC(g, b, a);
  }));
  return r;
}

AxiomReport check_weca_consequences(const CoveringRelation& v, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  auto V = [&](Element x, Element y, Element z) { return v.covers(x, y, z); };
  AxiomReport r;
  r.verdicts.push_back(sweep<1>("zero_one_covers", n, [&](const auto& t) { return !V(ba.zero(), ba.one(), t[0]); }));
  r.verdicts.push_back(sweep<1>("one_zero_covers", n, [&](const auto& t) { return !V(ba.one(), ba.zero(), t[0]); }));
  r.verdicts.push_back(sweep<4>("left_join", n, [&](const auto& t) {
    auto [a, b, d, e] = t;
    return V(a, d, e) && V(b, d, e) && !V(ba.join(a, b), d, e);
  }));
  r.verdicts.push_back(sweep<4>("right_join", n, [&](const auto& t) {
    auto [a, b, d, e] = t;
    return V(a, b, e) && V(a, d, e) && !V(a, ba.join(b, d), e);
  }));
  r.verdicts.push_back(sweep<4>("left_down", n, [&](const auto& t) {
    auto [a, b, d, e] = t;
    return V(a, b, e) && ba.leq(d, a) && !V(d, b, e);
  }));
  r.verdicts.push_back(sweep<4>("right_down", n, [&](const auto& t) {
    auto [a, b, d, e] = t;
    return V(a, b, e) && ba.leq(d, b) && !V(a, d, e);
  }));
  return r;
}

}  // namespace mereo::reference
