#include "mereo/axioms.hpp"

#include "mereo/point_set.hpp"
#include "parallel.hpp"

namespace mereo {

namespace {

using detail::first_witness;
using detail::for_each_subset;
using detail::for_each_superset;
using detail::lowest;
using detail::verdict;
using detail::Witness;
using Probe = std::optional<Witness>;

void require_sweep(const FiniteBooleanAlgebra& ba, const Caps& caps) {
  require_cap(ba.atom_count(), caps.max_axiom_atoms, "atom count for exhaustive axiom sweeps");
  require_cap(ba.size(), caps.max_elements, "element count");
}

// upsets[a] = {f : a ≤ f}
std::vector<ElementSet> upsets(const FiniteBooleanAlgebra& ba) {
  const auto n = static_cast<Element>(ba.size());
  std::vector<ElementSet> up(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element f = 0; f < n; ++f)
      if (ba.leq(a, f)) up[a] |= ElementSet{1} << f;
  return up;
}

}  // namespace

AxiomReport check_ca(const ContactRelation& c, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = c.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  const Element one = ba.one();
  const auto up = upsets(ba);
  std::vector<ElementSet> col(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (c.holds(a, b)) col[b] |= ElementSet{1} << a;

  AxiomReport r;
  r.verdicts.push_back(verdict("CA1", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (ElementSet bs = c.row(a); bs != 0; bs &= bs - 1) {
      const Element b = static_cast<Element>(lowest(bs));
      Probe w;
      for_each_superset(a, one, [&](std::uint64_t d) {
        if (ElementSet bad = up[b] & ~c.row(static_cast<Element>(d))) {
          w = Witness{a, b, d, lowest(bad)};
          return true;
        }
        return false;
      });
      if (w) return w;
    }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("CA2", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      for (Element d = 0; d < n; ++d)
        for (Element e = 0; e < n; ++e) {
          if (c.holds(a | d, b | e) && !(c.holds(a, b) || c.holds(a, e) || c.holds(d, b) || c.holds(d, e)))
            return Witness{a, b, d, e};
        }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("CA3", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    const ElementSet bad = a == 0 ? c.row(a) : (c.row(a) & 1U);
    if (bad) return Witness{a, lowest(bad)};
    return std::nullopt;
  })));

  Probe ca4;
  for (Element a = 1; a < n && !ca4; ++a)
    if (!c.holds(a, a)) ca4 = Witness{a};
  r.verdicts.push_back(verdict("CA4", ca4));

  r.verdicts.push_back(verdict("CA5", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    if (ElementSet bad = c.row(a) & ~col[a]) return Witness{a, lowest(bad)};
    return std::nullopt;
  })));
  return r;
}

AxiomReport check_eca(const CoveringRelation& v, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  const auto up = upsets(ba);

  AxiomReport r;
  r.verdicts.push_back(verdict("ECA1", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      const ElementSet fs = v.row(a, b);
      if (fs == 0) continue;
      for (Element d = 0; d < n; ++d)
        for (Element e = 0; e < n; ++e) {
          const ElementSet target = v.row(a | d, b | e);
          for (ElementSet rest = fs; rest != 0; rest &= rest - 1) {
            const auto f = static_cast<Element>(lowest(rest));
            if (!((target >> (d | e | f)) & 1U)) return Witness{a, b, d, e, f};
          }
        }
    }
    return std::nullopt;
  })));

  // For fixed (a, b) with F = {f : (a,b) ⊢ f}: every (d, e) in F × F must have
  // its own covering set inside F.
  r.verdicts.push_back(verdict("ECA2", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      const ElementSet fs = v.row(a, b);
      for (ElementSet ds = fs; ds != 0; ds &= ds - 1) {
        const auto d = static_cast<Element>(lowest(ds));
        for (ElementSet es = fs; es != 0; es &= es - 1) {
          const auto e = static_cast<Element>(lowest(es));
          if (ElementSet bad = v.row(d, e) & ~fs) return Witness{a, b, d, e, lowest(bad)};
        }
      }
    }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("ECA3", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      if (ElementSet bad = (up[a] | up[b]) & ~v.row(a, b)) return Witness{a, b, lowest(bad)};
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("ECA4", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      if (ElementSet bad = v.row(a, b) & ~up[a & b]) return Witness{a, b, lowest(bad)};
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("ECA5", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      if (ElementSet bad = v.row(a, b) & ~v.row(b, a)) return Witness{a, b, lowest(bad)};
    return std::nullopt;
  })));
  return r;
}

AxiomReport check_weca(const CoveringRelation& v, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  const Element one = ba.one();
  const ElementSet all = full_mask(n);
  const auto up = upsets(ba);

  AxiomReport r;
  r.verdicts.push_back(verdict("WECA1", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      const ElementSet fs = v.row(a, b);
      Probe w;
      for_each_superset(a, one, [&](std::uint64_t d) {
        return for_each_superset(b, one, [&](std::uint64_t e) {
          if (ElementSet bad = v.row(static_cast<Element>(d), static_cast<Element>(e)) & ~fs) {
            w = Witness{a, b, d, e, lowest(bad)};
            return true;
          }
          return false;
        });
      });
      if (w) return w;
    }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("WECA2", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      if (a != 0 && b != 0) continue;
      if (ElementSet bad = all & ~v.row(a, b)) return Witness{a, b, lowest(bad)};
    }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("WECA3", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      const ElementSet fs = v.row(a, b);
      if (fs == 0) continue;
      for (Element d = 0; d < n; ++d)
        for (Element e = 0; e < n; ++e) {
          const ElementSet both = fs & v.row(d, e);
          if (ElementSet bad = both & ~(v.row(a & d, b | e) & v.row(a | d, b & e)))
            return Witness{a, b, d, e, lowest(bad)};
        }
    }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("WECA4", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      const ElementSet fs = v.row(a, b);
      for (ElementSet ds = fs; ds != 0; ds &= ds - 1) {
        const auto d = lowest(ds);
        if (ElementSet bad = up[d] & ~fs) return Witness{a, b, d, lowest(bad)};
      }
    }
    return std::nullopt;
  })));
  return r;
}

AxiomReport check_relative_contact(const CoveringRelation& v, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  const Element one = ba.one();
  const ElementSet all = full_mask(n);
  const auto up = upsets(ba);
  // Set of g with RC(g)(a, b).
  auto rc = [&](Element a, Element b) { return all & ~v.row(a, b); };

  AxiomReport r;
  r.verdicts.push_back(verdict("rc_monotone", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      const ElementSet gs = rc(a, b);
      if (gs == 0) continue;
      Probe w;
      for_each_superset(a, one, [&](std::uint64_t d) {
        return for_each_superset(b, one, [&](std::uint64_t e) {
          if (ElementSet bad = gs & v.row(static_cast<Element>(d), static_cast<Element>(e))) {
            w = Witness{a, b, d, e, lowest(bad)};
            return true;
          }
          return false;
        });
      });
      if (w) return w;
    }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("rc_join_split", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      for (Element d = 0; d < n; ++d)
        for (Element e = 0; e < n; ++e) {
          const ElementSet bad = rc(a | d, b | e) & v.row(a, b) & v.row(a, e) & v.row(d, b) & v.row(d, e);
          if (bad) return Witness{a, b, d, e, lowest(bad)};
        }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("rc_nonzero", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      if (ElementSet bad = rc(a, b) & (up[a] | up[b])) return Witness{a, b, lowest(bad)};
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("rc_reflexive", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    if (ElementSet bad = all & ~up[a] & v.row(a, a)) return Witness{a, lowest(bad)};
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("rc_symmetric", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      if (ElementSet bad = rc(a, b) & v.row(b, a)) return Witness{a, b, lowest(bad)};
    return std::nullopt;
  })));
  return r;
}

AxiomReport check_weca_consequences(const CoveringRelation& v, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = v.algebra();
  require_sweep(ba, caps);
  const auto n = static_cast<Element>(ba.size());
  const Element one = ba.one();
  const ElementSet all = full_mask(n);

  AxiomReport r;
  auto single = [&](const char* name, ElementSet row) {
    Probe w;
    if (ElementSet bad = all & ~row) w = Witness{lowest(bad)};
    r.verdicts.push_back(verdict(name, w));
  };
  single("zero_one_covers", v.row(0, one));
  single("one_zero_covers", v.row(one, 0));

  r.verdicts.push_back(verdict("left_join", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      for (Element d = 0; d < n; ++d)
        if (ElementSet bad = v.row(a, d) & v.row(b, d) & ~v.row(a | b, d)) return Witness{a, b, d, lowest(bad)};
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("right_join", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b)
      for (Element d = 0; d < n; ++d)
        if (ElementSet bad = v.row(a, b) & v.row(a, d) & ~v.row(a, b | d)) return Witness{a, b, d, lowest(bad)};
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("left_down", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      const ElementSet es = v.row(a, b);
      Probe w;
      for_each_subset(a, [&](std::uint64_t d) {
        if (ElementSet bad = es & ~v.row(static_cast<Element>(d), b)) {
          w = Witness{a, b, d, lowest(bad)};
          return true;
        }
        return false;
      });
      if (w) return w;
    }
    return std::nullopt;
  })));

  r.verdicts.push_back(verdict("right_down", first_witness(n, [&](std::size_t i) -> Probe {
    const auto a = static_cast<Element>(i);
    for (Element b = 0; b < n; ++b) {
      const ElementSet es = v.row(a, b);
      Probe w;
      for_each_subset(b, [&](std::uint64_t d) {
        if (ElementSet bad = es & ~v.row(a, static_cast<Element>(d))) {
          w = Witness{a, b, d, lowest(bad)};
          return true;
        }
        return false;
      });
      if (w) return w;
    }
    return std::nullopt;
  })));
  return r;
}

}  // namespace mereo
