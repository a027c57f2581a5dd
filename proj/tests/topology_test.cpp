#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mereo/axioms.hpp"
#include "mereo/eca.hpp"
#include "mereo/error.hpp"
#include "mereo/topology.hpp"
#include "support/test_support.hpp"

using namespace mereo;
using namespace mereo::testing;

namespace {

// Example 1 uses labels 1..7; point k is index k-1.
PointSet X(std::initializer_list<std::size_t> labels) {
  std::vector<std::size_t> idx;
  for (auto l : labels) idx.push_back(l - 1);
  return PointSet::of(7, idx);
}

// X' uses labels 2..7; point k is index k-2.
PointSet Xp(std::initializer_list<std::size_t> labels) {
  std::vector<std::size_t> idx;
  for (auto l : labels) idx.push_back(l - 2);
  return PointSet::of(6, idx);
}

bool has_open(const FiniteTopology& t, const PointSet& a) {
  return std::find(t.opens().begin(), t.opens().end(), a) != t.opens().end();
}

}  // namespace

TEST(PointSet, RejectsOutOfRangeMembers) {
  EXPECT_THROW(PointSet(3, 0b1000), InvalidArgument);
  EXPECT_THROW(PointSet(0, 0), InvalidArgument);
  EXPECT_THROW(PointSet::of(2, {2}), InvalidArgument);
  EXPECT_EQ(PointSet::of(4, {0, 2}).to_string(), "{0,2}");
}

TEST(PointSet, EqualityIsExtensional) {
  EXPECT_EQ(PointSet::of(5, {1, 3}), PointSet::of(5, {3, 1, 1}));
  EXPECT_NE(PointSet::of(5, {1}), PointSet::of(6, {1}));
}

TEST(GenerateTopology, Example1ContainsExpectedOpens) {
  const FiniteTopology t = example1_x();
  for (const auto& u : {X({2}), X({3}), X({7}), X({2, 3}), X({1, 2, 3})}) EXPECT_TRUE(has_open(t, u)) << u.to_string();
}

TEST(GenerateTopology, MatchesUnionsOfFiniteIntersections) {
  const std::vector<PointSet> sb{X({1, 2, 3}), X({2, 5, 7}), X({3, 6, 7})};
  EXPECT_EQ(example1_x().opens(), opens_by_basis(7, sb));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<PointSet> s;
    for (std::size_t j = rng() % 5; j > 0; --j) s.emplace_back(n, rng() & full_mask(n));
    EXPECT_EQ(generate_topology(n, s).opens(), opens_by_basis(n, s));
  }
}

TEST(GenerateTopology, TrivialCases) {
  const auto ind = indiscrete(3);
  EXPECT_EQ(ind.opens(), (std::vector<PointSet>{PointSet::empty(3), PointSet::full(3)}));
  EXPECT_EQ(discrete(2).opens().size(), 4U);
}

TEST(GenerateTopology, RejectsBadInput) {
  EXPECT_THROW(generate_topology(0, {}), InvalidArgument);
  const std::vector<PointSet> wrong{PointSet::of(4, {3})};
  EXPECT_THROW(generate_topology(3, wrong), InvalidArgument);
}

TEST(GenerateTopology, HonoursOpenCap) {
  std::vector<PointSet> sb;
  for (std::size_t i = 0; i < 10; ++i) sb.push_back(PointSet::of(10, {i}));
  Caps caps;
  caps.max_opens = 100;
  EXPECT_THROW(generate_topology(10, sb, caps), CapExceeded);
}

TEST(FiniteTopology, FromOpensValidatesAxioms) {
  EXPECT_THROW(FiniteTopology::from_opens(2, {PointSet::full(2)}), InvalidArgument);
  EXPECT_THROW(FiniteTopology::from_opens(2, {PointSet::empty(2), PointSet::full(2), PointSet::of(2, {0}),
                                              PointSet::of(2, {1}), PointSet::of(3, {0})}),
               InvalidArgument);
  EXPECT_THROW(FiniteTopology::from_opens(3, {PointSet::empty(3), PointSet::full(3), PointSet::of(3, {0, 1}),
                                              PointSet::of(3, {1, 2})}),
               InvalidArgument);
}

TEST(AllTopologies, CountsMatchKnownValues) {
  EXPECT_EQ(all_topologies(1).size(), 1U);
  EXPECT_EQ(all_topologies(2).size(), 4U);
  EXPECT_EQ(all_topologies(3).size(), 29U);
}

TEST(InteriorClosure, Example1Values) {
  const FiniteTopology t = example1_x();
  EXPECT_EQ(interior(t, X({1, 2, 3, 4, 5, 6})), X({1, 2, 3}));
  EXPECT_EQ(closure(t, X({1, 2, 3})), X({1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(closure(t, X({7})), X({4, 5, 6, 7}));
  EXPECT_EQ(closure(t, PointSet::empty(7)), PointSet::empty(7));
  EXPECT_EQ(interior(t, t.universe()), t.universe());
  EXPECT_EQ(interior(indiscrete(3), PointSet::of(3, {0, 1})), PointSet::empty(3));
}

TEST(InteriorClosure, AgreeWithUnionAndIntersectionOracles) {
  for (const auto& [name, t] : curated_topologies()) {
    const std::size_t n = t.universe_size();
    for (std::uint64_t s = 0; s <= full_mask(n); ++s) {
      const PointSet a(n, s);
      ASSERT_EQ(interior(t, a), interior_oracle(t, a)) << name << " " << a.to_string();
      ASSERT_EQ(closure(t, a), closure_oracle(t, a)) << name << " " << a.to_string();
    }
  }
}

TEST(InteriorClosure, IdempotenceAndDuality) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 10;
    const FiniteTopology t = random_topology(rng, n);
    for (std::uint64_t s = 0; s <= full_mask(n); ++s) {
      const PointSet a(n, s);
      ASSERT_EQ(interior(t, interior(t, a)), interior(t, a));
      ASSERT_EQ(closure(t, closure(t, a)), closure(t, a));
      ASSERT_EQ(closure(t, a), interior(t, a.complement()).complement());
      ASSERT_TRUE(t.is_open(interior(t, a)));
      ASSERT_TRUE(t.is_closed(closure(t, a)));
    }
  }
}

TEST(RegularClosed, Example1Values) {
  const FiniteTopology t = example1_x();
  EXPECT_TRUE(is_regular_closed(t, X({1, 2, 3, 4, 5, 6})));
  EXPECT_TRUE(is_regular_closed(t, PointSet::empty(7)));
  EXPECT_TRUE(is_regular_closed(t, t.universe()));
  EXPECT_FALSE(is_regular_closed(t, X({7})));
  EXPECT_TRUE(is_regular_open(t, X({7})));
}

TEST(RcAlgebra, TrivialCarriers) {
  const RegularClosedAlgebra d(discrete(2));
  EXPECT_EQ(d.carrier().size(), 4U);
  ASSERT_EQ(d.atom_count(), 2U);
  EXPECT_EQ(d.atom(0), PointSet::of(2, {0}));
  EXPECT_EQ(d.atom(1), PointSet::of(2, {1}));
  const RegularClosedAlgebra i(indiscrete(3));
  EXPECT_EQ(i.carrier(), (std::vector<PointSet>{PointSet::empty(3), PointSet::full(3)}));
}

TEST(RcAlgebra, Example1ComplementPair) {
  const RegularClosedAlgebra alg(example1_x());
  EXPECT_TRUE(alg.contains(X({1, 2, 3, 4, 5, 6})));
  EXPECT_TRUE(alg.contains(X({4, 5, 6, 7})));
  EXPECT_EQ(alg.complement(X({1, 2, 3, 4, 5, 6})), X({4, 5, 6, 7}));
  EXPECT_EQ(alg.complement(X({4, 5, 6, 7})), X({1, 2, 3, 4, 5, 6}));
  EXPECT_THROW(alg.index_of(X({7})), InvalidArgument);
}

TEST(RcAlgebra, CarrierMatchesBruteForce) {
  for (const auto& [name, t] : curated_topologies()) {
    EXPECT_EQ(RegularClosedAlgebra(t).carrier(), rc_bruteforce(t)) << name;
  }
}

TEST(RcAlgebra, BooleanLawsAndAtomDecomposition) {
  for (const auto& [name, t] : curated_topologies()) {
    const RegularClosedAlgebra alg(t);
    const auto& c = alg.carrier();
    if (c.size() > 32) continue;
    for (const auto& a : c) {
      ASSERT_TRUE(alg.contains(alg.complement(a))) << name;
      ASSERT_EQ(alg.complement(alg.complement(a)), a) << name;
      ASSERT_EQ(alg.join(a, alg.complement(a)), alg.one()) << name;
      ASSERT_EQ(alg.meet(a, alg.complement(a)), alg.zero()) << name;
      ASSERT_EQ(alg.from_atom_mask(alg.atom_mask(a)), a) << name;
      for (const auto& b : c) {
        ASSERT_TRUE(alg.contains(alg.join(a, b))) << name;
        ASSERT_TRUE(alg.contains(alg.meet(a, b))) << name;
        ASSERT_EQ(alg.meet(a, b), alg.complement(alg.join(alg.complement(a), alg.complement(b)))) << name;
        ASSERT_EQ(alg.meet(a, alg.join(a, b)), a) << name;
        for (const auto& d : c) {
          ASSERT_EQ(alg.meet(a, alg.join(b, d)), alg.join(alg.meet(a, b), alg.meet(a, d))) << name;
        }
      }
    }
    EXPECT_EQ(c.size(), std::size_t{1} << alg.atom_count()) << name;
  }
}

TEST(RcContact, Example1AndTrivialCases) {
  const RegularClosedAlgebra alg(example1_x());
  const PointSet a = X({1, 2, 3, 4, 5, 6});
  EXPECT_TRUE(rc_contact(alg, a, X({4, 5, 6, 7})));
  for (const auto& b : alg.carrier()) {
    EXPECT_FALSE(rc_contact(alg, alg.zero(), b));
    if (!b.empty()) EXPECT_TRUE(rc_contact(alg, b, b));
  }
  EXPECT_THROW(rc_contact(alg, X({7}), a), InvalidArgument);
}

TEST(RcCovering, Example1AndTrivialCases) {
  const RegularClosedAlgebra alg(example1_x());
  const PointSet a = X({1, 2, 3, 4, 5, 6});
  const PointSet b = X({4, 5, 6, 7});
  EXPECT_TRUE(rc_covering(alg, a, b, b));
  EXPECT_FALSE(rc_covering(alg, a, b, alg.zero()));
  for (const auto& x : alg.carrier()) EXPECT_TRUE(rc_covering(alg, x, a, alg.one()));
  EXPECT_THROW(rc_covering(alg, a, b, X({7})), InvalidArgument);
}

TEST(RcContact, SatisfiesContactAndCoveringAxioms) {
  for (const auto& [name, t] : curated_topologies()) {
    const RegularClosedAlgebra alg(t);
    if (alg.atom_count() > 5) continue;
    const FiniteBooleanAlgebra ba(static_cast<unsigned>(std::max<std::size_t>(alg.atom_count(), 1)));
    if (alg.atom_count() == 0) continue;
    const auto c = ContactRelation::from_predicate(
        ba, [&](Element a, Element b) { return rc_contact(alg, alg.from_atom_mask(a), alg.from_atom_mask(b)); });
    EXPECT_TRUE(check_ca(c).all_pass()) << name;
    const auto e = eca_from_rc(alg);
    EXPECT_TRUE(check_eca(e.covering()).all_pass()) << name;
    for (Element a = 0; a < ba.size(); ++a) {
      for (Element b = 0; b < ba.size(); ++b) {
        ASSERT_EQ(c.holds(a, b), !e.covers(a, b, 0)) << name;
      }
    }
  }
}

TEST(InternalConnectedness, Example1) {
  EXPECT_TRUE(rc_internally_connected(RegularClosedAlgebra(example1_x()), X({1, 2, 3, 4, 5, 6})));
  EXPECT_FALSE(rc_internally_connected(RegularClosedAlgebra(example1_x_prime()), Xp({2, 3, 4, 5, 6})));
  const RegularClosedAlgebra alg(example1_x());
  EXPECT_TRUE(rc_internally_connected(alg, alg.zero()));
  EXPECT_THROW(rc_internally_connected(alg, X({7})), InvalidArgument);
}

TEST(InternalConnectedness, TopologicalAgreesWithCoveringCharacterization) {
  std::vector<FiniteTopology> spaces;
  for (const auto& nt : curated_topologies()) spaces.push_back(nt.topology);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& t : all_topologies(n)) spaces.push_back(t);
  }
  for (const auto& t : spaces) {
    const RegularClosedAlgebra alg(t);
    if (alg.carrier().size() > 32) continue;
    const auto e = eca_from_rc(alg);
    for (const auto& a : alg.carrier()) {
      ASSERT_EQ(rc_internally_connected(alg, a),
                internally_connected_algebraic(e, static_cast<Element>(alg.atom_mask(a))))
          << a.to_string();
    }
  }
}

TEST(RoAlgebra, Carriers) {
  EXPECT_EQ(RegularOpenAlgebra(discrete(2)).carrier().size(), 4U);
  EXPECT_TRUE(RegularOpenAlgebra(example1_x()).contains(X({7})));
  EXPECT_EQ(RegularOpenAlgebra(indiscrete(3)).carrier(),
            (std::vector<PointSet>{PointSet::empty(3), PointSet::full(3)}));
}

TEST(RoAlgebra, IsomorphicToRcAlgebra) {
  for (const auto& [name, t] : curated_topologies()) {
    if (RegularClosedAlgebra(t).carrier().size() > Caps{}.max_elements) {
      EXPECT_THROW(rc_ro_isomorphism_check(t), CapExceeded) << name;
      continue;
    }
    const auto iso = rc_ro_isomorphism_check(t);
    EXPECT_TRUE(iso.verified()) << name;
    EXPECT_EQ(iso.map.size(), RegularClosedAlgebra(t).carrier().size());
  }
  const auto d = rc_ro_isomorphism_check(discrete(2));
  for (const auto& [a, b] : d.map) EXPECT_EQ(a, b);
}
