#include <gtest/gtest.h>

#include <random>

#include "mereo/eca.hpp"
#include "mereo/error.hpp"
#include "mereo/filters.hpp"
#include "mereo/representations.hpp"
#include "support/test_support.hpp"

using namespace mereo;
using namespace mereo::testing;

namespace {

using W = std::vector<std::uint64_t>;

ExtendedContactAlgebra disc_eca(unsigned k) {
  return ExtendedContactAlgebra::verify(CoveringRelation::discrete(FiniteBooleanAlgebra(k)), Strength::eca);
}

// R(U)(s, t) quantified literally over filter members: every (a, b) ⊢ d with
// a in s and b in t has some e lying in every filter of U with d not below e.
bool r_oracle(const ExtendedContactAlgebra& e, const std::vector<FilterOrIdeal>& worlds, std::uint64_t u,
              std::size_t s, std::size_t t) {
  const auto& ba = e.algebra();
  for (Element a = 0; a < ba.size(); ++a) {
    if (!worlds[s].contains(a)) continue;
    for (Element b = 0; b < ba.size(); ++b) {
      if (!worlds[t].contains(b)) continue;
      for (Element d = 0; d < ba.size(); ++d) {
        if (!e.covers(a, b, d)) continue;
        bool found = false;
        for (Element x = 0; x < ba.size() && !found; ++x) {
          bool in_all = true;
          for (std::size_t w = 0; w < worlds.size(); ++w)
            if ((u >> w) & 1U) in_all = in_all && worlds[w].contains(x);
          found = in_all && !ba.leq(d, x);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<FiniteTopology> pipeline_spaces(std::uint64_t seed, std::size_t count) {
  std::vector<FiniteTopology> out{example1_x(), example1_x_prime()};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_topology(rng, 1 + rng() % 5));
  return out;
}

Element xp_region(const RegularClosedAlgebra& alg) {
  return static_cast<Element>(alg.atom_mask(PointSet::of(6, {0, 1, 2, 3, 4})));
}

}  // namespace

TEST(Parametrized, RelationMatchesFilterDefinition) {
  for (const auto& e : weca_corpus(8)) {
    const auto rep = build_parametrized_frame(e);
    const auto worlds = maximal_filters(e.algebra());
    const std::size_t k = worlds.size();
    ASSERT_EQ(rep.frame.world_count(), k);
    for (std::uint64_t u = 0; u <= full_mask(k); ++u)
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = 0; t < k; ++t)
          ASSERT_EQ(rep.frame.related(WorldSet(k, u), s, t), r_oracle(e, worlds, u, s, t));
  }
}

TEST(Parametrized, OneAtomDiscrete) {
  const auto rep = build_parametrized_frame(disc_eca(1));
  EXPECT_EQ(rep.frame.world_count(), 1U);
  EXPECT_EQ(rep.embedding(1), WorldSet(1, 1));
  EXPECT_EQ(rep.embedding(0), WorldSet(1, 0));
  EXPECT_TRUE(verify_representation(rep).all_pass());
}

TEST(Parametrized, TwoAtomDiscreteDisjointAtoms) {
  const auto e = disc_eca(2);
  const auto rep = build_parametrized_frame(e);
  EXPECT_EQ(rep.embedding(1), WorldSet(2, 0b01));
  const bool source = e.covers(1, 2, 0);
  EXPECT_TRUE(source);
  EXPECT_EQ(pframe_covering_naive(rep.frame, rep.embedding(1), rep.embedding(2), rep.embedding(0)), source);
  EXPECT_TRUE(verify_representation(rep).all_pass());
}

TEST(Parametrized, Example1AndEveryCorpusAlgebraVerify) {
  EXPECT_TRUE(verify_representation(build_parametrized_frame(eca_from_rc(RegularClosedAlgebra(example1_x())))).all_pass());
  for (const auto& e : weca_corpus(10)) {
    const auto rep = build_parametrized_frame(e);
    const auto r = verify_representation(rep);
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.verdicts.size(), 5U);
    EXPECT_TRUE(rep.frame.antitone());
    EXPECT_TRUE(rep.frame.audit_antitone());
  }
}

TEST(Parametrized, RejectsTooManyAtoms) {
  const auto e = ExtendedContactAlgebra::verify(CoveringRelation::discrete(FiniteBooleanAlgebra(4)), Strength::eca);
  Caps caps;
  caps.max_axiom_atoms = 3;
  EXPECT_THROW(build_parametrized_frame(e, caps), CapExceeded);
}

TEST(Type1, DiscreteTwoPoints) {
  const auto rep = build_type1(RegularClosedAlgebra(discrete(2)));
  ASSERT_EQ(rep.worlds.size(), 2U);
  EXPECT_EQ(rep.worlds[0].atom, 0U);
  EXPECT_EQ(rep.worlds[0].point, 0U);
  EXPECT_EQ(rep.worlds[1].point, 1U);
  EXPECT_EQ(rep.frame.equiv(), Partition::identity(2));
  EXPECT_EQ(rep.embedding(1), WorldSet(2, 0b01));
  EXPECT_EQ(rep.embedding(2), WorldSet(2, 0b10));
  EXPECT_TRUE(verify_representation(rep).all_pass());
}

TEST(Type1, IndiscreteThreePoints) {
  const auto rep = build_type1(RegularClosedAlgebra(indiscrete(3)));
  ASSERT_EQ(rep.worlds.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(rep.worlds[i].atom, 0U);
    EXPECT_EQ(rep.worlds[i].point, i);
  }
  EXPECT_TRUE(verify_representation(rep).all_pass());
}

TEST(Type1, Example1ComplementTriple) {
  const RegularClosedAlgebra alg(example1_x());
  const auto rep = build_type1(alg);
  const Element a = static_cast<Element>(alg.atom_mask(PointSet::of(7, {0, 1, 2, 3, 4, 5})));
  const Element c = rep.embedding.source.algebra().complement(a);
  EXPECT_TRUE(frame1_covering(rep.frame, rep.embedding(a), rep.embedding(c), rep.embedding(c)));
  EXPECT_TRUE(verify_representation(rep).all_pass());
}

TEST(Type1, WorldsAndPartitionFollowDefinition) {
  for (const auto& t : pipeline_spaces(40, 20)) {
    const RegularClosedAlgebra alg(t);
    const auto rep = build_type1(alg);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < alg.atom_count(); ++i) expected += alg.atom(i).size();
    ASSERT_EQ(rep.worlds.size(), expected);
    for (std::size_t i = 0; i < rep.worlds.size(); ++i) {
      ASSERT_TRUE(alg.atom(rep.worlds[i].atom).contains(rep.worlds[i].point));
      for (std::size_t j = 0; j < rep.worlds.size(); ++j) {
        ASSERT_EQ(rep.frame.equiv().class_of(i) == rep.frame.equiv().class_of(j),
                  rep.worlds[i].point == rep.worlds[j].point);
      }
    }
  }
}

TEST(Type2, DiscreteTwoPoints) {
  const auto rep = build_type2(RegularClosedAlgebra(discrete(2)));
  EXPECT_EQ(rep.frame.equiv1(), Partition::identity(2));
  EXPECT_EQ(rep.frame.equiv2(), Partition::identity(2));
  const auto r = verify_representation(rep);
  EXPECT_TRUE(r.all_pass());
  EXPECT_TRUE(r.at("preserves_internal_connectedness").pass);
}

TEST(Type2, Example1ConnectednessDiffers) {
  const RegularClosedAlgebra x(example1_x());
  const auto rx = build_type2(x);
  const Element a = static_cast<Element>(x.atom_mask(PointSet::of(7, {0, 1, 2, 3, 4, 5})));
  EXPECT_TRUE(verify_representation(rx).all_pass());
  EXPECT_TRUE(frame2_internally_connected(rx.frame, rx.embedding(a)));

  const RegularClosedAlgebra xp(example1_x_prime());
  const auto rxp = build_type2(xp);
  EXPECT_TRUE(verify_representation(rxp).all_pass());
  EXPECT_FALSE(frame2_internally_connected(rxp.frame, rxp.embedding(xp_region(xp))));
}

TEST(Type2, ConnectednessTrivialCases) {
  const auto rep = build_type2(RegularClosedAlgebra(indiscrete(3)));
  EXPECT_TRUE(frame2_internally_connected(rep.frame, rep.embedding(0)));
  EXPECT_TRUE(frame2_internally_connected(rep.frame, rep.embedding(1)));
  EXPECT_TRUE(internally_connected_algebraic(rep.embedding.source, 1));
}

TEST(FrameKinds, ShareWorldsAndEmbedding) {
  for (const auto& t : pipeline_spaces(41, 20)) {
    const RegularClosedAlgebra alg(t);
    const auto r1 = build_type1(alg);
    const auto r2 = build_type2(alg);
    ASSERT_EQ(r1.worlds, r2.worlds);
    ASSERT_EQ(r1.embedding.image, r2.embedding.image);
    ASSERT_EQ(r1.frame.equiv(), r2.frame.equiv2());
  }
}

TEST(Pipelines, VerifyOnRandomSpaces) {
  for (const auto& t : pipeline_spaces(42, 30)) {
    const RegularClosedAlgebra alg(t);
    ASSERT_TRUE(verify_representation(build_type1(alg)).all_pass());
    ASSERT_TRUE(verify_representation(build_type2(alg)).all_pass());
  }
}

TEST(Pipelines, RejectTooManyWorlds) {
  Caps caps;
  caps.max_worlds = 4;
  EXPECT_THROW(build_type1(RegularClosedAlgebra(discrete(5)), caps), CapExceeded);
  EXPECT_THROW(build_type2(RegularClosedAlgebra(indiscrete(5)), caps), CapExceeded);
}

TEST(VerifyEmbedding, IdentityOntoOwnFrame) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const Frame f = EquivalenceFrame2(Partition(random_partition(rng, n)), Partition(random_partition(rng, n)));
    const auto e = powerset_eca(f);
    std::vector<WorldSet> image;
    for (Element a = 0; a < e.algebra().size(); ++a) image.emplace_back(n, a);
    const WorldCovering cov = [&](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
      return powerset_covering(f, WorldSet(n, a), WorldSet(n, b), WorldSet(n, d));
    };
    EXPECT_TRUE(verify_embedding(e.covering(), image, cov).all_pass());
  }
}

TEST(VerifyEmbedding, EverythingToEmptyFails) {
  const auto e = disc_eca(2);
  const std::vector<WorldSet> image(4, WorldSet(2, 0));
  const WorldCovering cov = [](std::uint64_t a, std::uint64_t b, std::uint64_t d) { return (a & b & ~d) == 0; };
  const auto r = verify_embedding(e.covering(), image, cov);
  EXPECT_FALSE(r.at("injective").pass);
  EXPECT_EQ(r.at("injective").witness, (W{0, 1}));
  EXPECT_TRUE(r.at("preserves_zero").pass);
  EXPECT_FALSE(r.at("preserves_complement").pass);
  EXPECT_EQ(r.at("preserves_complement").witness, (W{0}));
  EXPECT_EQ(r, reference::verify_embedding(e.covering(), image, cov));
}

TEST(VerifyEmbedding, RejectsMalformedImages) {
  const auto e = disc_eca(2);
  const WorldCovering cov = [](std::uint64_t, std::uint64_t, std::uint64_t) { return true; };
  EXPECT_THROW(verify_embedding(e.covering(), std::vector<WorldSet>(3, WorldSet(2, 0)), cov), InvalidArgument);
  std::vector<WorldSet> mixed(4, WorldSet(2, 0));
  mixed[3] = WorldSet(3, 0);
  EXPECT_THROW(verify_embedding(e.covering(), mixed, cov), InvalidArgument);
}

TEST(VerifyEmbedding, ParallelMatchesReferenceOnPerturbedImages) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 60; ++i) {
    const RegularClosedAlgebra alg(random_topology(rng, 1 + rng() % 5));
    const auto rep = build_type2(alg);
    auto image = rep.embedding.image;
    const std::size_t w = rep.worlds.size();
    if (i % 3 != 0) {
      const std::size_t victim = rng() % image.size();
      image[victim] = WorldSet(w, rng() & full_mask(w));
    }
    const auto cov = target_covering(rep);
    ASSERT_EQ(verify_embedding(rep.embedding.source.covering(), image, cov),
              reference::verify_embedding(rep.embedding.source.covering(), image, cov));
  }
}

TEST(CPreservation, DetectsWrongTarget) {
  const auto rep = build_type2(RegularClosedAlgebra(example1_x_prime()));
  const auto v = verify_c_preservation(rep.embedding.source.covering(), rep.embedding.image,
                                       [](const WorldSet&) { return true; });
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.name, "preserves_internal_connectedness");
}

TEST(Splits, ExampleXPrimeRegionSplitsAndPullsBack) {
  const RegularClosedAlgebra xp(example1_x_prime());
  const auto rep = build_type2(xp);
  const Element a = xp_region(xp);
  const auto splits = admissible_splits(rep, a);
  ASSERT_FALSE(splits.empty());
  for (const auto& s : splits) {
    const auto pb = pull_back_split(rep, a, s.first, s.second);
    EXPECT_TRUE(pb.report.all_pass());
    EXPECT_NE(pb.first, 0U);
    EXPECT_NE(pb.second, 0U);
    EXPECT_EQ(pb.first | pb.second, a);
  }
}

TEST(Splits, ConnectedRegionHasNone) {
  const RegularClosedAlgebra x(example1_x());
  const auto rep = build_type2(x);
  EXPECT_TRUE(admissible_splits(rep, static_cast<Element>(x.atom_mask(PointSet::of(7, {0, 1, 2, 3, 4, 5})))).empty());
  EXPECT_TRUE(admissible_splits(rep, 0).empty());
}

TEST(Splits, PreconditionsAreChecked) {
  const RegularClosedAlgebra xp(example1_x_prime());
  const auto rep = build_type2(xp);
  const Element a = xp_region(xp);
  const WorldSet full = rep.embedding(a);
  const std::size_t w = rep.worlds.size();
  EXPECT_THROW(pull_back_split(rep, a, WorldSet(w, 0), full), InvalidArgument);
  EXPECT_THROW(pull_back_split(rep, a, full, full), InvalidArgument);
  const WorldSet part(w, full.bits() & (full.bits() - 1));
  EXPECT_THROW(pull_back_split(rep, a, part, part), InvalidArgument);
}

TEST(Splits, EveryAdmissibleSplitPullsBackOnSmallPipelines) {
  std::size_t checked = 0;
  std::vector<FiniteTopology> spaces;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& t : all_topologies(n)) spaces.push_back(t);
  for (auto& t : pipeline_spaces(43, 40)) spaces.push_back(t);
  for (const auto& t : spaces) {
    const RegularClosedAlgebra alg(t);
    const auto rep = build_type2(alg);
    if (rep.worlds.size() > 6) continue;
    for (Element a = 0; a < rep.embedding.source.algebra().size(); ++a) {
      for (const auto& s : admissible_splits(rep, a)) {
        ASSERT_TRUE(pull_back_split(rep, a, s.first, s.second).report.all_pass());
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0U);
}
