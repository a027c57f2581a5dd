#include "mereo/representations.hpp"

#include <memory>

#include "parallel.hpp"

namespace mereo {

namespace {

using detail::Witness;

std::vector<WorldSet> identity_image(const FiniteBooleanAlgebra& ba, std::size_t worlds) {
  std::vector<WorldSet> image;
  image.reserve(ba.size());
  for (Element a = 0; a < ba.size(); ++a) image.emplace_back(worlds, a);
  return image;
}

}  // namespace

ParametrizedRepresentation build_parametrized_frame(const ExtendedContactAlgebra& e, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = e.algebra();
  require_cap(ba.atom_count(), caps.max_axiom_atoms, "atom count for the parametrized-frame construction");
  const std::size_t k = ba.atom_count();
  const auto n = static_cast<Element>(ba.size());
  const CoveringRelation& cov = e.covering();

  // blocked[U]: the d for which no e contains every generator in U while missing part of d.
  std::vector<ElementSet> blocked(n, 0);
  for (Element u = 0; u < n; ++u) {
    for (Element d = 0; d < n; ++d) {
      bool witness = false;
      for (Element x = 0; x < n && !witness; ++x) witness = ba.leq(u, x) && !ba.leq(d, x);
      if (!witness) blocked[u] |= ElementSet{1} << d;
    }
  }

  auto table = std::make_shared<std::vector<std::vector<std::uint64_t>>>(n, std::vector<std::uint64_t>(k, 0));
  for (Element u = 0; u < n; ++u) {
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        const bool fails = detail::for_each_superset(ba.atom(s), ba.one(), [&](std::uint64_t a) {
          return detail::for_each_superset(ba.atom(t), ba.one(), [&](std::uint64_t b) {
            return (cov.row(static_cast<Element>(a), static_cast<Element>(b)) & blocked[u]) != 0;
          });
        });
        if (!fails) (*table)[u][s] |= std::uint64_t{1} << t;
      }
    }
  }
  // A larger U admits fewer e, so blocked[U] only grows and R(U) only shrinks.
  auto frame = ParametrizedFrame::certified_antitone(
      k, [table](std::uint64_t u, std::size_t s) { return (*table)[u][s]; });
  return {std::move(frame), Embedding{e, k, identity_image(ba, k)}};
}

namespace {

std::vector<WorldAtomPoint> atom_point_worlds(const RegularClosedAlgebra& alg, const Caps& caps) {
  std::vector<WorldAtomPoint> worlds;
  for (std::size_t i = 0; i < alg.atom_count(); ++i) {
    for (std::size_t p : alg.atom(i).members()) worlds.push_back({i, alg.atom_indices()[i], p});
  }
  require_cap(worlds.size(), std::min(caps.max_worlds, kMaxUniverse), "atom-point worlds");
  return worlds;
}

Embedding atom_point_embedding(ExtendedContactAlgebra source, const std::vector<WorldAtomPoint>& worlds) {
  const std::size_t w = worlds.size();
  std::vector<WorldSet> image;
  for (Element a = 0; a < source.algebra().size(); ++a) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < w; ++i) {
      if ((a >> worlds[i].atom) & 1U) bits |= std::uint64_t{1} << i;
    }
    image.emplace_back(w, bits);
  }
  return Embedding{std::move(source), w, std::move(image)};
}

Partition group_by(const std::vector<WorldAtomPoint>& worlds, std::size_t WorldAtomPoint::*field) {
  std::vector<std::size_t> ids;
  ids.reserve(worlds.size());
  for (const auto& w : worlds) ids.push_back(w.*field);
  return Partition(ids);
}

}  // namespace

Type1Representation build_type1(const RegularClosedAlgebra& alg, const Caps& caps) {
  auto worlds = atom_point_worlds(alg, caps);
  EquivalenceFrame1 frame(group_by(worlds, &WorldAtomPoint::point));
  Embedding h = atom_point_embedding(eca_from_rc(alg, caps), worlds);
  return {alg, std::move(worlds), std::move(frame), std::move(h)};
}

Type2Representation build_type2(const RegularClosedAlgebra& alg, const Caps& caps) {
  auto worlds = atom_point_worlds(alg, caps);
  EquivalenceFrame2 frame(group_by(worlds, &WorldAtomPoint::atom), group_by(worlds, &WorldAtomPoint::point));
  Embedding h = atom_point_embedding(eca_from_rc(alg, caps), worlds);
  return {alg, std::move(worlds), std::move(frame), std::move(h)};
}

VerificationReport verify_embedding(const CoveringRelation& source, const std::vector<WorldSet>& image,
                                    const WorldCovering& target, const Caps& caps) {
  const FiniteBooleanAlgebra& ba = source.algebra();
  const std::size_t n = ba.size();
  require_cap(n, caps.max_elements, "source element count");
  if (image.size() != n) throw InvalidArgument("embedding image must list every source element");
  const std::size_t w = image.front().universe_size();
  require_cap(w, caps.max_worlds, "target world count");
  for (const WorldSet& s : image) {
    if (s.universe_size() != w) throw InvalidArgument("embedding images use different world sets");
  }
  const std::uint64_t all = full_mask(w);
  auto img = [&](std::size_t a) { return image[a].bits(); };

  VerificationReport r;
  r.verdicts.push_back(detail::verdict("injective", detail::first_witness(n, [&](std::size_t a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (img(a) == img(b)) return std::optional{Witness{a, b}};
    }
    return std::optional<Witness>{};
  })));
  r.verdicts.push_back(
      detail::verdict("preserves_zero", img(ba.zero()) == 0 ? std::nullopt : std::optional{Witness{ba.zero()}}));
  r.verdicts.push_back(detail::verdict("preserves_complement", detail::first_witness(n, [&](std::size_t a) {
    const bool ok = img(ba.complement(static_cast<Element>(a))) == (all & ~img(a));
    return ok ? std::optional<Witness>{} : std::optional{Witness{a}};
  })));
  r.verdicts.push_back(detail::verdict("preserves_join", detail::first_witness(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (img(ba.join(static_cast<Element>(a), static_cast<Element>(b))) != (img(a) | img(b))) {
        return std::optional{Witness{a, b}};
      }
    }
    return std::optional<Witness>{};
  })));
  r.verdicts.push_back(detail::verdict("preserves_covering", detail::first_witness(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementSet row = source.row(static_cast<Element>(a), static_cast<Element>(b));
      for (std::size_t d = 0; d < n; ++d) {
        if (((row >> d) & 1U) != target(img(a), img(b), img(d))) return std::optional{Witness{a, b, d}};
      }
    }
    return std::optional<Witness>{};
  })));
  return r;
}

VerificationReport verify_embedding(const Embedding& h, const WorldCovering& target, const Caps& caps) {
  return verify_embedding(h.source.covering(), h.image, target, caps);
}

Verdict verify_c_preservation(const CoveringRelation& source, const std::vector<WorldSet>& image,
                              const std::function<bool(const WorldSet&)>& target_connected) {
  const std::size_t n = source.element_count();
  if (image.size() != n) throw InvalidArgument("embedding image must list every source element");
  return detail::verdict("preserves_internal_connectedness", detail::first_witness(n, [&](std::size_t a) {
    const bool same = internally_connected_algebraic(source, static_cast<Element>(a)) == target_connected(image[a]);
    return same ? std::optional<Witness>{} : std::optional{Witness{a}};
  }));
}

WorldCovering target_covering(const ParametrizedRepresentation& r) {
  const std::size_t w = r.frame.world_count();
  return [&f = r.frame, w](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
    return pframe_covering_antitone(f, {w, a}, {w, b}, {w, d});
  };
}

WorldCovering target_covering(const Type1Representation& r) {
  const std::size_t w = r.frame.world_count();
  return [&f = r.frame, w](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
    return frame1_covering(f, {w, a}, {w, b}, {w, d});
  };
}

WorldCovering target_covering(const Type2Representation& r) {
  const std::size_t w = r.frame.world_count();
  return [&f = r.frame, w](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
    return frame2_covering(f, {w, a}, {w, b}, {w, d});
  };
}

VerificationReport verify_representation(const ParametrizedRepresentation& r, const Caps& caps) {
  return verify_embedding(r.embedding, target_covering(r), caps);
}

VerificationReport verify_representation(const Type1Representation& r, const Caps& caps) {
  return verify_embedding(r.embedding, target_covering(r), caps);
}

VerificationReport verify_representation(const Type2Representation& r, const Caps& caps) {
  VerificationReport rep = verify_embedding(r.embedding, target_covering(r), caps);
  rep.verdicts.push_back(verify_c_preservation(r.embedding.source.covering(), r.embedding.image,
                                               [&](const WorldSet& s) { return frame2_internally_connected(r.frame, s); }));
  return rep;
}

std::vector<Split> admissible_splits(const Type2Representation& r, Element a, const Caps& caps) {
  if (!r.embedding.source.algebra().contains(a)) throw InvalidArgument("element outside the algebra");
  const WorldSet& region = r.embedding(a);
  require_cap(region.size(), caps.max_split_worlds, "region size for split enumeration");
  const std::size_t w = r.frame.world_count();
  const WorldSet rest = region.complement();
  std::vector<Split> out;
  detail::for_each_subset(region.bits(), [&](std::uint64_t b) {
    if (b == 0) return false;
    detail::for_each_superset(region.bits() & ~b, region.bits(), [&](std::uint64_t d) {
      if (d != 0 && frame2_covering(r.frame, {w, b}, {w, d}, rest)) out.push_back({{w, b}, {w, d}});
      return false;
    });
    return false;
  });
  return out;
}

SplitPullback pull_back_split(const Type2Representation& r, Element a, const WorldSet& a1, const WorldSet& a2) {
  const FiniteBooleanAlgebra& ba = r.embedding.source.algebra();
  if (!ba.contains(a)) throw InvalidArgument("element outside the algebra");
  const std::size_t w = r.frame.world_count();
  if (a1.universe_size() != w || a2.universe_size() != w) throw InvalidArgument("split does not match the world set");
  const WorldSet& region = r.embedding(a);
  if (a1.empty() || a2.empty()) throw InvalidArgument("both parts of a split must be nonempty");
  if ((a1 | a2) != region) throw InvalidArgument("split parts must join to the image of the element");
  if (!frame2_covering(r.frame, a1, a2, region.complement())) {
    throw InvalidArgument("split parts do not cover into the complement of the image");
  }

  auto pull_back = [&](const WorldSet& part) {
    std::uint64_t hull = 0;
    for (std::size_t i : part.members()) hull |= r.embedding(ba.atom(static_cast<unsigned>(r.worlds[i].atom))).bits();
    Element lub = ba.zero();
    for (Element b = 0; b < ba.size(); ++b) {
      if ((r.embedding(b).bits() & ~hull) == 0) lub = ba.join(lub, b);
    }
    return lub;
  };

  SplitPullback out;
  out.first = pull_back(a1);
  out.second = pull_back(a2);
  const Witness wit{out.first, out.second};
  auto check = [&](const char* name, bool ok) { out.report.verdicts.push_back({name, ok, ok ? Witness{} : wit}); };
  check("split_parts_nonzero", out.first != ba.zero() && out.second != ba.zero());
  check("split_parts_join", ba.join(out.first, out.second) == a);
  check("split_parts_cover", r.embedding.source.covers(out.first, out.second, ba.complement(a)));
  return out;
}

namespace reference {

VerificationReport verify_embedding(const CoveringRelation& source, const std::vector<WorldSet>& image,
                                    const WorldCovering& target) {
  const FiniteBooleanAlgebra& ba = source.algebra();
  const auto n = static_cast<Element>(ba.size());
  if (image.size() != n) throw InvalidArgument("embedding image must list every source element");
  const WorldSet none = WorldSet::empty(image.front().universe_size());
  VerificationReport r;

  Verdict inj{"injective", true, {}};
  for (Element a = 0; a < n && inj.pass; ++a) {
    for (Element b = a + 1; b < n && inj.pass; ++b) {
      if (image[a] == image[b]) inj = {"injective", false, {a, b}};
    }
  }
  r.verdicts.push_back(inj);

  r.verdicts.push_back(image[ba.zero()] == none ? Verdict{"preserves_zero", true, {}}
                                                : Verdict{"preserves_zero", false, {ba.zero()}});

  Verdict comp{"preserves_complement", true, {}};
  for (Element a = 0; a < n && comp.pass; ++a) {
    if (image[ba.complement(a)] != image[a].complement()) comp = {"preserves_complement", false, {a}};
  }
  r.verdicts.push_back(comp);

  Verdict join{"preserves_join", true, {}};
  for (Element a = 0; a < n && join.pass; ++a) {
    for (Element b = 0; b < n && join.pass; ++b) {
      if (image[ba.join(a, b)] != (image[a] | image[b])) join = {"preserves_join", false, {a, b}};
    }
  }
  r.verdicts.push_back(join);

  Verdict cov{"preserves_covering", true, {}};
  for (Element a = 0; a < n && cov.pass; ++a) {
    for (Element b = 0; b < n && cov.pass; ++b) {
      for (Element d = 0; d < n && cov.pass; ++d) {
        if (source.covers(a, b, d) != target(image[a].bits(), image[b].bits(), image[d].bits())) {
          cov = {"preserves_covering", false, {a, b, d}};
        }
      }
    }
  }
  r.verdicts.push_back(cov);
  return r;
}

}  // namespace reference
}  // namespace mereo
