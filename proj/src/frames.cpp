#include "mereo/frames.hpp"

#include <memory>
#include <numeric>
#include <unordered_map>

#include "parallel.hpp"

namespace mereo {

namespace {

void require_worlds(std::size_t n) {
  if (n == 0 || n > kMaxUniverse) throw InvalidArgument("world count must be between 1 and 64");
}

void require_fits(std::size_t n, const WorldSet& a) {
  if (a.universe_size() != n) throw InvalidArgument("world set does not match the frame's world count");
}

}  // namespace

ParametrizedFrame ParametrizedFrame::from_table(std::size_t world_count, std::vector<std::vector<std::uint64_t>> table,
                                                const Caps& caps) {
  require_worlds(world_count);
  require_cap(world_count, caps.max_naive_worlds, "worlds in a tabulated parametrized frame");
  const std::uint64_t w = full_mask(world_count);
  if (table.size() != (std::size_t{1} << world_count)) throw InvalidArgument("relation table needs one entry per subset");
  for (const auto& rel : table) {
    if (rel.size() != world_count) throw InvalidArgument("relation table row count differs from world count");
    for (std::uint64_t row : rel) {
      if ((row & ~w) != 0) throw InvalidArgument("relation table names a world outside W");
    }
  }
  auto shared = std::make_shared<const std::vector<std::vector<std::uint64_t>>>(std::move(table));
  return {world_count, [shared](std::uint64_t u, std::size_t s) { return (*shared)[u][s]; }, false};
}

ParametrizedFrame ParametrizedFrame::from_predicate(
    std::size_t world_count, const std::function<bool(std::uint64_t, std::size_t, std::size_t)>& r) {
  require_worlds(world_count);
  return {world_count,
          [r, world_count](std::uint64_t u, std::size_t s) {
            std::uint64_t row = 0;
            for (std::size_t t = 0; t < world_count; ++t) {
              if (r(u, s, t)) row |= std::uint64_t{1} << t;
            }
            return row;
          },
          false};
}

ParametrizedFrame ParametrizedFrame::from_rows(std::size_t world_count, RowFn rows) {
  require_worlds(world_count);
  return {world_count, std::move(rows), false};
}

ParametrizedFrame ParametrizedFrame::certified_antitone(std::size_t world_count, RowFn rows) {
  require_worlds(world_count);
  return {world_count, std::move(rows), true};
}

bool ParametrizedFrame::related(const WorldSet& u, std::size_t s, std::size_t t) const {
  require_fits(worlds_, u);
  if (s >= worlds_ || t >= worlds_) throw InvalidArgument("world index out of range");
  return (rows_(u.bits(), s) >> t) & 1U;
}

bool ParametrizedFrame::audit_antitone(const Caps& caps) const {
  require_cap(worlds_, caps.max_naive_worlds, "worlds for the antitonicity audit");
  const std::uint64_t count = std::uint64_t{1} << worlds_;
  for (std::uint64_t u = 0; u < count; ++u) {
    for (std::size_t x = 0; x < worlds_; ++x) {
      const std::uint64_t bigger = u | (std::uint64_t{1} << x);
      if (bigger == u) continue;
      for (std::size_t s = 0; s < worlds_; ++s) {
        if ((rows_(bigger, s) & ~rows_(u, s)) != 0) return false;
      }
    }
  }
  return true;
}

ParametrizedFrame ParametrizedFrame::audited(const Caps& caps) const {
  if (!audit_antitone(caps)) throw InvalidArgument("frame is not antitone: some R(U ∪ {x}) is not inside R(U)");
  return {worlds_, rows_, true};
}

bool pframe_covering_naive(const ParametrizedFrame& f, const WorldSet& a, const WorldSet& b, const WorldSet& d,
                           const Caps& caps) {
  const std::size_t n = f.world_count();
  require_cap(n, caps.max_naive_worlds, "worlds for naive parametrized covering (use the antitone evaluator)");
  require_fits(n, a);
  require_fits(n, b);
  require_fits(n, d);
  const auto members = a.members();
  const bool related = detail::for_each_superset(d.bits(), full_mask(n), [&](std::uint64_t u) {
    for (std::size_t s : members) {
      if (f.successors(u, s) & b.bits()) return true;
    }
    return false;
  });
  return !related;
}

bool pframe_covering_antitone(const ParametrizedFrame& f, const WorldSet& a, const WorldSet& b, const WorldSet& d) {
  if (!f.antitone()) throw InvalidArgument("frame is not certified antitone; audit it first");
  const std::size_t n = f.world_count();
  require_fits(n, a);
  require_fits(n, b);
  require_fits(n, d);
  for (std::size_t s : a.members()) {
    if (f.successors(d.bits(), s) & b.bits()) return false;
  }
  return true;
}

Partition::Partition(const std::vector<std::size_t>& class_ids) {
  require_worlds(class_ids.size());
  std::unordered_map<std::size_t, std::size_t> renumber;
  ids_.reserve(class_ids.size());
  for (std::size_t s = 0; s < class_ids.size(); ++s) {
    auto [it, fresh] = renumber.try_emplace(class_ids[s], classes_.size());
    if (fresh) classes_.push_back(0);
    ids_.push_back(it->second);
    classes_[it->second] |= std::uint64_t{1} << s;
  }
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return Partition(ids);
}

Partition Partition::single(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

EquivalenceFrame2::EquivalenceFrame2(Partition equiv1, Partition equiv2)
    : equiv1_(std::move(equiv1)), equiv2_(std::move(equiv2)) {
  if (equiv1_.world_count() != equiv2_.world_count()) {
    throw InvalidArgument("the two partitions cover different world counts");
  }
  r1r2_.resize(world_count());
  for (std::size_t s = 0; s < world_count(); ++s) {
    std::uint64_t acc = 0;
    for (std::uint64_t rest = equiv2_.class_members(s); rest; rest &= rest - 1) {
      acc |= equiv1_.class_members(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    r1r2_[s] = acc;
  }
}

namespace {

/// A∩B ⊆ D and every block meeting A and B meets D.
template <class Blocks>
bool blocks_cover(const Blocks& blocks, std::uint64_t a, std::uint64_t b, std::uint64_t d) {
  if ((a & b & ~d) != 0) return false;
  for (std::uint64_t k : blocks) {
    if ((k & a) && (k & b) && !(k & d)) return false;
  }
  return true;
}

}  // namespace

bool frame1_covering(const EquivalenceFrame1& f, const WorldSet& a, const WorldSet& b, const WorldSet& d) {
  const std::size_t n = f.world_count();
  require_fits(n, a);
  require_fits(n, b);
  require_fits(n, d);
  return blocks_cover(f.equiv().classes(), a.bits(), b.bits(), d.bits());
}

bool frame2_covering(const EquivalenceFrame2& f, const WorldSet& a, const WorldSet& b, const WorldSet& d) {
  const std::size_t n = f.world_count();
  require_fits(n, a);
  require_fits(n, b);
  require_fits(n, d);
  if ((a.bits() & b.bits() & ~d.bits()) != 0) return false;
  for (std::size_t s = 0; s < n; ++s) {
    const std::uint64_t k = f.r1r2(s);
    if ((k & a.bits()) && (k & b.bits()) && !(k & d.bits())) return false;
  }
  return true;
}

WorldSet r1r2_class(const EquivalenceFrame2& f, std::size_t s) {
  if (s >= f.world_count()) throw InvalidArgument("world index out of range");
  return {f.world_count(), f.r1r2(s)};
}

BinaryRelation::BinaryRelation(std::size_t world_count, std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {
  require_worlds(world_count);
  if (rows_.size() != world_count) throw InvalidArgument("relation needs one row per world");
  for (std::uint64_t r : rows_) {
    if ((r & ~full_mask(world_count)) != 0) throw InvalidArgument("relation names a world outside W");
  }
}

BinaryRelation BinaryRelation::identity(std::size_t n) {
  std::vector<std::uint64_t> rows(n);
  for (std::size_t s = 0; s < n; ++s) rows[s] = std::uint64_t{1} << s;
  return {n, std::move(rows)};
}

BinaryRelation BinaryRelation::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::uint64_t> rows(n);
  for (auto [s, t] : pairs) {
    if (s >= n || t >= n) throw InvalidArgument("relation pair names a world outside W");
    rows[s] |= std::uint64_t{1} << t;
  }
  return {n, std::move(rows)};
}

bool BinaryRelation::is_reflexive() const {
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    if (!holds(s, s)) return false;
  }
  return true;
}

bool BinaryRelation::is_symmetric() const {
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      if (holds(s, t) != holds(t, s)) return false;
    }
  }
  return true;
}

bool gv_contact(const BinaryRelation& r, const WorldSet& a, const WorldSet& b) {
  if (!r.is_reflexive()) throw InvalidArgument("relation is not reflexive");
  if (!r.is_symmetric()) throw InvalidArgument("relation is not symmetric");
  require_fits(r.world_count(), a);
  require_fits(r.world_count(), b);
  for (std::size_t s : a.members()) {
    if (r.rows()[s] & b.bits()) return true;
  }
  return false;
}

ContactRelation powerset_contact(const BinaryRelation& r, const Caps& caps) {
  const std::size_t n = r.world_count();
  require_cap(n, caps.max_powerset_worlds, "worlds for a powerset algebra");
  const FiniteBooleanAlgebra ba(static_cast<unsigned>(n));
  return ContactRelation::from_predicate(ba, [&](Element a, Element b) { return gv_contact(r, {n, a}, {n, b}); });
}

std::size_t world_count(const Frame& f) {
  return std::visit([](const auto& x) { return x.world_count(); }, f);
}

bool powerset_covering(const Frame& f, const WorldSet& a, const WorldSet& b, const WorldSet& d, const Caps& caps) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ParametrizedFrame>) {
          return x.antitone() ? pframe_covering_antitone(x, a, b, d) : pframe_covering_naive(x, a, b, d, caps);
        } else if constexpr (std::is_same_v<T, EquivalenceFrame1>) {
          return frame1_covering(x, a, b, d);
        } else {
          return frame2_covering(x, a, b, d);
        }
      },
      f);
}

ExtendedContactAlgebra powerset_eca(const Frame& f, const Caps& caps) {
  const std::size_t n = world_count(f);
  require_cap(n, caps.max_powerset_worlds, "worlds for a powerset algebra");
  const FiniteBooleanAlgebra ba(static_cast<unsigned>(n));
  auto v = CoveringRelation::from_predicate(
      ba, [&](Element a, Element b, Element d) { return powerset_covering(f, {n, a}, {n, b}, {n, d}, caps); });
  if (std::holds_alternative<ParametrizedFrame>(f)) return ExtendedContactAlgebra::classify(std::move(v), caps);
  return ExtendedContactAlgebra::verify(std::move(v), Strength::eca, caps);
}

bool frame2_internally_connected(const EquivalenceFrame2& f, const WorldSet& s) {
  const std::size_t n = f.world_count();
  require_fits(n, s);
  const std::uint64_t region = s.bits();
  if (region == 0) return true;
  // Grow the component of the lowest world through blocks that lie inside S.
  std::uint64_t reached = region & -region;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t w = 0; w < n; ++w) {
      const std::uint64_t k = f.r1r2(w);
      if ((k & ~region) == 0 && (k & reached) && (k & ~reached)) {
        reached |= k;
        grew = true;
      }
    }
  }
  return reached == region;
}

bool internally_connected_naive(std::size_t world_count, const WorldCovering& covers, const WorldSet& s,
                                const Caps& caps) {
  require_fits(world_count, s);
  require_cap(s.size(), caps.max_split_worlds, "region size for split enumeration");
  const std::uint64_t region = s.bits();
  const std::uint64_t rest = full_mask(world_count) & ~region;
  // B ranges over nonempty subsets of S; D over the supersets of S∖B inside S.
  const bool split = detail::for_each_subset(region, [&](std::uint64_t b) {
    if (b == 0) return false;
    return detail::for_each_superset(region & ~b, region, [&](std::uint64_t d) {
      return d != 0 && covers(b, d, rest);
    });
  });
  return !split;
}

}  // namespace mereo
