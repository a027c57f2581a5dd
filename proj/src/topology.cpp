#include "mereo/topology.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "mereo/error.hpp"

namespace mereo {

namespace {

// Closes `family` under `op` in one sweep: every pair is combined once, new
// members are appended and later combined with everything before them.
template <class Op>
bool close_under(std::vector<std::uint64_t>& items, std::unordered_set<std::uint64_t>& seen, Op op,
                 std::size_t max_opens) {
  bool grew = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::uint64_t c = op(items[i], items[j]);
      if (seen.insert(c).second) {
        items.push_back(c);
        grew = true;
        require_cap(items.size(), max_opens, "open-set family size");
      }
    }
  }
  return grew;
}

bool sorted_contains(const std::vector<PointSet>& v, const PointSet& a) {
  return std::binary_search(v.begin(), v.end(), a);
}

}  // namespace

FiniteTopology FiniteTopology::from_opens(std::size_t universe_size, std::vector<PointSet> opens) {
  if (universe_size == 0) throw InvalidArgument("a topological space needs a nonempty universe");
  if (universe_size > kMaxUniverse) throw InvalidArgument("universe exceeds 64 points");
  for (const PointSet& o : opens) {
    if (o.universe_size() != universe_size) throw InvalidArgument("open set over a different universe");
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  if (!sorted_contains(opens, PointSet::empty(universe_size))) throw InvalidArgument("topology must contain ∅");
  if (!sorted_contains(opens, PointSet::full(universe_size))) throw InvalidArgument("topology must contain X");
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!sorted_contains(opens, opens[i] & opens[j])) {
        throw InvalidArgument("opens not closed under intersection: " + opens[i].to_string() + " ∩ " +
                              opens[j].to_string());
      }
      if (!sorted_contains(opens, opens[i] | opens[j])) {
        throw InvalidArgument("opens not closed under union: " + opens[i].to_string() + " ∪ " +
                              opens[j].to_string());
      }
    }
  }

  FiniteTopology t;
  t.universe_ = universe_size;
  t.opens_ = std::move(opens);
  t.neighbourhoods_.assign(universe_size, PointSet::full(universe_size));
  for (const PointSet& o : t.opens_) {
    for (std::size_t x : o.members()) t.neighbourhoods_[x] = t.neighbourhoods_[x] & o;
  }
  return t;
}

void FiniteTopology::check_fits(const PointSet& a) const {
  if (a.universe_size() != universe_) {
    throw InvalidArgument("set over a universe of " + std::to_string(a.universe_size()) +
                          " points used with a space of " + std::to_string(universe_) + " points");
  }
}

bool FiniteTopology::is_open(const PointSet& a) const {
  check_fits(a);
  return sorted_contains(opens_, a);
}

PointSet FiniteTopology::interior(const PointSet& a) const {
  check_fits(a);
  std::uint64_t bits = 0;
  for (std::size_t x : a.members()) {
    if (neighbourhoods_[x].subset_of(a)) bits |= std::uint64_t{1} << x;
  }
  return {universe_, bits};
}

PointSet FiniteTopology::closure(const PointSet& a) const {
  check_fits(a);
  std::uint64_t bits = 0;
  for (std::size_t x = 0; x < universe_; ++x) {
    if (neighbourhoods_[x].intersects(a)) bits |= std::uint64_t{1} << x;
  }
  return {universe_, bits};
}

FiniteTopology generate_topology(std::size_t universe_size, std::span<const PointSet> subbasis, const Caps& caps) {
  if (universe_size == 0) throw InvalidArgument("a topological space needs a nonempty universe");
  if (universe_size > kMaxUniverse) throw InvalidArgument("universe exceeds 64 points");

  std::vector<std::uint64_t> items{0, full_mask(universe_size)};
  std::unordered_set<std::uint64_t> seen(items.begin(), items.end());
  for (const PointSet& s : subbasis) {
    if (s.universe_size() != universe_size) {
      throw InvalidArgument("subbasis member " + s.to_string() + " does not fit a universe of " +
                            std::to_string(universe_size) + " points");
    }
    if (seen.insert(s.bits()).second) items.push_back(s.bits());
  }

  auto meet = [](std::uint64_t a, std::uint64_t b) { return a & b; };
  auto join = [](std::uint64_t a, std::uint64_t b) { return a | b; };
  bool changed = true;
  while (changed) {
    changed = close_under(items, seen, meet, caps.max_opens);
    changed = close_under(items, seen, join, caps.max_opens) || changed;
  }

  std::vector<PointSet> opens;
  opens.reserve(items.size());
  for (std::uint64_t b : items) opens.emplace_back(universe_size, b);
  return FiniteTopology::from_opens(universe_size, std::move(opens));
}

PointSet interior(const FiniteTopology& t, const PointSet& a) { return t.interior(a); }
PointSet closure(const FiniteTopology& t, const PointSet& a) { return t.closure(a); }
bool is_regular_closed(const FiniteTopology& t, const PointSet& a) { return t.closure(t.interior(a)) == a; }
bool is_regular_open(const FiniteTopology& t, const PointSet& a) { return t.interior(t.closure(a)) == a; }

// ---------------------------------------------------------------------------

RegularClosedAlgebra::RegularClosedAlgebra(FiniteTopology topology) : topology_(std::move(topology)) {
  std::set<PointSet> regions;
  for (const PointSet& u : topology_.opens()) regions.insert(topology_.closure(u));
  carrier_.assign(regions.begin(), regions.end());

  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    const PointSet& a = carrier_[i];
    if (a.empty()) continue;
    bool minimal = std::none_of(carrier_.begin(), carrier_.end(), [&](const PointSet& b) {
      return !b.empty() && b != a && b.subset_of(a);
    });
    if (minimal) atom_indices_.push_back(i);
  }
}

bool RegularClosedAlgebra::contains(const PointSet& a) const {
  return a.universe_size() == topology_.universe_size() && sorted_contains(carrier_, a);
}

std::size_t RegularClosedAlgebra::index_of(const PointSet& a) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), a);
  if (it == carrier_.end() || *it != a) throw InvalidArgument(a.to_string() + " is not a regular closed set");
  return static_cast<std::size_t>(it - carrier_.begin());
}

PointSet RegularClosedAlgebra::complement(const PointSet& a) const { return topology_.closure(a.complement()); }

PointSet RegularClosedAlgebra::join(const PointSet& a, const PointSet& b) const { return a | b; }

PointSet RegularClosedAlgebra::meet(const PointSet& a, const PointSet& b) const {
  return topology_.closure(topology_.interior(a & b));
}

std::uint64_t RegularClosedAlgebra::atom_mask(const PointSet& a) const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < atom_indices_.size(); ++i) {
    if (atom(i).subset_of(a)) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

PointSet RegularClosedAlgebra::from_atom_mask(std::uint64_t mask) const {
  PointSet out = zero();
  for (std::size_t i = 0; i < atom_indices_.size(); ++i) {
    if ((mask >> i) & 1U) out = out | atom(i);
  }
  return out;
}

RegularClosedAlgebra rc_algebra(const FiniteTopology& t) { return RegularClosedAlgebra(t); }

namespace {
void require_region(const RegularClosedAlgebra& alg, const PointSet& a) {
  if (!alg.contains(a)) throw InvalidArgument(a.to_string() + " is not a regular closed set of this space");
}
}  // namespace

bool rc_contact(const RegularClosedAlgebra& alg, const PointSet& a, const PointSet& b) {
  require_region(alg, a);
  require_region(alg, b);
  return a.intersects(b);
}

bool rc_covering(const RegularClosedAlgebra& alg, const PointSet& a, const PointSet& b, const PointSet& d) {
  require_region(alg, a);
  require_region(alg, b);
  require_region(alg, d);
  return (a & b).subset_of(d);
}

bool rc_internally_connected(const RegularClosedAlgebra& alg, const PointSet& a) {
  require_region(alg, a);
  const FiniteTopology& t = alg.topology();
  const PointSet inner = t.interior(a);
  // A split (U, V) has V = Int(A) ∖ U, so it is enough to pair each candidate U with that V.
  for (const PointSet& u : t.opens()) {
    if (u.empty() || u == inner || !u.subset_of(inner)) continue;
    if (t.is_open(inner - u)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

RegularOpenAlgebra::RegularOpenAlgebra(FiniteTopology topology) : topology_(std::move(topology)) {
  std::set<PointSet> regions;
  for (const PointSet& u : topology_.opens()) regions.insert(topology_.interior(u.complement()));
  carrier_.assign(regions.begin(), regions.end());
}

bool RegularOpenAlgebra::contains(const PointSet& a) const {
  return a.universe_size() == topology_.universe_size() && sorted_contains(carrier_, a);
}

void RegularOpenAlgebra::check_member(const PointSet& a) const {
  if (!contains(a)) throw InvalidArgument(a.to_string() + " is not a regular open set of this space");
}

PointSet RegularOpenAlgebra::complement(const PointSet& a) const { return topology_.interior(a.complement()); }

PointSet RegularOpenAlgebra::join(const PointSet& a, const PointSet& b) const {
  return topology_.interior(topology_.closure(a | b));
}

PointSet RegularOpenAlgebra::meet(const PointSet& a, const PointSet& b) const { return a & b; }

bool RegularOpenAlgebra::contact(const PointSet& a, const PointSet& b) const {
  check_member(a);
  check_member(b);
  return topology_.closure(a).intersects(topology_.closure(b));
}

RegularOpenAlgebra ro_algebra(const FiniteTopology& t) { return RegularOpenAlgebra(t); }

RcRoIsomorphism rc_ro_isomorphism_check(const FiniteTopology& t, const Caps& caps) {
  const RegularClosedAlgebra rc(t);
  const RegularOpenAlgebra ro(t);
  require_cap(rc.carrier().size(), caps.max_elements, "regular closed carrier size");

  RcRoIsomorphism out;
  std::set<PointSet> image;
  bool into = true;
  for (const PointSet& a : rc.carrier()) {
    PointSet b = t.interior(a);
    out.map.emplace_back(a, b);
    image.insert(b);
    into = into && ro.contains(b);
  }
  out.bijective = into && image.size() == rc.carrier().size() && image.size() == ro.carrier().size();
  if (!out.bijective) out.failures.push_back("Int is not a bijection between the carriers");

  out.inverse_is_closure = std::all_of(out.map.begin(), out.map.end(),
                                       [&](const auto& p) { return t.closure(p.second) == p.first; });
  if (!out.inverse_is_closure) out.failures.push_back("Cl does not invert Int on the carrier");

  out.preserves_zero = t.interior(rc.zero()) == ro.zero();
  if (!out.preserves_zero) out.failures.push_back("Int(∅) ≠ ∅");

  out.preserves_complement = true;
  out.preserves_join = true;
  out.preserves_contact = true;
  for (const PointSet& a : rc.carrier()) {
    const PointSet ia = t.interior(a);
    if (t.interior(rc.complement(a)) != ro.complement(ia) && out.preserves_complement) {
      out.preserves_complement = false;
      out.failures.push_back("complement not preserved at " + a.to_string());
    }
    for (const PointSet& b : rc.carrier()) {
      const PointSet ib = t.interior(b);
      if (out.bijective && t.interior(rc.join(a, b)) != ro.join(ia, ib) && out.preserves_join) {
        out.preserves_join = false;
        out.failures.push_back("join not preserved at " + a.to_string() + ", " + b.to_string());
      }
      if (out.bijective && a.intersects(b) != ro.contact(ia, ib) && out.preserves_contact) {
        out.preserves_contact = false;
        out.failures.push_back("contact not preserved at " + a.to_string() + ", " + b.to_string());
      }
    }
  }
  return out;
}

}  // namespace mereo
