#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mereo/caps.hpp"
#include "mereo/point_set.hpp"

namespace mereo {

/// A topology on {0, ..., n-1}: the full open-set family, sorted by bit pattern.
///
/// Interior and closure are answered from the minimal open neighbourhood of
/// each point (the intersection of all opens containing it), which every
/// finite topology has: Int(A) = {x : N(x) ⊆ A} and Cl(A) = {x : N(x) ∩ A ≠ ∅}.
class FiniteTopology {
 public:
  /// Validates the topology axioms; throws InvalidArgument on violation.
  static FiniteTopology from_opens(std::size_t universe_size, std::vector<PointSet> opens);

  std::size_t universe_size() const { return universe_; }
  PointSet universe() const { return PointSet::full(universe_); }
  const std::vector<PointSet>& opens() const { return opens_; }

  bool is_open(const PointSet& a) const;
  bool is_closed(const PointSet& a) const { return is_open(a.complement()); }
  /// Smallest open set containing point x.
  const PointSet& neighbourhood(std::size_t x) const { return neighbourhoods_.at(x); }

  PointSet interior(const PointSet& a) const;
  PointSet closure(const PointSet& a) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.universe_ == b.universe_ && a.opens_ == b.opens_;
  }

 private:
  FiniteTopology() = default;
  void check_fits(const PointSet& a) const;

  std::size_t universe_ = 0;
  std::vector<PointSet> opens_;
  std::vector<PointSet> neighbourhoods_;
};

/// Least topology containing the subbasis: seeded with the subbasis plus ∅ and X,
/// closed under pairwise intersection then pairwise union until stable.
FiniteTopology generate_topology(std::size_t universe_size, std::span<const PointSet> subbasis,
                                 const Caps& caps = {});

PointSet interior(const FiniteTopology& t, const PointSet& a);
PointSet closure(const FiniteTopology& t, const PointSet& a);
bool is_regular_closed(const FiniteTopology& t, const PointSet& a);
bool is_regular_open(const FiniteTopology& t, const PointSet& a);

/// The Boolean algebra of regular closed sets: 0 = ∅, A⋆ = Cl(X∖A), A ∪ B,
/// and A ∩ B = Cl(Int(A∩B)). The carrier is sorted by bit pattern.
class RegularClosedAlgebra {
 public:
  explicit RegularClosedAlgebra(FiniteTopology topology);

  const FiniteTopology& topology() const { return topology_; }
  const std::vector<PointSet>& carrier() const { return carrier_; }
  /// Indices into carrier() of the minimal nonzero elements, in carrier order.
  const std::vector<std::size_t>& atom_indices() const { return atom_indices_; }
  std::size_t atom_count() const { return atom_indices_.size(); }
  const PointSet& atom(std::size_t i) const { return carrier_[atom_indices_.at(i)]; }

  bool contains(const PointSet& a) const;
  /// Throws InvalidArgument if a is not regular closed.
  std::size_t index_of(const PointSet& a) const;

  PointSet zero() const { return PointSet::empty(topology_.universe_size()); }
  PointSet one() const { return topology_.universe(); }
  PointSet complement(const PointSet& a) const;
  PointSet join(const PointSet& a, const PointSet& b) const;
  PointSet meet(const PointSet& a, const PointSet& b) const;

  /// Bit i set iff atom i lies below a.
  std::uint64_t atom_mask(const PointSet& a) const;
  /// Join of the atoms selected by mask.
  PointSet from_atom_mask(std::uint64_t mask) const;

 private:
  FiniteTopology topology_;
  std::vector<PointSet> carrier_;
  std::vector<std::size_t> atom_indices_;
};

RegularClosedAlgebra rc_algebra(const FiniteTopology& t);

/// A ∩ B ≠ ∅.
bool rc_contact(const RegularClosedAlgebra& alg, const PointSet& a, const PointSet& b);
/// A ∩ B ⊆ D.
bool rc_covering(const RegularClosedAlgebra& alg, const PointSet& a, const PointSet& b, const PointSet& d);
/// Int(A) is not the union of two disjoint nonempty opens. Enumerates open pairs.
bool rc_internally_connected(const RegularClosedAlgebra& alg, const PointSet& a);

/// The mirror algebra of regular open sets: 0 = ∅, A⋆ = Int(X∖A),
/// A ∪ B = Int(Cl(A∪B)), A ∩ B plain, contact iff Cl(A) ∩ Cl(B) ≠ ∅.
class RegularOpenAlgebra {
 public:
  explicit RegularOpenAlgebra(FiniteTopology topology);

  const FiniteTopology& topology() const { return topology_; }
  const std::vector<PointSet>& carrier() const { return carrier_; }
  bool contains(const PointSet& a) const;

  PointSet zero() const { return PointSet::empty(topology_.universe_size()); }
  PointSet complement(const PointSet& a) const;
  PointSet join(const PointSet& a, const PointSet& b) const;
  PointSet meet(const PointSet& a, const PointSet& b) const;
  bool contact(const PointSet& a, const PointSet& b) const;

 private:
  void check_member(const PointSet& a) const;

  FiniteTopology topology_;
  std::vector<PointSet> carrier_;
};

RegularOpenAlgebra ro_algebra(const FiniteTopology& t);

struct RcRoIsomorphism {
  /// (A, Int(A)) for every A in the regular closed carrier, in carrier order.
  std::vector<std::pair<PointSet, PointSet>> map;
  bool bijective = false;
  bool inverse_is_closure = false;
  bool preserves_zero = false;
  bool preserves_complement = false;
  bool preserves_join = false;
  bool preserves_contact = false;
  /// Human-readable description of each failed check; empty when verified.
  std::vector<std::string> failures;

  bool verified() const { return failures.empty(); }
};

/// Checks that A ↦ Int(A) is a contact-algebra isomorphism RC → RO with inverse B ↦ Cl(B).
RcRoIsomorphism rc_ro_isomorphism_check(const FiniteTopology& t, const Caps& caps = {});

}  // namespace mereo
