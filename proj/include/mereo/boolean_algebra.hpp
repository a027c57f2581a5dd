#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mereo {

/// An element of a finite Boolean algebra, encoded as the mask of atoms below it.
using Element = std::uint32_t;

/// Set of elements of an algebra with at most 64 elements, one bit per element.
using ElementSet = std::uint64_t;

/// Largest supported atom count: 2^6 = 64 elements, so element sets fit a word.
inline constexpr unsigned kMaxAtoms = 6;

/// The Boolean algebra of all atom masks over k atoms. Order is mask inclusion,
/// join/meet/complement are mask union/intersection/complement.
class FiniteBooleanAlgebra {
 public:
  /// Throws InvalidArgument for k = 0 (degenerate) or k > kMaxAtoms.
  explicit FiniteBooleanAlgebra(unsigned atom_count);

  unsigned atom_count() const { return atoms_; }
  std::size_t size() const { return std::size_t{1} << atoms_; }
  Element zero() const { return 0; }
  Element one() const { return static_cast<Element>(size() - 1); }
  Element atom(unsigned i) const { return Element{1} << i; }

  Element join(Element a, Element b) const { return a | b; }
  Element meet(Element a, Element b) const { return a & b; }
  Element complement(Element a) const { return ~a & one(); }
  bool leq(Element a, Element b) const { return (a & ~b) == 0; }
  bool is_atom(Element a) const { return std::has_single_bit(a); }
  bool contains(Element a) const { return a < size(); }

  friend bool operator==(const FiniteBooleanAlgebra&, const FiniteBooleanAlgebra&) = default;

 private:
  unsigned atoms_;
};

/// A total binary relation on the elements of an algebra.
class ContactRelation {
 public:
  explicit ContactRelation(FiniteBooleanAlgebra algebra);
  static ContactRelation from_predicate(FiniteBooleanAlgebra algebra, const std::function<bool(Element, Element)>& p);

  const FiniteBooleanAlgebra& algebra() const { return algebra_; }
  bool holds(Element a, Element b) const { return (rows_[a] >> b) & 1U; }
  /// The set of b with C(a, b).
  ElementSet row(Element a) const { return rows_[a]; }
  void set(Element a, Element b, bool value);

  friend bool operator==(const ContactRelation&, const ContactRelation&) = default;

 private:
  FiniteBooleanAlgebra algebra_;
  std::vector<ElementSet> rows_;
};

/// A total ternary relation (a, b) ⊢ d on the elements of an algebra, stored
/// densely: one word per (a, b) holding the set of d.
class CoveringRelation {
 public:
  /// The empty relation.
  explicit CoveringRelation(FiniteBooleanAlgebra algebra);
  static CoveringRelation from_predicate(FiniteBooleanAlgebra algebra,
                                         const std::function<bool(Element, Element, Element)>& p);
  /// (a, b) ⊢ d iff a ∩ b ≤ d: the covering of a discrete space.
  static CoveringRelation discrete(FiniteBooleanAlgebra algebra);

  const FiniteBooleanAlgebra& algebra() const { return algebra_; }
  std::size_t element_count() const { return algebra_.size(); }

  bool covers(Element a, Element b, Element d) const { return (rows_[index(a, b)] >> d) & 1U; }
  /// The set of d with (a, b) ⊢ d.
  ElementSet row(Element a, Element b) const { return rows_[index(a, b)]; }
  void set(Element a, Element b, Element d, bool value);

  friend bool operator==(const CoveringRelation&, const CoveringRelation&) = default;

 private:
  std::size_t index(Element a, Element b) const { return (std::size_t{a} << algebra_.atom_count()) | b; }

  FiniteBooleanAlgebra algebra_;
  std::vector<ElementSet> rows_;
};

}  // namespace mereo
