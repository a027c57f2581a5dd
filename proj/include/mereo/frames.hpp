#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "mereo/boolean_algebra.hpp"
#include "mereo/caps.hpp"
#include "mereo/eca.hpp"
#include "mereo/point_set.hpp"

namespace mereo {

/// A world set W with a binary relation R(U) for every U ⊆ W.
///
/// R is stored either as a full table (2^|W| relations) or as a row function
/// evaluated on demand. A frame is antitone when U ⊆ U' implies
/// R(U') ⊆ R(U); that flag is only ever set by a constructor that guarantees
/// it or by a passing audit.
class ParametrizedFrame {
 public:
  /// Row function: the set of t with R(U)(s, t), given U as a world mask.
  using RowFn = std::function<std::uint64_t(std::uint64_t u, std::size_t s)>;

  /// table[U][s] is the successor mask of s under R(U). Requires |W| ≤ max_naive_worlds.
  static ParametrizedFrame from_table(std::size_t world_count, std::vector<std::vector<std::uint64_t>> table,
                                      const Caps& caps = {});
  static ParametrizedFrame from_predicate(std::size_t world_count,
                                          const std::function<bool(std::uint64_t u, std::size_t s, std::size_t t)>& r);
  static ParametrizedFrame from_rows(std::size_t world_count, RowFn rows);
  /// For builders that prove antitonicity by construction.
  static ParametrizedFrame certified_antitone(std::size_t world_count, RowFn rows);

  std::size_t world_count() const { return worlds_; }
  std::uint64_t successors(std::uint64_t u, std::size_t s) const { return rows_(u, s); }
  bool related(const WorldSet& u, std::size_t s, std::size_t t) const;
  bool antitone() const { return antitone_; }

  /// Checks R(U ∪ {x}) ⊆ R(U) for every U and x, which is equivalent to
  /// antitonicity. Requires |W| ≤ max_naive_worlds.
  bool audit_antitone(const Caps& caps = {}) const;
  /// A copy carrying the antitone flag. Throws InvalidArgument if the audit fails.
  ParametrizedFrame audited(const Caps& caps = {}) const;

 private:
  ParametrizedFrame(std::size_t worlds, RowFn rows, bool antitone)
      : worlds_(worlds), rows_(std::move(rows)), antitone_(antitone) {}

  std::size_t worlds_;
  RowFn rows_;
  bool antitone_;
};

/// For all s in A, t in B and U ⊇ D: not R(U)(s, t). Enumerates the supersets
/// of D; requires |W| ≤ max_naive_worlds.
bool pframe_covering_naive(const ParametrizedFrame& f, const WorldSet& a, const WorldSet& b, const WorldSet& d,
                           const Caps& caps = {});
/// For all s in A, t in B: not R(D)(s, t). Requires an antitone frame.
bool pframe_covering_antitone(const ParametrizedFrame& f, const WorldSet& a, const WorldSet& b, const WorldSet& d);

/// A partition of {0, ..., n-1}, stored as a class id per world and a member
/// mask per class. Class ids are renumbered by first occurrence.
class Partition {
 public:
  /// Throws InvalidArgument if class_ids is empty or longer than kMaxUniverse.
  explicit Partition(const std::vector<std::size_t>& class_ids);
  static Partition identity(std::size_t n);
  static Partition single(std::size_t n);

  std::size_t world_count() const { return ids_.size(); }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t class_of(std::size_t s) const { return ids_.at(s); }
  const std::vector<std::size_t>& class_ids() const { return ids_; }
  /// Member mask of the class containing s.
  std::uint64_t class_members(std::size_t s) const { return classes_[ids_.at(s)]; }
  const std::vector<std::uint64_t>& classes() const { return classes_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> ids_;
  std::vector<std::uint64_t> classes_;
};

/// A world set with one equivalence relation.
class EquivalenceFrame1 {
 public:
  explicit EquivalenceFrame1(Partition equiv) : equiv_(std::move(equiv)) {}
  std::size_t world_count() const { return equiv_.world_count(); }
  const Partition& equiv() const { return equiv_; }

 private:
  Partition equiv_;
};

/// A world set with two equivalence relations R1, R2. The sets R1(R2(s)) are
/// precomputed.
class EquivalenceFrame2 {
 public:
  /// Throws InvalidArgument if the partitions have different world counts.
  EquivalenceFrame2(Partition equiv1, Partition equiv2);
  std::size_t world_count() const { return equiv1_.world_count(); }
  const Partition& equiv1() const { return equiv1_; }
  const Partition& equiv2() const { return equiv2_; }
  std::uint64_t r1r2(std::size_t s) const { return r1r2_.at(s); }

 private:
  Partition equiv1_;
  Partition equiv2_;
  std::vector<std::uint64_t> r1r2_;
};

/// A∩B ⊆ D, and every class meeting both A and B meets D.
bool frame1_covering(const EquivalenceFrame1& f, const WorldSet& a, const WorldSet& b, const WorldSet& d);
/// A∩B ⊆ D, and every R1(R2(s)) meeting both A and B meets D.
bool frame2_covering(const EquivalenceFrame2& f, const WorldSet& a, const WorldSet& b, const WorldSet& d);
/// ⋃{R1(t) : t in R2(s)}.
WorldSet r1r2_class(const EquivalenceFrame2& f, std::size_t s);

/// A binary relation on {0, ..., n-1}; rows()[s] is the successor mask of s.
class BinaryRelation {
 public:
  BinaryRelation(std::size_t world_count, std::vector<std::uint64_t> rows);
  static BinaryRelation identity(std::size_t n);
  static BinaryRelation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t world_count() const { return rows_.size(); }
  bool holds(std::size_t s, std::size_t t) const { return (rows_.at(s) >> t) & 1U; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  bool is_reflexive() const;
  bool is_symmetric() const;

 private:
  std::vector<std::uint64_t> rows_;
};

/// Some s in A and t in B with R(s, t). Throws InvalidArgument unless R is
/// reflexive and symmetric.
bool gv_contact(const BinaryRelation& r, const WorldSet& a, const WorldSet& b);
/// gv_contact tabulated over the powerset of W; requires |W| ≤ max_powerset_worlds.
ContactRelation powerset_contact(const BinaryRelation& r, const Caps& caps = {});

using Frame = std::variant<ParametrizedFrame, EquivalenceFrame1, EquivalenceFrame2>;

std::size_t world_count(const Frame& f);

/// The covering of a frame's powerset algebra. Parametrized frames use the
/// antitone shortcut when certified and the naive evaluator otherwise.
bool powerset_covering(const Frame& f, const WorldSet& a, const WorldSet& b, const WorldSet& d,
                       const Caps& caps = {});

/// Tabulates the powerset covering; world i is atom i, so an element mask is
/// a world mask. Equivalence frames are verified as ECAs; parametrized frames
/// are classified (ECA if ECA1-5 happen to hold, otherwise WECA). Requires
/// |W| ≤ max_powerset_worlds.
ExtendedContactAlgebra powerset_eca(const Frame& f, const Caps& caps = {});

/// Internal connectedness on a type-2 frame's powerset, computed as
/// connectivity of S under the blocks R1(R2(s)) ⊆ S. Equal to the algebraic
/// definition over the powerset covering.
bool frame2_internally_connected(const EquivalenceFrame2& f, const WorldSet& s);

using WorldCovering = std::function<bool(std::uint64_t a, std::uint64_t b, std::uint64_t d)>;

/// For all nonempty B, D with B ∪ D = S: not (B, D) ⊢ W∖S. Enumerates all
/// 3^|S| pairs; requires |S| ≤ max_split_worlds.
bool internally_connected_naive(std::size_t world_count, const WorldCovering& covers, const WorldSet& s,
                                const Caps& caps = {});

}  // namespace mereo
