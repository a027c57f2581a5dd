#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mereo/eca.hpp"
#include "mereo/frames.hpp"
#include "mereo/report.hpp"
#include "mereo/topology.hpp"

namespace mereo {

/// A map from the elements of a verified algebra to subsets of a world set.
struct Embedding {
  ExtendedContactAlgebra source;
  std::size_t world_count = 0;
  /// image[a] for every element a.
  std::vector<WorldSet> image;

  const WorldSet& operator()(Element a) const { return image.at(a); }
};

/// A world of the type-1 and type-2 frames: an atom of the regular closed
/// algebra together with one of its points.
struct WorldAtomPoint {
  /// Position in the algebra's atom order, which is also the atom's bit in element masks.
  std::size_t atom = 0;
  /// Index of the atom in the algebra's carrier.
  std::size_t carrier_index = 0;
  std::size_t point = 0;

  friend bool operator==(const WorldAtomPoint&, const WorldAtomPoint&) = default;
};

struct ParametrizedRepresentation {
  ParametrizedFrame frame;
  Embedding embedding;
};

struct Type1Representation {
  RegularClosedAlgebra algebra;
  std::vector<WorldAtomPoint> worlds;
  EquivalenceFrame1 frame;
  Embedding embedding;
};

struct Type2Representation {
  RegularClosedAlgebra algebra;
  std::vector<WorldAtomPoint> worlds;
  EquivalenceFrame2 frame;
  Embedding embedding;
};

/// Worlds are the maximal filters ↑α, one per atom, so world i is atom i and
/// h(a) has the same bits as a. R(U)(s, t) holds when every (a, b) ⊢ d with
/// a in s and b in t has some e ⊇ every generator in U with d ≰ e. The
/// relation is tabulated and the frame is certified antitone. Requires
/// k ≤ max_axiom_atoms.
ParametrizedRepresentation build_parametrized_frame(const ExtendedContactAlgebra& e, const Caps& caps = {});

/// Worlds are the (atom, point) couples with the point inside the atom,
/// ordered by atom then point. h(a) is the set of couples whose atom lies
/// below a. Type 1 relates couples with equal points; type 2 relates couples
/// with equal atoms (R1) and with equal points (R2). The source algebra is
/// eca_from_rc(alg). Requires at most max_worlds couples.
Type1Representation build_type1(const RegularClosedAlgebra& alg, const Caps& caps = {});
Type2Representation build_type2(const RegularClosedAlgebra& alg, const Caps& caps = {});

/// Verdicts, in order: injective (a, b) with a < b, preserves_zero (0),
/// preserves_complement (a), preserves_join (a, b), preserves_covering (a, b, d).
/// Parallel over the first variable.
VerificationReport verify_embedding(const CoveringRelation& source, const std::vector<WorldSet>& image,
                                    const WorldCovering& target, const Caps& caps = {});
VerificationReport verify_embedding(const Embedding& h, const WorldCovering& target, const Caps& caps = {});

/// "preserves_internal_connectedness" (a): the algebraic c° of a on the
/// source agrees with target_connected(image[a]) for every a.
Verdict verify_c_preservation(const CoveringRelation& source, const std::vector<WorldSet>& image,
                              const std::function<bool(const WorldSet&)>& target_connected);

/// The embedding report against the representation's own frame; type 2 also
/// runs verify_c_preservation with frame2_internally_connected.
VerificationReport verify_representation(const ParametrizedRepresentation& r, const Caps& caps = {});
VerificationReport verify_representation(const Type1Representation& r, const Caps& caps = {});
VerificationReport verify_representation(const Type2Representation& r, const Caps& caps = {});

WorldCovering target_covering(const ParametrizedRepresentation& r);
WorldCovering target_covering(const Type1Representation& r);
WorldCovering target_covering(const Type2Representation& r);

struct Split {
  WorldSet first;
  WorldSet second;

  friend bool operator==(const Split&, const Split&) = default;
};

/// Every ordered pair of nonempty (A1, A2) with A1 ∪ A2 = h(a) and
/// (A1, A2) ⊢ h(a)⋆ on the type-2 frame, by exhaustive 3^|h(a)| search.
std::vector<Split> admissible_splits(const Type2Representation& r, Element a, const Caps& caps = {});

struct SplitPullback {
  Element first = 0;
  Element second = 0;
  /// split_parts_nonzero (a1, a2), split_parts_join (a1, a2),
  /// split_parts_cover (a1, a2).
  Report report;
};

/// Pulls an admissible split back to the algebra: a_i is the join of every b
/// with h(b) inside the union of h(α) over the atoms α occurring in A_i.
/// Checks both parts are nonzero, join to a, and cover into a⋆. Throws
/// InvalidArgument when (A1, A2) is not an admissible split of h(a).
SplitPullback pull_back_split(const Type2Representation& r, Element a, const WorldSet& a1, const WorldSet& a2);

namespace reference {

/// Serial nested-loop version of mereo::verify_embedding.
VerificationReport verify_embedding(const CoveringRelation& source, const std::vector<WorldSet>& image,
                                    const WorldCovering& target);

}  // namespace reference
}  // namespace mereo
