#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mereo/labeled.hpp"
#include "mereo/topology.hpp"

namespace mereo {

/// Two spaces whose regular closed contact algebras are isomorphic although
/// internal connectedness differs, so contact alone cannot define it.
///
/// X has points 1..7 and subbasis {1,2,3}, {2,5,7}, {3,6,7}; X' has points
/// 2..7 and subbasis {2,3}, {2,5,7}, {3,6,7}. The map is A ↦ A∖{1}.
struct Example1Result {
  LabeledSpace x;
  LabeledSpace x_prime;
  std::size_t carrier_size_x = 0;
  std::size_t carrier_size_x_prime = 0;
  /// (A, A∖{1}) for every regular closed A of X, in carrier order.
  std::vector<std::pair<PointSet, PointSet>> correspondence = {};

  bool bijective = false;
  bool preserves_zero = false;
  bool preserves_complement = false;
  bool preserves_join = false;
  bool preserves_contact = false;
  /// Carrier index pairs (of X) where contact in X and in X' disagree.
  std::vector<std::pair<std::size_t, std::size_t>> contact_diff = {};

  PointSet region_x = {};        ///< {1,2,3,4,5,6}
  PointSet region_x_prime = {};  ///< {2,3,4,5,6}
  /// Topological c°: interior not split by two disjoint nonempty opens.
  bool connected_x = false;
  bool connected_x_prime = false;
  /// The same question answered from the covering relation alone.
  bool connected_x_from_covering = false;
  bool connected_x_prime_from_covering = false;

  bool isomorphism() const {
    return bijective && preserves_zero && preserves_complement && preserves_join && preserves_contact;
  }
  /// Isomorphic contact algebras, connected on one side and not on the other.
  bool non_definability_witnessed() const { return isomorphism() && connected_x && !connected_x_prime; }
};

Example1Result run_example1();

}  // namespace mereo
