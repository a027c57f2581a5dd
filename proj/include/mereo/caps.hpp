#pragma once

#include <cstddef>
#include <string>

namespace mereo {

/// Limits on exhaustive enumerations. Every operation that sweeps tuples,
/// powersets or superset families checks the relevant cap up front and
/// throws CapExceeded instead of running for an unpredictable time.
struct Caps {
  /// Largest carrier (or Boolean algebra) swept by pair/triple enumerations.
  /// Hard upper bound 64: element sets are stored as 64-bit words.
  std::size_t max_elements = 64;
  /// Largest atom count for the 4-, 5- and 6-ary axiom sweeps.
  std::size_t max_axiom_atoms = 5;
  /// Largest universe for brute-force 2^n point-set oracles.
  std::size_t max_oracle_universe = 10;
  /// Largest open-set family produced by topology generation.
  std::size_t max_opens = std::size_t{1} << 16;
  /// Largest world set for the naive parametrized-frame covering (all supersets of D).
  std::size_t max_naive_worlds = 16;
  /// Largest world set tabulated into a powerset algebra.
  std::size_t max_powerset_worlds = 5;
  /// Largest world set for frame-side exhaustive evaluations (embedding targets).
  std::size_t max_worlds = 64;
  /// Largest region whose splits are enumerated pairwise (3^m candidate pairs).
  std::size_t max_split_worlds = 12;
};

void require_cap(std::size_t value, std::size_t cap, const std::string& what);

}  // namespace mereo
