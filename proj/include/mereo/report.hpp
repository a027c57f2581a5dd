#pragma once

#include <algorithm>
#include <stdexcept>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mereo {

/// Outcome of one named check. On failure `witness` holds the
/// lexicographically least violating tuple, in the order the check's
/// variables are quantified.
struct Verdict {
  std::string name;
  bool pass = true;
  std::vector<std::uint64_t> witness;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// An ordered list of verdicts. Used both for axiom sweeps and for embedding verification.
struct Report {
  std::vector<Verdict> verdicts;

  bool all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
  }
  /// Throws std::out_of_range for an unknown name.
  const Verdict& at(std::string_view name) const;

  friend bool operator==(const Report&, const Report&) = default;
};

using AxiomReport = Report;
using VerificationReport = Report;

inline const Verdict& Report::at(std::string_view name) const {
  for (const Verdict& v : verdicts)
    if (v.name == name) return v;
  throw std::out_of_range("no verdict named " + std::string(name));
}

}  // namespace mereo
