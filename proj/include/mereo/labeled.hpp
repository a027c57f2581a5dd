#pragma once

#include <string>
#include <vector>

#include "mereo/caps.hpp"
#include "mereo/topology.hpp"

namespace mereo {

/// A finite topology whose points carry user labels. Point i has label labels[i].
struct LabeledSpace {
  std::vector<std::string> labels;
  FiniteTopology topology;

  /// Throws InvalidArgument for an unknown label.
  std::size_t index_of(const std::string& label) const;
  PointSet set_of(const std::vector<std::string>& members) const;
  /// Labels of the members, in point order.
  std::vector<std::string> labels_of(const PointSet& s) const;
  /// "{1,2,3}".
  std::string render(const PointSet& s) const;
};

/// Generates the topology from a labelled subbasis. Throws InvalidArgument on
/// duplicate or unknown labels.
LabeledSpace make_labeled_space(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& subbasis,
                                const Caps& caps = {});

}  // namespace mereo
