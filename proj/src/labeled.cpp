#include "mereo/labeled.hpp"

#include <algorithm>
#include <set>

#include "mereo/error.hpp"

namespace mereo {

std::size_t LabeledSpace::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidArgument("unknown label \"" + label + "\"");
  return static_cast<std::size_t>(it - labels.begin());
}

PointSet LabeledSpace::set_of(const std::vector<std::string>& members) const {
  std::vector<std::size_t> idx;
  idx.reserve(members.size());
  for (const auto& m : members) idx.push_back(index_of(m));
  return PointSet::of(labels.size(), idx);
}

std::vector<std::string> LabeledSpace::labels_of(const PointSet& s) const {
  std::vector<std::string> out;
  for (std::size_t i : s.members()) out.push_back(labels.at(i));
  return out;
}

std::string LabeledSpace::render(const PointSet& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(s)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

LabeledSpace make_labeled_space(std::vector<std::string> labels, const std::vector<std::vector<std::string>>& subbasis,
                                const Caps& caps) {
  if (labels.empty()) throw InvalidArgument("universe must be nonempty");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    throw InvalidArgument("universe labels must be distinct");
  }
  if (labels.size() > kMaxUniverse) throw InvalidArgument("universe has more than 64 points");
  // The indiscrete space supplies label lookup before the real topology exists.
  const std::size_t n = labels.size();
  LabeledSpace space{std::move(labels), generate_topology(n, {}, caps)};
  std::vector<PointSet> sets;
  sets.reserve(subbasis.size());
  for (const auto& s : subbasis) sets.push_back(space.set_of(s));
  space.topology = generate_topology(n, sets, caps);
  return space;
}

}  // namespace mereo
