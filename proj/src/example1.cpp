#include "mereo/example1.hpp"

#include <algorithm>

#include "mereo/eca.hpp"

namespace mereo {

namespace {

LabeledSpace space_x() {
  return make_labeled_space({"1", "2", "3", "4", "5", "6", "7"}, {{"1", "2", "3"}, {"2", "5", "7"}, {"3", "6", "7"}});
}

LabeledSpace space_x_prime() {
  return make_labeled_space({"2", "3", "4", "5", "6", "7"}, {{"2", "3"}, {"2", "5", "7"}, {"3", "6", "7"}});
}

bool connected_from_covering(const RegularClosedAlgebra& alg, const PointSet& region) {
  return internally_connected_algebraic(eca_from_rc(alg), static_cast<Element>(alg.atom_mask(region)));
}

}  // namespace

Example1Result run_example1() {
  Example1Result r{.x = space_x(), .x_prime = space_x_prime()};
  const RegularClosedAlgebra rx(r.x.topology);
  const RegularClosedAlgebra ry(r.x_prime.topology);
  r.carrier_size_x = rx.carrier().size();
  r.carrier_size_x_prime = ry.carrier().size();

  // Label k sits at index k-1 in X and k-2 in X', so dropping point 1 is a shift.
  const std::size_t m = ry.topology().universe_size();
  auto f = [&](const PointSet& a) { return PointSet(m, a.bits() >> 1); };

  const auto& cx = rx.carrier();
  std::vector<PointSet> images;
  bool lands = true;
  for (const PointSet& a : cx) {
    images.push_back(f(a));
    r.correspondence.emplace_back(a, images.back());
    lands = lands && ry.contains(images.back());
  }
  std::vector<PointSet> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = lands && sorted == ry.carrier();

  r.preserves_zero = f(rx.zero()) == ry.zero();
  r.preserves_complement = r.preserves_join = r.preserves_contact = lands;
  for (std::size_t i = 0; i < cx.size() && lands; ++i) {
    r.preserves_complement = r.preserves_complement && f(rx.complement(cx[i])) == ry.complement(images[i]);
    for (std::size_t j = 0; j < cx.size(); ++j) {
      r.preserves_join = r.preserves_join && f(rx.join(cx[i], cx[j])) == ry.join(images[i], images[j]);
      if (rc_contact(rx, cx[i], cx[j]) != rc_contact(ry, images[i], images[j])) r.contact_diff.emplace_back(i, j);
    }
  }
  r.preserves_contact = lands && r.contact_diff.empty();

  r.region_x = r.x.set_of({"1", "2", "3", "4", "5", "6"});
  r.region_x_prime = r.x_prime.set_of({"2", "3", "4", "5", "6"});
  r.connected_x = rc_internally_connected(rx, r.region_x);
  r.connected_x_prime = rc_internally_connected(ry, r.region_x_prime);
  r.connected_x_from_covering = connected_from_covering(rx, r.region_x);
  r.connected_x_prime_from_covering = connected_from_covering(ry, r.region_x_prime);
  return r;
}

}  // namespace mereo
