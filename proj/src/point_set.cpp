#include "mereo/point_set.hpp"

#include "mereo/caps.hpp"
#include "mereo/error.hpp"

namespace mereo {

void require_cap(std::size_t value, std::size_t cap, const std::string& what) {
  if (value > cap) {
    throw CapExceeded(what + " is " + std::to_string(value) + ", above the cap of " + std::to_string(cap));
  }
}

PointSet::PointSet(std::size_t universe_size, std::uint64_t bits) : universe_(universe_size), bits_(bits) {
  if (universe_size == 0) throw InvalidArgument("universe must be nonempty");
  if (universe_size > kMaxUniverse) {
    throw InvalidArgument("universe of " + std::to_string(universe_size) + " points exceeds " +
                          std::to_string(kMaxUniverse));
  }
  if ((bits & ~full_mask(universe_size)) != 0) {
    throw InvalidArgument("set has a member outside a universe of " + std::to_string(universe_size) + " points");
  }
}

PointSet PointSet::of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
  return of(universe_size, std::vector<std::size_t>(members));
}

PointSet PointSet::of(std::size_t universe_size, const std::vector<std::size_t>& members) {
  std::uint64_t bits = 0;
  for (std::size_t m : members) {
    if (m >= universe_size || m >= kMaxUniverse) {
      throw InvalidArgument("point " + std::to_string(m) + " outside a universe of " +
                            std::to_string(universe_size) + " points");
    }
    bits |= std::uint64_t{1} << m;
  }
  return {universe_size, bits};
}

std::vector<std::size_t> PointSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

std::string PointSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t m : members()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

}  // namespace mereo
