#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mereo {

/// Largest universe a PointSet can describe (members are bits of one word).
inline constexpr std::size_t kMaxUniverse = 64;

inline constexpr std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A subset of the finite universe {0, ..., n-1}. Used for point sets of a
/// topological space and for world sets of frames alike.
class PointSet {
 public:
  PointSet() = default;
  /// Throws InvalidArgument if n is 0, exceeds kMaxUniverse, or bits has members >= n.
  PointSet(std::size_t universe_size, std::uint64_t bits);

  static PointSet empty(std::size_t universe_size) { return {universe_size, 0}; }
  static PointSet full(std::size_t universe_size) { return {universe_size, full_mask(universe_size)}; }
  static PointSet of(std::size_t universe_size, std::initializer_list<std::size_t> members);
  static PointSet of(std::size_t universe_size, const std::vector<std::size_t>& members);

  std::size_t universe_size() const { return universe_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(std::size_t i) const { return i < universe_ && ((bits_ >> i) & 1U); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(const PointSet& other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(const PointSet& other) const { return (bits_ & other.bits_) != 0; }

  std::vector<std::size_t> members() const;
  PointSet complement() const { return {universe_, ~bits_ & full_mask(universe_), Unchecked{}}; }

  PointSet operator|(const PointSet& o) const { return {universe_, bits_ | o.bits_, Unchecked{}}; }
  PointSet operator&(const PointSet& o) const { return {universe_, bits_ & o.bits_, Unchecked{}}; }
  PointSet operator-(const PointSet& o) const { return {universe_, bits_ & ~o.bits_, Unchecked{}}; }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// "{0,2,5}" using 0-based indices.
  std::string to_string() const;

 private:
  struct Unchecked {};
  PointSet(std::size_t n, std::uint64_t bits, Unchecked) : universe_(n), bits_(bits) {}

  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

using WorldSet = PointSet;

}  // namespace mereo
