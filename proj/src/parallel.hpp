#pragma once

#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mereo/report.hpp"

namespace mereo::detail {

using Witness = std::vector<std::uint64_t>;

/// Runs probe(i) for every i in [0, count) and returns the witness of the
/// smallest i whose probe fails. Each probe must itself return its
/// lexicographically least witness, so the result does not depend on the
/// number of threads or the schedule. Probes above the best index found so
/// far are skipped.
template <class Probe>
std::optional<Witness> first_witness(std::size_t count, Probe&& probe) {
  std::vector<std::optional<Witness>> found(count);
  std::atomic<std::size_t> best{count};
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx > best.load(std::memory_order_relaxed)) continue;
    if (auto w = probe(idx)) {
      found[idx] = std::move(w);
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur && !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
      }
    }
  }
  const std::size_t b = best.load();
  if (b == count) return std::nullopt;
  return std::move(found[b]);
}

inline Verdict verdict(const char* name, std::optional<Witness> w) {
  Verdict v{name, !w.has_value(), {}};
  if (w) v.witness = std::move(*w);
  return v;
}

inline std::uint64_t lowest(std::uint64_t bits) { return static_cast<std::uint64_t>(std::countr_zero(bits)); }

/// Visits the supersets of `sub` within `full` in increasing order.
template <class Fn>
bool for_each_superset(std::uint64_t sub, std::uint64_t full, Fn&& fn) {
  const std::uint64_t free = full & ~sub;
  std::uint64_t s = 0;
  while (true) {
    if (fn(sub | s)) return true;
    if (s == free) return false;
    s = ((s | ~free) + 1) & free;
  }
}

/// Visits the subsets of `set` in increasing order.
template <class Fn>
bool for_each_subset(std::uint64_t set, Fn&& fn) {
  std::uint64_t s = 0;
  while (true) {
    if (fn(s)) return true;
    if (s == set) return false;
    s = ((s | ~set) + 1) & set;
  }
}

}  // namespace mereo::detail
