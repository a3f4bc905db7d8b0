#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "acp/core.hpp"
#include "acp/traversal.hpp"

namespace acp {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30;  // 2 GiB

// Knobs shared by every operation that walks the tree.
struct RunOptions {
  unsigned threads = 1;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  bool check_invariants = false;
};

// Traversal bound plus an optional recording window [record_lo, record_hi).
// When the window is set, pruning uses record_hi.
struct TraversalConfig {
  Curvature bound = 0;
  std::optional<Curvature> record_lo;
  std::optional<Curvature> record_hi;

  static TraversalConfig window(Curvature lo, Curvature hi);
  Curvature lo() const { return record_lo.value_or(1); }
  Curvature hi() const { return record_hi.value_or(bound); }
  void validate() const;
};

// Exact multiplicities of curvatures n in [lo, hi): counts[n - lo].
struct CurvatureHistogram {
  Quadruple root;
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::vector<std::uint32_t> counts;

  Curvature bounding_curvature() const { return root[0]; }
  std::uint32_t at(std::uint64_t n) const {
    return (n >= lo && n < hi) ? counts[n - lo] : 0;
  }
  std::uint64_t total() const;

  // Elementwise addition; both histograms must cover the same window.
  void merge(const CurvatureHistogram& other);

  bool operator==(const CurvatureHistogram&) const = default;
};

// Number of circles with curvature < x, bounding circle included.
std::uint64_t count_circles(const PackingDescriptor& packing, Curvature x,
                            const RunOptions& opt = {});

CurvatureHistogram histogram(const PackingDescriptor& packing, Curvature lo, Curvature hi,
                             const RunOptions& opt = {});
CurvatureHistogram histogram(const PackingDescriptor& packing, const TraversalConfig& config,
                             const RunOptions& opt = {});

// Circles of curvature < x attributed to the coordinate that created them
// (root circles to their own slot); the bounding circle is left out, so the
// four counts sum to count_circles(x) - 1.
std::array<std::uint64_t, 4> per_coordinate_counts(const PackingDescriptor& packing, Curvature x,
                                                   const RunOptions& opt = {});

// Unordered tangent pairs with both curvatures < x. Requires x > max root
// entry; equals 3 * count_circles(x) - 6.
std::uint64_t count_tangent_pairs(const PackingDescriptor& packing, Curvature x,
                                  const RunOptions& opt = {});

}  // namespace acp
