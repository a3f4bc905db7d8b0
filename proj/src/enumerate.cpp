#include "acp/enumerate.hpp"

#include <numeric>
#include <string>

#include "acp/error.hpp"

namespace acp {

namespace {

TraversalOptions traversal_options(Curvature bound, const RunOptions& opt) {
  return TraversalOptions{bound, opt.check_invariants, opt.threads};
}

struct CountVisitor {
  std::uint64_t n = 0;
  void operator()(const NodeVisit&) { ++n; }
  void merge(const CountVisitor& o) { n += o.n; }
};

struct CoordinateVisitor {
  std::array<std::uint64_t, 4> counts{};
  void operator()(const NodeVisit& v) { ++counts[v.coord]; }
  void merge(const CoordinateVisitor& o) {
    for (int i = 0; i < 4; ++i) counts[i] += o.counts[i];
  }
};

struct HistogramVisitor {
  CurvatureHistogram hist;
  void operator()(const NodeVisit& v) {
    const auto n = static_cast<std::uint64_t>(v.curvature());
    if (n >= hist.lo) ++hist.counts[n - hist.lo];
  }
  void merge(const HistogramVisitor& o) { hist.merge(o.hist); }
};

}  // namespace

TraversalConfig TraversalConfig::window(Curvature lo, Curvature hi) {
  TraversalConfig c{hi, lo, hi};
  c.validate();
  return c;
}

void TraversalConfig::validate() const {
  if (bound < 1) throw UsageError("bound must be positive");
  if (record_lo.has_value() != record_hi.has_value()) {
    throw UsageError("recording window needs both ends");
  }
  if (record_lo) {
    if (!(0 < *record_lo && *record_lo < *record_hi && *record_hi <= bound)) {
      throw UsageError("recording window must satisfy 0 < lo < hi <= bound");
    }
  }
}

std::uint64_t CurvatureHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

void CurvatureHistogram::merge(const CurvatureHistogram& other) {
  if (other.lo != lo || other.hi != hi || other.root != root) {
    throw UsageError("cannot merge histograms over different windows or packings");
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

std::uint64_t count_circles(const PackingDescriptor& packing, Curvature x, const RunOptions& opt) {
  if (x < 1) throw UsageError("count_circles needs x >= 1");
  std::uint64_t n = 1;  // bounding circle
  for (int i = 1; i < 4; ++i) n += packing.root[i] < x ? 1 : 0;
  return n + traverse_parallel(packing, traversal_options(x, opt), CountVisitor{}).visits;
}

CurvatureHistogram histogram(const PackingDescriptor& packing, Curvature lo, Curvature hi,
                             const RunOptions& opt) {
  if (lo < 1 || lo >= hi) throw UsageError("histogram needs 1 <= lo < hi");
  return histogram(packing, TraversalConfig::window(lo, hi), opt);
}

CurvatureHistogram histogram(const PackingDescriptor& packing, const TraversalConfig& config,
                             const RunOptions& opt) {
  config.validate();
  const Curvature lo = config.lo();
  const Curvature hi = config.hi();
  const std::uint64_t width = static_cast<std::uint64_t>(hi - lo);
  const std::uint64_t copies = std::max(1u, opt.threads);
  const std::uint64_t bytes = width * sizeof(std::uint32_t) * (copies + 1);
  if (bytes > opt.memory_budget) {
    throw CapacityError("histogram window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        ") needs " + std::to_string(bytes) + " bytes, over the budget of " +
                        std::to_string(opt.memory_budget) + "; split it into smaller chunks");
  }
  HistogramVisitor proto;
  proto.hist.root = packing.root;
  proto.hist.lo = static_cast<std::uint64_t>(lo);
  proto.hist.hi = static_cast<std::uint64_t>(hi);
  proto.hist.counts.assign(width, 0);
  // Pruning at hi is complete for the window: a circle of curvature n < hi
  // has only ancestors of curvature < n.
  auto result = traverse_parallel(packing, traversal_options(hi, opt), proto);
  CurvatureHistogram hist = std::move(result.acc.hist);
  for (int i = 1; i < 4; ++i) {
    const Curvature c = packing.root[i];
    if (c >= lo && c < hi) ++hist.counts[static_cast<std::uint64_t>(c - lo)];
  }
  return hist;
}

std::array<std::uint64_t, 4> per_coordinate_counts(const PackingDescriptor& packing, Curvature x,
                                                   const RunOptions& opt) {
  if (x < 1) throw UsageError("per_coordinate_counts needs x >= 1");
  auto result = traverse_parallel(packing, traversal_options(x, opt), CoordinateVisitor{});
  auto counts = result.acc.counts;
  for (int i = 1; i < 4; ++i) counts[i] += packing.root[i] < x ? 1 : 0;
  return counts;
}

std::uint64_t count_tangent_pairs(const PackingDescriptor& packing, Curvature x,
                                  const RunOptions& opt) {
  if (x <= packing.max_root_entry()) {
    throw UsageError("count_tangent_pairs needs x above the largest root curvature");
  }
  // Six pairs among the root circles; each later circle touches exactly
  // three older ones (its parents in the creating quadruple).
  const auto visits = traverse_parallel(packing, traversal_options(x, opt), CountVisitor{}).visits;
  return 6 + 3 * visits;
}

}  // namespace acp
