#pragma once

// Pruned depth-first walk of the Apollonian quadruple tree.
//
// Every circle of a bounded packing other than the four root circles is
// created exactly once by rewriting one coordinate of its parent quadruple.
// The root is expanded with all four generators; every other node only with
// the three generators that differ from the one that created it. A child is
// kept iff its new curvature is below the bound, which is safe because below
// the root each child's new entry exceeds every entry of its parent.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "acp/core.hpp"
#include "acp/error.hpp"

namespace acp {

// Curvatures strictly below this cap keep every intermediate value
// (at most 6x the bound) far from int64 overflow.
inline constexpr Curvature kMaxBound = Curvature{1} << 31;

struct NodeVisit {
  Quadruple quad;
  std::int8_t coord = 0;  // coordinate rewritten to create this circle
  bool root_child = false;

  Curvature curvature() const { return quad[coord]; }
};

struct TraversalOptions {
  Curvature bound = 0;  // visit circles with curvature < bound
  bool check_invariants = false;
  unsigned threads = 1;
};

namespace detail {

inline void check_traversal_input(const PackingDescriptor& packing, const TraversalOptions& opt) {
  if (opt.bound < 1) throw UsageError("traversal bound must be positive");
  if (opt.bound > kMaxBound) {
    throw ArithmeticOverflow("traversal bound " + std::to_string(opt.bound) +
                             " exceeds the 2^31 cap");
  }
  for (Curvature c : packing.root.v) {
    if (c >= kMaxBound || c <= -kMaxBound) {
      throw ArithmeticOverflow("root entry exceeds the 2^31 cap: " + to_string(packing.root));
    }
  }
}

inline void check_node(const NodeVisit& node) {
  if (descartes_form(node.quad) != 0 || !is_primitive(node.quad)) {
    throw InvariantViolation("traversal produced an invalid quadruple " + to_string(node.quad));
  }
}

template <class Push>
inline void expand_root(const Quadruple& root, Curvature bound, Push&& push) {
  const Curvature s = root.sum();
  for (int j = 0; j < 4; ++j) {
    const Curvature fresh = 2 * s - 3 * root[j];
    if (fresh < bound) {
      NodeVisit child{root, static_cast<std::int8_t>(j), true};
      child.quad[j] = fresh;
      push(child);
    }
  }
}

template <class Push>
inline void expand(const NodeVisit& node, Curvature bound, Push&& push) {
  const Curvature s = node.quad.sum();
  for (int j = 0; j < 4; ++j) {
    if (j == node.coord) continue;
    const Curvature fresh = 2 * s - 3 * node.quad[j];
    if (fresh < bound) {
      if (fresh <= node.quad[j]) {
        throw InvariantViolation("non-root child does not grow: " + to_string(node.quad));
      }
      NodeVisit child{node.quad, static_cast<std::int8_t>(j), false};
      child.quad[j] = fresh;
      push(child);
    }
  }
}

// Visits `start` and its whole pruned subtree, using `stack` as scratch.
template <class Visitor>
std::uint64_t run_subtree(const NodeVisit& start, const TraversalOptions& opt,
                          std::vector<NodeVisit>& stack, Visitor& visit) {
  std::uint64_t visits = 0;
  stack.clear();
  stack.push_back(start);
  auto push = [&stack](const NodeVisit& child) { stack.push_back(child); };
  while (!stack.empty()) {
    const NodeVisit node = stack.back();
    stack.pop_back();
    if (opt.check_invariants) check_node(node);
    visit(node);
    ++visits;
    expand(node, opt.bound, push);
  }
  return visits;
}

}  // namespace detail

// Calls visit(const NodeVisit&) once per non-root circle with curvature
// below opt.bound and returns the number of visits. Single-threaded.
template <class Visitor>
std::uint64_t traverse(const PackingDescriptor& packing, const TraversalOptions& opt,
                       Visitor&& visit) {
  detail::check_traversal_input(packing, opt);
  std::vector<NodeVisit> roots;
  detail::expand_root(packing.root, opt.bound, [&](const NodeVisit& c) { roots.push_back(c); });
  std::vector<NodeVisit> stack;
  stack.reserve(1024);
  std::uint64_t visits = 0;
  for (const NodeVisit& r : roots) visits += detail::run_subtree(r, opt, stack, visit);
  return visits;
}

template <class Acc>
struct TraversalResult {
  Acc acc;
  std::uint64_t visits = 0;
};

// Parallel traversal over opt.threads scoped workers. `Acc` is a copyable
// accumulator with operator()(const NodeVisit&) and merge(const Acc&); each
// worker owns a private copy of `proto` (so it must be empty: anything in it
// is counted once per worker) and the copies are merged in worker
// order once all subtrees are done. Merging must be associative and
// commutative for the result to be independent of the thread count.
template <class Acc>
TraversalResult<Acc> traverse_parallel(const PackingDescriptor& packing,
                                       const TraversalOptions& opt, const Acc& proto) {
  detail::check_traversal_input(packing, opt);
  TraversalResult<Acc> result{proto, 0};
  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1) {
    result.visits = traverse(packing, opt, result.acc);
    return result;
  }

  // Breadth-first split until there are enough independent subtrees. Nodes
  // expanded here are visited by the calling thread.
  std::deque<NodeVisit> frontier;
  detail::expand_root(packing.root, opt.bound,
                      [&](const NodeVisit& c) { frontier.push_back(c); });
  const std::size_t wanted = 64 * static_cast<std::size_t>(threads);
  while (!frontier.empty() && frontier.size() < wanted) {
    const NodeVisit node = frontier.front();
    frontier.pop_front();
    if (opt.check_invariants) detail::check_node(node);
    result.acc(node);
    ++result.visits;
    detail::expand(node, opt.bound, [&](const NodeVisit& c) { frontier.push_back(c); });
  }
  const std::vector<NodeVisit> tasks(frontier.begin(), frontier.end());

  std::vector<Acc> partial(threads, proto);
  std::vector<std::uint64_t> counts(threads, 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          std::vector<NodeVisit> stack;
          stack.reserve(1024);
          for (std::size_t t = next++; t < tasks.size(); t = next++) {
            counts[w] += detail::run_subtree(tasks[t], opt, stack, partial[w]);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = tasks.size();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (unsigned w = 0; w < threads; ++w) {
    result.acc.merge(partial[w]);
    result.visits += counts[w];
  }
  return result;
}

}  // namespace acp
