#pragma once

// Closed-walk search kernels for the general enumerator. The serial and the
// OpenMP drivers share the per-start-face kernel; results are merged and
// sorted so both produce identical output.

#include <atomic>
#include <map>
#include <set>
#include <vector>

#include "surfenum/dualgraph.hpp"
#include "surfenum/words.hpp"

namespace surfenum::detail {

class NodeGuard {
 public:
  explicit NodeGuard(unsigned long long cap) : cap_(cap) {}

  // Adds a batch of visited nodes; returns false once the cap is exceeded.
  bool add(unsigned long long n) {
    const auto total = visited_.fetch_add(n, std::memory_order_relaxed) + n;
    if (total > cap_) tripped_.store(true, std::memory_order_relaxed);
    return !tripped();
  }
  bool tripped() const { return tripped_.load(std::memory_order_relaxed); }
  unsigned long long visited() const { return visited_.load(std::memory_order_relaxed); }
  unsigned long long cap() const { return cap_; }

 private:
  unsigned long long cap_;
  std::atomic<unsigned long long> visited_{0};
  std::atomic<bool> tripped_{false};
};

struct WalkLimits {
  int max_len = 4;
  int max_p = 4;
};

struct WalkStats {
  std::map<int, unsigned long long> pruned;
  void merge(const WalkStats& o) {
    for (const auto& [k, v] : o.pruned) pruned[k] += v;
  }
};

// Hop distance from start through faces numbered start or above.
std::vector<int> distances_above(const AugmentedDualGraph& g, int start);

// Canonical closed words whose least face is start_face, pruned by properties
// (2), (5), (6) and (8). Not yet checked against the full predicate set.
std::set<CurveWord> closed_words_from(const AugmentedDualGraph& g, int start_face, const WalkLimits& limits,
                                      NodeGuard& guard, WalkStats& stats);

std::set<CurveWord> closed_words_serial(const AugmentedDualGraph& g, const WalkLimits& limits, NodeGuard& guard,
                                        WalkStats& stats);
std::set<CurveWord> closed_words_parallel(const AugmentedDualGraph& g, const WalkLimits& limits, int jobs,
                                          NodeGuard& guard, WalkStats& stats);

// Balanced multisets of words (indices into a sorted word list).
struct ConfigSearch {
  int max_curves = 2;
  int max_p = 4;
};

std::vector<std::vector<int>> balanced_multisets_serial(const std::vector<CurveWord>& words, int crossing_count,
                                                        const ConfigSearch& search, NodeGuard& guard);
std::vector<std::vector<int>> balanced_multisets_parallel(const std::vector<CurveWord>& words, int crossing_count,
                                                          const ConfigSearch& search, int jobs, NodeGuard& guard);

}  // namespace surfenum::detail
