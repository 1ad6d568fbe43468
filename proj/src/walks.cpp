#include "walks.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>

#include <omp.h>

namespace surfenum::detail {

namespace {

constexpr unsigned long long kFlushEvery = 1024;

class LocalTicker {
 public:
  explicit LocalTicker(NodeGuard& guard) : guard_(guard) {}
  ~LocalTicker() { flush(); }
  // False once the shared cap is exceeded.
  bool tick() {
    if (++pending_ >= kFlushEvery) return flush();
    return !stopped_;
  }
  bool flush() {
    if (pending_ > 0) {
      if (!guard_.add(pending_)) stopped_ = true;
      pending_ = 0;
    }
    stopped_ = stopped_ || guard_.tripped();
    return !stopped_;
  }
  bool stopped() const { return stopped_; }

 private:
  NodeGuard& guard_;
  unsigned long long pending_ = 0;
  bool stopped_ = false;
};

int resolve_jobs(int jobs) { return jobs <= 0 ? omp_get_max_threads() : jobs; }

struct WalkState {
  const AugmentedDualGraph& g;
  const WalkLimits& limits;
  const std::vector<int>& dist_to_start;
  int start;
  LocalTicker& ticker;
  WalkStats& stats;
  std::vector<CurveWord>& out;
  std::vector<Letter> letters;
  std::vector<int> faces;
  std::vector<char> crossing_used;
  int p_used = 0;
  std::array<unsigned long long, 10> pruned{};

  bool adjacent_ok(const Letter& prev, const Letter& next) {
    if (prev.is_p() && next.is_p() && prev.arc() == next.arc()) {
      ++pruned[5];
      return false;
    }
    if (prev.is_p() != next.is_p()) {
      const Letter& p = prev.is_p() ? prev : next;
      const Letter& s = prev.is_p() ? next : prev;
      if (g.diagram().arc_touches_crossing(p.arc(), s.channel().crossing)) {
        ++pruned[6];
        return false;
      }
    }
    return true;
  }

  void close() {
    if (p_used < 2) {
      ++pruned[8];
      return;
    }
    if (adjacent_ok(letters.back(), letters.front())) out.push_back(canonicalize(CurveWord{letters, faces}));
  }

  void run(int face) {
    if (!ticker.tick()) return;
    const int depth = static_cast<int>(letters.size());
    if (face == start && depth >= 4 && depth % 2 == 0) close();
    if (depth == limits.max_len) return;
    const int remaining = limits.max_len - depth - 1;
    for (const Step& step : g.steps_from(face)) {
      // each closed walk is found from its least face
      if (step.dest < start) continue;
      if (dist_to_start[step.dest] > remaining) continue;
      const Letter next{step.kind, step.ref};
      if (next.is_p() && p_used + 1 > limits.max_p) continue;
      if (next.is_s() && crossing_used[next.channel().crossing]) {
        ++pruned[2];
        continue;
      }
      if (depth > 0 && !adjacent_ok(letters.back(), next)) continue;
      letters.push_back(next);
      faces.push_back(face);
      if (next.is_p()) ++p_used;
      else crossing_used[next.channel().crossing] = 1;
      run(step.dest);
      if (next.is_p()) --p_used;
      else crossing_used[next.channel().crossing] = 0;
      letters.pop_back();
      faces.pop_back();
      if (ticker.stopped()) return;
    }
  }
};

std::vector<int> imbalance(const CurveWord& w, int crossing_count) {
  std::vector<int> v(crossing_count, 0);
  for (const auto& l : w.letters)
    if (l.is_s()) v[l.channel().crossing] += l.channel().side == Channel::A ? 1 : -1;
  return v;
}

struct MultisetSearch {
  const std::vector<CurveWord>& words;
  const ConfigSearch& search;
  const std::vector<std::vector<int>>& imb;
  const std::map<std::vector<int>, std::vector<int>>& by_imbalance;
  LocalTicker& ticker;
  std::vector<std::vector<int>>& out;
  std::vector<int> chosen;

  void complete(const std::vector<int>& net, int p, int last) {
    std::vector<int> need(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) need[i] = -net[i];
    auto it = by_imbalance.find(need);
    if (it == by_imbalance.end()) return;
    const auto& candidates = it->second;
    for (auto j = std::lower_bound(candidates.begin(), candidates.end(), last); j != candidates.end(); ++j) {
      if (p + words[*j].p_count() > search.max_p) continue;
      chosen.push_back(*j);
      out.push_back(chosen);
      chosen.pop_back();
    }
  }

  void extend(const std::vector<int>& net, int p, int last) {
    if (!ticker.tick()) return;
    complete(net, p, last);
    if (static_cast<int>(chosen.size()) + 2 > search.max_curves) return;
    for (int j = last; j < static_cast<int>(words.size()); ++j) {
      const int pj = p + words[j].p_count();
      if (pj + 2 > search.max_p) continue;  // the closing word needs two more punctures
      std::vector<int> next = net;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += imb[j][i];
      chosen.push_back(j);
      extend(next, pj, j);
      chosen.pop_back();
      if (ticker.stopped()) return;
    }
  }

  // Every multiset whose least index is first.
  void from_first(int first, int crossing_count) {
    if (!ticker.tick()) return;
    const int p = words[first].p_count();
    if (p > search.max_p) return;
    if (std::all_of(imb[first].begin(), imb[first].end(), [](int x) { return x == 0; })) out.push_back({first});
    if (search.max_curves < 2) return;
    chosen = {first};
    std::vector<int> net = imb[first];
    net.resize(crossing_count, 0);
    extend(net, p, first);
    chosen.clear();
  }
};

}  // namespace

std::vector<int> distances_above(const AugmentedDualGraph& g, int start) {
  std::vector<int> dist(g.node_count(), std::numeric_limits<int>::max() / 2);
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (const Step& step : g.steps_from(f))
      if (step.dest >= start && dist[step.dest] > dist[f] + 1) {
        dist[step.dest] = dist[f] + 1;
        queue.push_back(step.dest);
      }
  }
  return dist;
}

std::set<CurveWord> closed_words_from(const AugmentedDualGraph& g, int start_face, const WalkLimits& limits,
                                      NodeGuard& guard, WalkStats& stats) {
  std::vector<CurveWord> out;
  LocalTicker ticker(guard);
  // A word passes each crossing at most once.
  WalkLimits capped = limits;
  capped.max_len = std::min(limits.max_len, limits.max_p + g.crossing_count());
  // Undirected graph: distance to start equals distance from start.
  const auto dist = distances_above(g, start_face);
  WalkState state{g, capped, dist, start_face, ticker, stats, out, {}, {},
                  std::vector<char>(g.crossing_count(), 0)};
  state.run(start_face);
  for (int prop = 0; prop < static_cast<int>(state.pruned.size()); ++prop)
    if (state.pruned[prop]) stats.pruned[prop] += state.pruned[prop];
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return {out.begin(), out.end()};
}

std::set<CurveWord> closed_words_serial(const AugmentedDualGraph& g, const WalkLimits& limits, NodeGuard& guard,
                                        WalkStats& stats) {
  std::set<CurveWord> all;
  for (int f = 0; f < g.node_count() && !guard.tripped(); ++f) all.merge(closed_words_from(g, f, limits, guard, stats));
  return all;
}

std::set<CurveWord> closed_words_parallel(const AugmentedDualGraph& g, const WalkLimits& limits, int jobs,
                                          NodeGuard& guard, WalkStats& stats) {
  const int faces = g.node_count();
  std::vector<std::set<CurveWord>> per_face(faces);
  std::vector<WalkStats> per_stats(faces);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_jobs(jobs))
  for (int f = 0; f < faces; ++f) {
    if (guard.tripped()) continue;
    per_face[f] = closed_words_from(g, f, limits, guard, per_stats[f]);
  }
  std::set<CurveWord> all;
  for (int f = 0; f < faces; ++f) {
    all.merge(per_face[f]);
    stats.merge(per_stats[f]);
  }
  return all;
}

namespace {

struct MultisetIndex {
  std::vector<std::vector<int>> imb;
  std::map<std::vector<int>, std::vector<int>> by_imbalance;

  MultisetIndex(const std::vector<CurveWord>& words, int crossing_count) {
    imb.reserve(words.size());
    for (int j = 0; j < static_cast<int>(words.size()); ++j) {
      imb.push_back(imbalance(words[j], crossing_count));
      by_imbalance[imb.back()].push_back(j);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> balanced_multisets_serial(const std::vector<CurveWord>& words, int crossing_count,
                                                        const ConfigSearch& search, NodeGuard& guard) {
  const MultisetIndex index(words, crossing_count);
  std::vector<std::vector<int>> out;
  LocalTicker ticker(guard);
  MultisetSearch ms{words, search, index.imb, index.by_imbalance, ticker, out, {}};
  for (int first = 0; first < static_cast<int>(words.size()) && !ticker.stopped(); ++first)
    ms.from_first(first, crossing_count);
  return out;
}

std::vector<std::vector<int>> balanced_multisets_parallel(const std::vector<CurveWord>& words, int crossing_count,
                                                          const ConfigSearch& search, int jobs, NodeGuard& guard) {
  const MultisetIndex index(words, crossing_count);
  const int count = static_cast<int>(words.size());
  std::vector<std::vector<std::vector<int>>> per_first(count);
#pragma omp parallel for schedule(dynamic, 4) num_threads(resolve_jobs(jobs))
  for (int first = 0; first < count; ++first) {
    if (guard.tripped()) continue;
    LocalTicker ticker(guard);
    MultisetSearch ms{words, search, index.imb, index.by_imbalance, ticker, per_first[first], {}};
    ms.from_first(first, crossing_count);
  }
  std::vector<std::vector<int>> out;
  for (auto& chunk : per_first)
    for (auto& m : chunk) out.push_back(std::move(m));
  return out;
}

}  // namespace surfenum::detail
