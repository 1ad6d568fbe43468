#include "surfenum/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "surfenum/errors.hpp"
#include "walks.hpp"

namespace surfenum {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<int> sorted_arcs(const CurveWord& w) {
  std::vector<int> arcs;
  for (const auto& l : w.letters)
    if (l.is_p()) arcs.push_back(l.arc());
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<int> saddle_set(const CurveWord& w) {
  std::vector<int> channels;
  for (const auto& l : w.letters)
    if (l.is_s()) channels.push_back(l.channel().index());
  std::sort(channels.begin(), channels.end());
  return channels;
}

// Arcs joining each unordered pair of faces.
std::map<std::pair<int, int>, std::vector<int>> arcs_between(const AugmentedDualGraph& g) {
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (int a = 0; a < g.p_edge_count(); ++a) {
    const auto& f = g.p_edge(a).faces;
    out[{std::min(f[0], f[1]), std::max(f[0], f[1])}].push_back(a);
  }
  return out;
}

const std::vector<int>& lookup(const std::map<std::pair<int, int>, std::vector<int>>& m, int x, int y) {
  static const std::vector<int> none;
  auto it = m.find({std::min(x, y), std::max(x, y)});
  return it == m.end() ? none : it->second;
}

bool passes_genus2_word(const AugmentedDualGraph& g, const CurveWord& w) {
  return check_word(g, w).empty() && check_innermost(w).empty();
}

}  // namespace

unsigned long long guard_cap_from_env(unsigned long long fallback) {
  const char* raw = std::getenv(kGuardCapEnv);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return v;
}

EnumerationResult make_result(std::vector<Configuration> configs) {
  std::sort(configs.begin(), configs.end());
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
  EnumerationResult r;
  for (const auto& cfg : configs) {
    switch (classify(cfg)) {
      case Family::Pppp: ++r.pppp; break;
      case Family::PspsPair: ++r.psps_pair; break;
      case Family::Other: ++r.other; break;
    }
  }
  r.configurations = std::move(configs);
  return r;
}

std::vector<Configuration> apply_determination_rules(std::vector<Configuration> configs) {
  std::sort(configs.begin(), configs.end());
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
  UnionFind uf(configs.size());
  std::map<std::vector<int>, std::size_t> seen_triples;
  std::map<std::vector<int>, std::size_t> seen_saddles;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto family = classify(configs[i]);
    if (family == Family::Pppp) {
      const auto arcs = sorted_arcs(configs[i].words_plus[0]);
      for (std::size_t skip = 0; skip < arcs.size(); ++skip) {
        std::vector<int> triple;
        for (std::size_t k = 0; k < arcs.size(); ++k)
          if (k != skip) triple.push_back(arcs[k]);
        auto [it, fresh] = seen_triples.emplace(triple, i);
        if (!fresh) uf.unite(i, it->second);
      }
    } else if (family == Family::PspsPair) {
      for (const auto& w : configs[i].words_plus) {
        auto [it, fresh] = seen_saddles.emplace(saddle_set(w), i);
        if (!fresh) uf.unite(i, it->second);
      }
    }
  }
  // configs is sorted, so the first member reached in each class is its least.
  std::vector<Configuration> out;
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < configs.size(); ++i)
    if (roots.insert(uf.find(i)).second) out.push_back(configs[i]);
  return out;
}

EnumerationResult enumerate_pppp(const AugmentedDualGraph& g) {
  const Diagram& d = g.diagram();
  const auto between = arcs_between(g);
  std::set<CurveWord> words;
  unsigned long long visited = 0;
  // Three successive punctures fix faces f0..f3; the fourth puncture closes f3 -> f0.
  for (int a1 = 0; a1 < d.arc_count(); ++a1)
    for (int side = 0; side < 2; ++side) {
      const int f0 = g.p_edge(a1).faces[side];
      const int f1 = g.p_edge(a1).faces[1 - side];
      for (int a2 : d.faces()[f1].arcs) {
        if (a2 == a1) continue;
        const auto& e2 = g.p_edge(a2).faces;
        const int f2 = e2[0] == f1 ? e2[1] : e2[0];
        for (int a3 : d.faces()[f2].arcs) {
          if (a3 == a2) continue;
          const auto& e3 = g.p_edge(a3).faces;
          const int f3 = e3[0] == f2 ? e3[1] : e3[0];
          for (int a4 : lookup(between, f3, f0)) {
            ++visited;
            CurveWord w{{Letter::P(a1), Letter::P(a2), Letter::P(a3), Letter::P(a4)}, {f0, f1, f2, f3}};
            if (passes_genus2_word(g, w)) words.insert(canonicalize(w));
          }
        }
      }
    }
  std::vector<Configuration> configs;
  for (const auto& w : words) configs.push_back(make_mirrored({w}));
  auto r = make_result(apply_determination_rules(std::move(configs)));
  r.visited = visited;
  return r;
}

EnumerationResult enumerate_psps_pairs(const AugmentedDualGraph& g) {
  const int n = g.crossing_count();
  const auto between = arcs_between(g);
  std::set<CurveWord> words;
  unsigned long long visited = 0;
  // Choose the two saddles; the punctures are the arcs joining the landing faces.
  for (int i1 = 0; i1 < 2 * n; ++i1)
    for (int i2 = 0; i2 < 2 * n; ++i2) {
      const auto ch1 = SaddleChannel::from_index(i1);
      const auto ch2 = SaddleChannel::from_index(i2);
      if (ch1.crossing == ch2.crossing) continue;
      const auto& s1 = g.s_edge(ch1).faces;
      const auto& s2 = g.s_edge(ch2).faces;
      for (int o1 = 0; o1 < 2; ++o1)
        for (int o2 = 0; o2 < 2; ++o2) {
          const int x = s1[o1], y = s1[1 - o1], z = s2[o2], w = s2[1 - o2];
          for (int a : lookup(between, y, z))
            for (int b : lookup(between, w, x)) {
              ++visited;
              CurveWord word{{Letter::S(ch1), Letter::P(a), Letter::S(ch2), Letter::P(b)}, {x, y, z, w}};
              if (passes_genus2_word(g, word)) words.insert(canonicalize(word));
            }
        }
    }

  // One curve fixes its partner: the same crossings through the opposite sides.
  std::map<std::vector<int>, std::vector<const CurveWord*>> by_saddles;
  for (const auto& w : words) by_saddles[saddle_set(w)].push_back(&w);
  std::vector<Configuration> configs;
  for (const auto& w : words) {
    std::vector<int> partner;
    for (int idx : saddle_set(w)) partner.push_back(SaddleChannel::from_index(idx).opposite().index());
    std::sort(partner.begin(), partner.end());
    auto it = by_saddles.find(partner);
    if (it == by_saddles.end()) continue;
    for (const CurveWord* other : it->second) {
      if (!(w < *other)) continue;
      auto cfg = make_mirrored({w, *other});
      if (check_configuration(cfg, n, true).empty()) configs.push_back(std::move(cfg));
    }
  }
  auto r = make_result(apply_determination_rules(std::move(configs)));
  r.visited = visited;
  return r;
}

EnumerationResult enumerate_genus2(const AugmentedDualGraph& g) {
  auto pppp = enumerate_pppp(g);
  auto psps = enumerate_psps_pairs(g);
  std::vector<Configuration> all = std::move(pppp.configurations);
  all.insert(all.end(), psps.configurations.begin(), psps.configurations.end());
  auto r = make_result(std::move(all));
  r.visited = pppp.visited + psps.visited;

  const long long n = g.crossing_count();
  if (static_cast<long long>(r.total()) >= 2 * n * n * n)
    throw InternalError("genus-2 configuration count " + std::to_string(r.total()) + " reaches 2n^3 = " +
                        std::to_string(2 * n * n * n));
  return r;
}

EnumerationResult enumerate_general(const AugmentedDualGraph& g, const EnumerationBudget& b,
                                    const EnumerationOptions& opts) {
  if (b.genus < 2) throw PreconditionError("genus must be at least 2");
  detail::WalkLimits limits{b.max_word_length, b.max_punctures};
  std::set<std::string> patterns(opts.patterns.begin(), opts.patterns.end());
  if (!patterns.empty()) {
    std::size_t longest = 0;
    for (const auto& p : patterns) longest = std::max(longest, p.size());
    limits.max_len = std::min<int>(limits.max_len, static_cast<int>(longest));
  }

  detail::NodeGuard guard(opts.guard_cap);
  detail::WalkStats stats;
  auto candidates = opts.jobs == 1 ? detail::closed_words_serial(g, limits, guard, stats)
                                   : detail::closed_words_parallel(g, limits, opts.jobs, guard, stats);
  if (guard.tripped())
    throw GuardAbort("word search exceeded the node cap of " + std::to_string(guard.cap()), guard.visited());

  std::vector<CurveWord> words;
  for (const auto& w : candidates) {
    const auto v = check_word(g, w);
    if (!v.empty()) {
      ++stats.pruned[v.front().property];
      continue;
    }
    // an all-P word bounds a disk on both sides: at most 4g - 4 punctures
    if (w.s_count() == 0 && w.length() > b.max_punctures) continue;
    if (!patterns.empty() && !patterns.count(word_pattern(w))) continue;
    words.push_back(w);
  }

  detail::ConfigSearch search{b.max_curves, b.max_punctures};
  auto sets = opts.jobs == 1
                  ? detail::balanced_multisets_serial(words, g.crossing_count(), search, guard)
                  : detail::balanced_multisets_parallel(words, g.crossing_count(), search, opts.jobs, guard);
  if (guard.tripped())
    throw GuardAbort("configuration search exceeded the node cap of " + std::to_string(guard.cap()), guard.visited());

  std::vector<Configuration> configs;
  configs.reserve(sets.size());
  for (const auto& s : sets) {
    std::vector<CurveWord> chosen;
    for (int idx : s) chosen.push_back(words[idx]);
    configs.push_back(make_mirrored(std::move(chosen)));
  }
  auto r = make_result(std::move(configs));
  r.pruned = std::move(stats.pruned);
  r.visited = guard.visited();
  return r;
}

}  // namespace surfenum
