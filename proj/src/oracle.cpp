#include <set>

#include "surfenum/enumerate.hpp"
#include "surfenum/errors.hpp"

namespace surfenum {

namespace {

void all_closed_walks(const AugmentedDualGraph& g, int start, int face, int max_len, CurveWord& walk,
                      std::set<CurveWord>& out, unsigned long long& visited) {
  ++visited;
  if (walk.length() > 0 && face == start) out.insert(canonicalize(walk));
  if (walk.length() == max_len) return;
  for (const Step& step : g.steps_from(face)) {
    walk.letters.push_back({step.kind, step.ref});
    walk.faces.push_back(face);
    all_closed_walks(g, start, step.dest, max_len, walk, out, visited);
    walk.letters.pop_back();
    walk.faces.pop_back();
  }
}

}  // namespace

EnumerationResult oracle_enumerate(const AugmentedDualGraph& g, int max_len, int max_curves) {
  if (max_len > kOracleMaxLength)
    throw PreconditionError("oracle is limited to walks of length <= " + std::to_string(kOracleMaxLength));
  if (max_curves < 1 || max_curves > 2) throw PreconditionError("oracle builds configurations of one or two curves");

  std::set<CurveWord> walks;
  unsigned long long visited = 0;
  for (int f = 0; f < g.node_count(); ++f) {
    CurveWord walk;
    all_closed_walks(g, f, f, max_len, walk, walks, visited);
  }

  std::map<int, unsigned long long> pruned;
  std::vector<CurveWord> words;
  for (const auto& w : walks) {
    const auto v = check_word(g, w);
    if (v.empty()) words.push_back(w);
    else ++pruned[v.front().property];
  }

  const int n = g.crossing_count();
  std::vector<Configuration> configs;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto single = make_mirrored({words[i]});
    if (check_configuration(single, n).empty()) configs.push_back(std::move(single));
    if (max_curves < 2) continue;
    for (std::size_t j = i; j < words.size(); ++j) {
      auto pair = make_mirrored({words[i], words[j]});
      if (check_configuration(pair, n).empty()) configs.push_back(std::move(pair));
    }
  }
  auto r = make_result(std::move(configs));
  r.pruned = std::move(pruned);
  r.visited = visited;
  return r;
}

}  // namespace surfenum
