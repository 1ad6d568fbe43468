#include "surfenum/tubing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "surfenum/errors.hpp"

namespace surfenum {

namespace {

void matchings_rec(std::vector<int>& free, std::vector<std::pair<int, int>>& cur,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (free.empty()) {
    auto m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  // Pair the first free point with a partner leaving an even block inside.
  const int first = free.front();
  for (std::size_t j = 1; j < free.size(); j += 2) {
    const int partner = free[j];
    std::vector<int> inside(free.begin() + 1, free.begin() + j);
    std::vector<int> outside(free.begin() + j + 1, free.end());
    std::vector<std::vector<std::pair<int, int>>> inner;
    std::vector<std::pair<int, int>> none;
    matchings_rec(inside, none, inner);
    for (const auto& in : inner) {
      cur.push_back({first, partner});
      cur.insert(cur.end(), in.begin(), in.end());
      matchings_rec(outside, cur, out);
      cur.resize(cur.size() - 1 - in.size());
    }
  }
}

// Side bits of every region of the disk cut by the chords of m.
std::vector<std::vector<int>> region_sides(const std::vector<std::pair<int, int>>& m, int points) {
  std::set<std::vector<int>> regions;
  if (points == 0) return {{}};
  // Every region touches the circle; gap g sits between points g and g+1.
  for (int gap = 0; gap < points; ++gap) {
    std::vector<int> bits;
    for (const auto& [a, b] : m) bits.push_back(a <= gap && gap < b ? 1 : 0);
    regions.insert(std::move(bits));
  }
  return {regions.begin(), regions.end()};
}

std::vector<ComponentTubing> circle_plans(const PunctureCircle& circle) {
  const int points = static_cast<int>(circle.punctures.size());
  std::vector<ComponentTubing> out;
  for (const auto& m : noncrossing_matchings(points / 2)) {
    for (const auto& sides : region_sides(m, points)) {
      ComponentTubing t{circle.component, {}};
      for (std::size_t i = 0; i < m.size(); ++i)
        t.tubes.push_back({circle.punctures[m[i].first], circle.punctures[m[i].second], sides[i]});
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

BigInt count_tubings(int k) {
  if (k < 0) throw PreconditionError("tube count must be non-negative");
  return binomial(2 * k, k);
}

std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int pairs) {
  std::vector<int> free(2 * pairs);
  for (int i = 0; i < 2 * pairs; ++i) free[i] = i;
  std::vector<std::pair<int, int>> cur;
  std::vector<std::vector<std::pair<int, int>>> out;
  matchings_rec(free, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TubingPlan> enumerate_tubings(const std::vector<PunctureCircle>& circles) {
  for (const auto& c : circles)
    if (c.punctures.size() % 2 != 0)
      throw PreconditionError("component " + std::to_string(c.component + 1) + " meets an odd number of punctures");
  std::vector<TubingPlan> plans{TubingPlan{}};
  for (const auto& circle : circles) {
    const auto options = circle_plans(circle);
    std::vector<TubingPlan> next;
    next.reserve(plans.size() * options.size());
    for (const auto& p : plans)
      for (const auto& o : options) {
        TubingPlan q = p;
        q.components.push_back(o);
        next.push_back(std::move(q));
      }
    plans = std::move(next);
  }
  return plans;
}

BigInt closed_surface_upper_bound(const BigInt& config_count, int genus) {
  if (genus < 2) throw PreconditionError("genus must be at least 2");
  return config_count * binomial(4 * genus - 4, 2 * genus - 2);
}

std::vector<PunctureCircle> puncture_circles(const Diagram& d, const Configuration& cfg) {
  std::vector<int> position(d.arc_count(), 0);
  for (const auto& comp : d.components())
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) position[comp[i]] = i;

  std::map<int, std::vector<std::pair<int, int>>> by_component;  // component -> (position, puncture)
  int puncture = 0;
  for (const auto& w : cfg.words_plus)
    for (const auto& l : w.letters) {
      if (!l.is_p()) continue;
      by_component[d.arcs()[l.arc()].component].push_back({position[l.arc()], puncture++});
    }
  std::vector<PunctureCircle> out;
  for (auto& [comp, list] : by_component) {
    std::sort(list.begin(), list.end());
    PunctureCircle c{comp, {}};
    for (const auto& [pos, id] : list) c.punctures.push_back(id);
    out.push_back(std::move(c));
  }
  return out;
}

BigInt tubing_count(const Diagram& d, const Configuration& cfg) {
  BigInt total = 1;
  for (const auto& c : puncture_circles(d, cfg)) {
    if (c.punctures.size() % 2 != 0) return 0;
    total *= count_tubings(static_cast<int>(c.punctures.size() / 2));
  }
  return total;
}

std::string tubing_plan_json(const TubingPlan& plan) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& comp : plan.components) {
    nlohmann::ordered_json c;
    c["component"] = comp.component + 1;
    auto& tubes = c["tubes"] = nlohmann::ordered_json::array();
    for (const auto& t : comp.tubes) tubes.push_back({t.first, t.second, t.side});
    out.push_back(std::move(c));
  }
  return out.dump();
}

}  // namespace surfenum
