#pragma once

// Closing a punctured surface by tubes along the link. Punctures on one link
// component are joined in non-interleaved pairs; each non-crossing matching
// of 2k points cuts the disk into k+1 regions, and a plan also fixes which
// region the surface lies in. That gives (k+1) * Catalan(k) = binom(2k, k)
// plans per component.

#include <string>
#include <vector>

#include "surfenum/bigint.hpp"
#include "surfenum/diagram.hpp"
#include "surfenum/words.hpp"

namespace surfenum {

struct PunctureCircle {
  int component = 0;
  std::vector<int> punctures;  // cyclic order along the component
};

struct Tube {
  int first = 0;
  int second = 0;
  int side = 0;  // 1 when the surface region lies on the first..second arc of the circle
  friend auto operator<=>(const Tube&, const Tube&) = default;
};

struct ComponentTubing {
  int component = 0;
  std::vector<Tube> tubes;
  friend auto operator<=>(const ComponentTubing&, const ComponentTubing&) = default;
};

struct TubingPlan {
  std::vector<ComponentTubing> components;
  friend auto operator<=>(const TubingPlan&, const TubingPlan&) = default;
};

// binom(2k, k).
BigInt count_tubings(int k);

// Product over circles. Throws PreconditionError on an odd circle.
std::vector<TubingPlan> enumerate_tubings(const std::vector<PunctureCircle>& circles);

// Non-crossing perfect matchings of points 0..2*pairs-1, as (i < j) index pairs.
std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(int pairs);

// config_count * binom(4g-4, 2g-2).
BigInt closed_surface_upper_bound(const BigInt& config_count, int genus);

// Punctures of the S+ words (numbered in reading order) grouped by the link
// component of their arc and ordered along it.
std::vector<PunctureCircle> puncture_circles(const Diagram& d, const Configuration& cfg);

// Number of tubing plans for a configuration: 0 if some component meets an odd
// number of punctures.
BigInt tubing_count(const Diagram& d, const Configuration& cfg);

std::string tubing_plan_json(const TubingPlan& plan);

}  // namespace surfenum
