#include <doctest.h>

#include <set>

#include "support.hpp"
#include "surfenum/enumerate.hpp"
#include "surfenum/errors.hpp"
#include "surfenum/tubing.hpp"

using namespace surfenum;

namespace {

PunctureCircle circle(int component, int points) {
  PunctureCircle c{component, {}};
  for (int i = 0; i < points; ++i) c.punctures.push_back(100 * component + i);
  return c;
}

bool crossing(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

}  // namespace

TEST_CASE("tubing counts") {
  CHECK(count_tubings(0) == 1);
  CHECK(count_tubings(1) == 2);
  CHECK(count_tubings(2) == 6);
  CHECK(count_tubings(5) == 252);
  CHECK_THROWS_AS(count_tubings(-1), PreconditionError);
}

TEST_CASE("plans on small circles") {
  CHECK(enumerate_tubings({circle(0, 4)}).size() == 6);
  CHECK(enumerate_tubings({circle(0, 2), circle(1, 2)}).size() == 4);
  CHECK(enumerate_tubings({circle(0, 2)}).size() == 2);
  CHECK(enumerate_tubings({}).size() == 1);
  CHECK_THROWS_AS(enumerate_tubings({circle(0, 3)}), PreconditionError);
}

TEST_CASE("plan counts are central binomials and plans are distinct") {
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    const auto plans = enumerate_tubings({circle(0, 2 * k)});
    CHECK(BigInt(plans.size()) == binomial(2 * k, k));
    CHECK(std::set<TubingPlan>(plans.begin(), plans.end()).size() == plans.size());
  }
}

TEST_CASE("matchings are perfect and non-crossing") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int k = 0; k <= 6; ++k) {
    const auto ms = noncrossing_matchings(k);
    CHECK(ms.size() == catalan[k]);
    for (const auto& m : ms) {
      std::set<int> used;
      for (const auto& [a, b] : m) {
        CHECK(a < b);
        used.insert(a);
        used.insert(b);
      }
      CHECK(static_cast<int>(used.size()) == 2 * k);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) CHECK_FALSE(crossing(m[i], m[j]));
    }
  }
}

TEST_CASE("plan count is multiplicative over components") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const auto plans = enumerate_tubings({circle(0, 2 * a), circle(1, 2 * b)});
      CHECK(BigInt(plans.size()) == count_tubings(a) * count_tubings(b));
    }
}

TEST_CASE("closed surface bound") {
  CHECK(closed_surface_upper_bound(3, 2) == 18);
  CHECK(closed_surface_upper_bound(1, 3) == 70);
  CHECK(closed_surface_upper_bound(0, 2) == 0);
  CHECK_THROWS_AS(closed_surface_upper_bound(1, 1), PreconditionError);
}

TEST_CASE("trefoil genus-2 configurations close below 12n^3") {
  const auto g = testing::dual("knot_3_1.pd");
  const auto r = enumerate_genus2(g);
  const auto bound = closed_surface_upper_bound(r.total(), 2);
  CHECK(bound == 6 * BigInt(r.total()));
  CHECK(bound < 324);
}

TEST_CASE("puncture circles of enumerated configurations") {
  for (const char* file : {"knot_3_1.pd", "knot_8_16.pd", "link_hopf.json"}) {
    CAPTURE(file);
    const auto g = testing::dual(file);
    for (const auto& cfg : enumerate_genus2(g).configurations) {
      const auto circles = puncture_circles(g.diagram(), cfg);
      std::size_t total = 0;
      for (const auto& c : circles) total += c.punctures.size();
      CHECK(static_cast<int>(total) == cfg.puncture_count());
      BigInt expected = 1;
      bool odd = false;
      for (const auto& c : circles) {
        odd = odd || c.punctures.size() % 2 != 0;
        expected *= count_tubings(static_cast<int>(c.punctures.size() / 2));
      }
      CHECK(tubing_count(g.diagram(), cfg) == (odd ? BigInt(0) : expected));
      if (!odd) CHECK(BigInt(enumerate_tubings(circles).size()) == tubing_count(g.diagram(), cfg));
    }
  }
}

TEST_CASE("plan json") {
  const auto plans = enumerate_tubings({circle(0, 2)});
  CHECK(tubing_plan_json(plans.front()).front() == '[');
}
