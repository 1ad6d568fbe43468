#include <doctest.h>

#include <set>

#include <json.hpp>

#include "support.hpp"
#include "surfenum/dualgraph.hpp"
#include "surfenum/errors.hpp"

using namespace surfenum;

TEST_CASE("dual graph sizes") {
  const auto t = testing::dual("knot_3_1.pd");
  CHECK(t.node_count() == 5);
  CHECK(t.p_edge_count() == 6);
  CHECK(t.s_edge_count() == 6);
  const auto h = testing::dual("link_hopf.json");
  CHECK(h.node_count() == 4);
  CHECK(h.p_edge_count() == 4);
  CHECK(h.s_edge_count() == 4);
  const auto f = testing::dual("knot_4_1.pd");
  CHECK(f.node_count() == 6);
  CHECK(f.p_edge_count() == 8);
  CHECK(f.s_edge_count() == 8);
}

TEST_CASE("edge ids and endpoints") {
  for (const auto& file : testing::valid_fixtures()) {
    CAPTURE(file);
    const auto g = testing::dual(file);
    const auto& d = g.diagram();
    REQUIRE(static_cast<int>(g.edges().size()) == g.p_edge_count() + g.s_edge_count());
    for (int a = 0; a < g.p_edge_count(); ++a) {
      CHECK(g.p_edge(a).kind == LetterKind::P);
      CHECK(g.p_edge(a).ref == a);
      CHECK(g.p_edge(a).faces == d.arcs()[a].faces);
    }
    for (int c = 0; c < d.crossing_count(); ++c) {
      const auto a = g.s_edge({c, Channel::A});
      const auto b = g.s_edge({c, Channel::B});
      CHECK(a.kind == LetterKind::S);
      CHECK(a.faces == std::array<int, 2>{d.corner_face(c, 0), d.corner_face(c, 2)});
      CHECK(b.faces == std::array<int, 2>{d.corner_face(c, 1), d.corner_face(c, 3)});
      // reduced: the four corner faces are distinct
      std::set<int> four{a.faces[0], a.faces[1], b.faces[0], b.faces[1]};
      CHECK(four.size() == 4);
    }
  }
}

TEST_CASE("steps from a bigon") {
  for (const char* file : {"knot_3_1.pd", "link_hopf.json"}) {
    CAPTURE(file);
    const auto g = testing::dual(file);
    const auto& d = g.diagram();
    int bigons = 0;
    for (int f = 0; f < g.node_count(); ++f) {
      if (d.faces()[f].degree() != 2) continue;
      ++bigons;
      int p = 0, s = 0;
      for (const auto& step : g.steps_from(f)) (step.kind == LetterKind::P ? p : s)++;
      CHECK(p == 2);
      CHECK(s == 2);
    }
    CHECK(bigons > 0);
  }
}

TEST_CASE("steps are ordered P then S and lead to the far side") {
  const auto g = testing::dual("knot_6_2.pd");
  for (int f = 0; f < g.node_count(); ++f) {
    const auto& steps = g.steps_from(f);
    CHECK(static_cast<int>(steps.size()) == 2 * g.diagram().faces()[f].degree());
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
      const auto key = [](const Step& s) { return std::pair{static_cast<int>(s.kind), s.ref}; };
      CHECK(key(steps[i]) < key(steps[i + 1]));
    }
    for (const auto& step : steps) {
      const auto& e = g.edges()[step.edge];
      CHECK((e.faces[0] == f ? e.faces[1] : e.faces[0]) == step.dest);
    }
  }
}

TEST_CASE("steps_from range check") {
  const auto g = testing::dual("knot_3_1.pd");
  CHECK_THROWS_AS(g.steps_from(5), std::out_of_range);
  CHECK_THROWS_AS(g.steps_from(-1), std::out_of_range);
}

TEST_CASE("invalid diagrams are refused") {
  for (const char* file : {"invalid/granny.pd", "invalid/kinked_trefoil.pd", "invalid/split_trefoils.pd"}) {
    CAPTURE(file);
    const auto d = build_diagram(parse_pd(testing::slurp(testing::kFixtures / file)));
    CHECK_THROWS_AS(build_dual(d), PreconditionError);
  }
}

TEST_CASE("json form") {
  const auto g = testing::dual("knot_3_1.pd");
  const auto j = nlohmann::json::parse(dual_to_json(g));
  CHECK(j["nodes"] == 5);
  CHECK(j["edges"].size() == 12);
}

TEST_CASE("channel index helpers") {
  const SaddleChannel ch{3, Channel::B};
  CHECK(ch.index() == 7);
  CHECK(SaddleChannel::from_index(7) == ch);
  CHECK(ch.opposite() == SaddleChannel{3, Channel::A});
  CHECK(SaddleChannel{2, Channel::B} < SaddleChannel{3, Channel::A});
}
