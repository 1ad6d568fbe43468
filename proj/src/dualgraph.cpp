#include "surfenum/dualgraph.hpp"

#include <stdexcept>

#include <json.hpp>

#include "surfenum/errors.hpp"

namespace surfenum {

AugmentedDualGraph build_dual(const Diagram& d) {
  const auto report = validate(d);
  if (!report.ok())
    throw PreconditionError("dual graph requires a reduced prime alternating connected diagram: " +
                            (report.failures.empty() ? std::string("validation failed") : report.failures.front()));

  const int n = d.crossing_count();
  std::vector<DualEdge> edges;
  edges.reserve(4 * n);
  for (int a = 0; a < d.arc_count(); ++a) {
    const auto& arc = d.arcs()[a];
    if (arc.faces[0] == arc.faces[1]) throw PreconditionError("arc " + std::to_string(a + 1) + " has the same face on both sides");
    edges.push_back({LetterKind::P, a, arc.faces});
  }
  for (int c = 0; c < n; ++c)
    for (int side = 0; side < 2; ++side) {
      const SaddleChannel ch{c, static_cast<Channel>(side)};
      edges.push_back({LetterKind::S, ch.index(), {d.corner_face(c, side), d.corner_face(c, side + 2)}});
    }

  std::vector<std::vector<Step>> adjacency(d.face_count());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto& edge = edges[e];
    adjacency[edge.faces[0]].push_back({e, edge.kind, edge.ref, edge.faces[1]});
    adjacency[edge.faces[1]].push_back({e, edge.kind, edge.ref, edge.faces[0]});
  }
  return AugmentedDualGraph(d, std::move(edges), std::move(adjacency));
}

const std::vector<Step>& AugmentedDualGraph::steps_from(int face) const {
  if (face < 0 || face >= node_count())
    throw std::out_of_range("face id " + std::to_string(face) + " out of range 0.." + std::to_string(node_count() - 1));
  return adjacency_[face];
}

std::string dual_to_json(const AugmentedDualGraph& g) {
  nlohmann::ordered_json out;
  out["schema_version"] = 1;
  out["nodes"] = g.node_count();
  auto& edges = out["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    nlohmann::ordered_json j;
    if (e.kind == LetterKind::P) {
      j["kind"] = "P";
      j["arc"] = e.ref + 1;
    } else {
      const auto ch = SaddleChannel::from_index(e.ref);
      j["kind"] = "S";
      j["crossing"] = ch.crossing + 1;
      j["channel"] = ch.side == Channel::A ? "A" : "B";
    }
    j["faces"] = {e.faces[0], e.faces[1]};
    edges.push_back(std::move(j));
  }
  return out.dump();
}

}  // namespace surfenum
