#pragma once

// The augmented dual graph: faces of the diagram are nodes, each arc is a
// P-edge joining the faces on its two sides, and each crossing carries two
// saddle channels (S-edges). Channel A joins the faces at corners 0 and 2,
// channel B the faces at corners 1 and 3.

#include <array>
#include <string>
#include <vector>

#include "surfenum/diagram.hpp"

namespace surfenum {

enum class Channel : unsigned char { A = 0, B = 1 };
enum class LetterKind : unsigned char { P = 0, S = 1 };

struct SaddleChannel {
  int crossing = 0;
  Channel side = Channel::A;

  // Dense index 2*crossing + side; orders channels by (crossing, side).
  int index() const { return 2 * crossing + static_cast<int>(side); }
  static SaddleChannel from_index(int idx) { return {idx / 2, static_cast<Channel>(idx % 2)}; }
  SaddleChannel opposite() const { return {crossing, side == Channel::A ? Channel::B : Channel::A}; }
  friend auto operator<=>(const SaddleChannel& a, const SaddleChannel& b) { return a.index() <=> b.index(); }
  friend bool operator==(const SaddleChannel& a, const SaddleChannel& b) { return a.index() == b.index(); }
};

struct DualEdge {
  LetterKind kind = LetterKind::P;
  int ref = 0;  // arc id for P, channel index for S
  std::array<int, 2> faces{};
};

struct Step {
  int edge = 0;
  LetterKind kind = LetterKind::P;
  int ref = 0;
  int dest = 0;
};

class AugmentedDualGraph {
 public:
  AugmentedDualGraph(Diagram diagram, std::vector<DualEdge> edges, std::vector<std::vector<Step>> adjacency)
      : diagram_(std::move(diagram)), edges_(std::move(edges)), adjacency_(std::move(adjacency)) {}

  const Diagram& diagram() const { return diagram_; }
  int node_count() const { return diagram_.face_count(); }
  int crossing_count() const { return diagram_.crossing_count(); }

  // Edge ids: P-edges are 0..2n-1 (= arc id), S-edges are 2n + channel index.
  const std::vector<DualEdge>& edges() const { return edges_; }
  int p_edge_count() const { return diagram_.arc_count(); }
  int s_edge_count() const { return 2 * diagram_.crossing_count(); }
  const DualEdge& p_edge(int arc) const { return edges_[arc]; }
  const DualEdge& s_edge(SaddleChannel ch) const { return edges_[p_edge_count() + ch.index()]; }

  // P-steps by arc id, then S-steps by channel. Throws std::out_of_range.
  const std::vector<Step>& steps_from(int face) const;

 private:
  Diagram diagram_;
  std::vector<DualEdge> edges_;
  std::vector<std::vector<Step>> adjacency_;
};

// Requires a diagram passing validate(); throws PreconditionError otherwise.
AugmentedDualGraph build_dual(const Diagram& d);

std::string dual_to_json(const AugmentedDualGraph& g);

}  // namespace surfenum
