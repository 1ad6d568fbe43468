#pragma once

// Link diagrams given by PD codes: parsing, face tracing and the
// alternating / reduced / prime / connected checks.
//
// PD convention: each crossing is "X a b c d" listing the four incident arc
// labels counterclockwise, starting from the incoming under-strand. Positions
// 0 and 2 are therefore the under-strand, 1 and 3 the over-strand.
//
// Corner i of a crossing is the wedge between positions i and i+1 (mod 4).
// Opposite corners are (0,2) and (1,3).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surfenum {

struct PdCode {
  // Labels normalized to 1..2n, tuples in input order.
  std::vector<std::array<int, 4>> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

// Accepts either the line/slash text grammar or the JSON form
// {"crossings": [[a,b,c,d], ...]}; the first non-blank character decides.
PdCode parse_pd(std::string_view text);
PdCode parse_pd_text(std::string_view text);
PdCode parse_pd_json(std::string_view text);

std::string to_pd_text(const PdCode& pd);

struct ArcEnd {
  int crossing = 0;
  int position = 0;
  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

struct Arc {
  std::array<ArcEnd, 2> ends;
  // faces[k] is the face counterclockwise of the arc as seen from ends[k].
  std::array<int, 2> faces{-1, -1};
  int component = -1;
};

struct Corner {
  int crossing = 0;
  int index = 0;
};

struct Face {
  std::vector<Corner> corners;  // in boundary-trace order
  std::vector<int> arcs;        // arcs[k] leaves corners[k]
  int degree() const { return static_cast<int>(corners.size()); }
};

class Diagram {
 public:
  // Traces faces from the rotation system and checks v - e + f = 2 on every
  // connected piece. Throws StructureError otherwise.
  static Diagram build(const PdCode& pd);

  int crossing_count() const { return static_cast<int>(pd_.crossings.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const PdCode& pd() const { return pd_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Face>& faces() const { return faces_; }
  // Arc ids of each link component in traversal order.
  const std::vector<std::vector<int>>& components() const { return components_; }

  int arc_at(int crossing, int position) const { return pd_.crossings[crossing][position] - 1; }
  int corner_face(int crossing, int corner) const { return corner_face_[crossing][corner]; }
  bool arc_touches_crossing(int arc, int crossing) const;

  // Number of connected pieces of the underlying 4-valent graph.
  int graph_components() const { return graph_components_; }

 private:
  PdCode pd_;
  std::vector<Arc> arcs_;
  std::vector<Face> faces_;
  std::vector<std::array<int, 4>> corner_face_;
  std::vector<std::vector<int>> components_;
  int graph_components_ = 0;
};

inline Diagram build_diagram(const PdCode& pd) { return Diagram::build(pd); }

struct ValidationReport {
  bool alternating = true;
  bool reduced = true;
  bool prime = true;
  bool connected = true;
  std::vector<std::string> failures;

  std::optional<int> non_alternating_arc;
  std::optional<int> nugatory_crossing;
  std::optional<std::pair<int, int>> cut_arcs;

  bool ok() const { return alternating && reduced && prime && connected; }
};

ValidationReport validate(const Diagram& d);

}  // namespace surfenum
