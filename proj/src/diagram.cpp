#include "surfenum/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "surfenum/errors.hpp"

namespace surfenum {

namespace {

PdCode normalize(std::vector<std::array<long long, 4>> raw) {
  if (raw.empty()) throw ParseError("PD code has no crossings");
  std::map<long long, int> multiplicity;
  for (const auto& x : raw)
    for (long long label : x) {
      if (label <= 0) throw ParseError("arc labels must be positive integers, got " + std::to_string(label));
      ++multiplicity[label];
    }
  std::map<long long, int> rank;
  for (const auto& [label, count] : multiplicity) {
    if (count != 2)
      throw StructureError("arc label " + std::to_string(label) + " appears " + std::to_string(count) +
                           " time(s); every label must appear exactly twice");
    const int next = static_cast<int>(rank.size()) + 1;
    rank[label] = next;
  }
  PdCode pd;
  pd.crossings.reserve(raw.size());
  for (const auto& x : raw) pd.crossings.push_back({rank[x[0]], rank[x[1]], rank[x[2]], rank[x[3]]});
  return pd;
}

long long parse_label(std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer arc label, got '" + std::string(tok) + "'");
  return v;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Connected pieces of the crossing graph with some arcs deleted.
int count_pieces(const Diagram& d, int skip_a = -1, int skip_b = -1) {
  UnionFind uf(d.crossing_count());
  for (int a = 0; a < d.arc_count(); ++a) {
    if (a == skip_a || a == skip_b) continue;
    const auto& arc = d.arcs()[a];
    uf.unite(arc.ends[0].crossing, arc.ends[1].crossing);
  }
  int pieces = 0;
  for (int c = 0; c < d.crossing_count(); ++c) pieces += (uf.find(c) == c);
  return pieces;
}

}  // namespace

PdCode parse_pd_text(std::string_view text) {
  std::vector<std::array<long long, 4>> raw;
  std::string cleaned;
  cleaned.reserve(text.size());
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    if (in_comment) continue;
    cleaned.push_back(ch == '/' ? '\n' : ch);
  }
  std::istringstream lines(cleaned);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream toks(line);
    std::vector<std::string> words;
    for (std::string w; toks >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != 5 || (words[0] != "X" && words[0] != "x"))
      throw ParseError("expected 'X a b c d', got '" + line + "'");
    raw.push_back({parse_label(words[1]), parse_label(words[2]), parse_label(words[3]), parse_label(words[4])});
  }
  return normalize(std::move(raw));
}

PdCode parse_pd_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("crossings") || !doc["crossings"].is_array())
    throw ParseError("JSON PD code must be an object with a \"crossings\" array");
  std::vector<std::array<long long, 4>> raw;
  for (const auto& x : doc["crossings"]) {
    if (!x.is_array() || x.size() != 4) throw ParseError("each crossing must be an array of 4 labels");
    std::array<long long, 4> tuple{};
    for (int i = 0; i < 4; ++i) {
      if (!x[i].is_number_integer()) throw ParseError("arc labels must be integers");
      tuple[i] = x[i].get<long long>();
    }
    raw.push_back(tuple);
  }
  return normalize(std::move(raw));
}

PdCode parse_pd(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') return parse_pd_json(text);
  return parse_pd_text(text);
}

std::string to_pd_text(const PdCode& pd) {
  std::string out;
  for (const auto& x : pd.crossings) {
    out += "X";
    for (int label : x) out += " " + std::to_string(label);
    out += "\n";
  }
  return out;
}

bool Diagram::arc_touches_crossing(int arc, int crossing) const {
  const auto& a = arcs_[arc];
  return a.ends[0].crossing == crossing || a.ends[1].crossing == crossing;
}

Diagram Diagram::build(const PdCode& pd) {
  Diagram d;
  d.pd_ = pd;
  const int n = pd.crossing_count();
  if (n == 0) throw StructureError("diagram has no crossings");
  const int arc_count = 2 * n;

  d.arcs_.assign(arc_count, Arc{});
  std::vector<int> seen(arc_count, 0);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      const int label = pd.crossings[c][p];
      if (label < 1 || label > arc_count) throw StructureError("arc label out of range 1..2n");
      if (seen[label - 1] == 2) throw StructureError("arc label " + std::to_string(label) + " used more than twice");
      d.arcs_[label - 1].ends[seen[label - 1]++] = ArcEnd{c, p};
    }
  for (int a = 0; a < arc_count; ++a)
    if (seen[a] != 2) throw StructureError("arc label " + std::to_string(a + 1) + " does not appear exactly twice");

  auto other_end = [&](int crossing, int position) {
    const auto& arc = d.arcs_[d.arc_at(crossing, position)];
    return arc.ends[0] == ArcEnd{crossing, position} ? arc.ends[1] : arc.ends[0];
  };

  // Faces are orbits of corner (c,i) -> arc at i+1 -> far end (c',j) -> corner (c',j).
  d.corner_face_.assign(n, {-1, -1, -1, -1});
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < 4; ++i) {
      if (d.corner_face_[c][i] != -1) continue;
      const int id = static_cast<int>(d.faces_.size());
      Face face;
      Corner cur{c, i};
      while (d.corner_face_[cur.crossing][cur.index] == -1) {
        d.corner_face_[cur.crossing][cur.index] = id;
        const int pos = (cur.index + 1) % 4;
        face.corners.push_back(cur);
        face.arcs.push_back(d.arc_at(cur.crossing, pos));
        const ArcEnd far = other_end(cur.crossing, pos);
        cur = Corner{far.crossing, far.position};
      }
      if (cur.crossing != c || cur.index != i) throw StructureError("face trace did not close; rotation data inconsistent");
      d.faces_.push_back(std::move(face));
    }

  for (auto& arc : d.arcs_)
    for (int k = 0; k < 2; ++k) arc.faces[k] = d.corner_face_[arc.ends[k].crossing][arc.ends[k].position];

  // Link components by following strands straight through crossings.
  std::vector<char> visited(arc_count, 0);
  for (int start = 0; start < arc_count; ++start) {
    if (visited[start]) continue;
    const int comp = static_cast<int>(d.components_.size());
    std::vector<int> order;
    int arc = start;
    ArcEnd exit = d.arcs_[start].ends[1];
    while (!visited[arc]) {
      visited[arc] = 1;
      d.arcs_[arc].component = comp;
      order.push_back(arc);
      const ArcEnd through{exit.crossing, (exit.position + 2) % 4};
      arc = d.arc_at(through.crossing, through.position);
      const auto& next = d.arcs_[arc];
      exit = next.ends[0] == through ? next.ends[1] : next.ends[0];
    }
    d.components_.push_back(std::move(order));
  }

  // Every connected piece must trace out a sphere.
  UnionFind uf(n);
  for (const auto& arc : d.arcs_) uf.unite(arc.ends[0].crossing, arc.ends[1].crossing);
  std::map<int, std::array<int, 3>> vef;
  for (int c = 0; c < n; ++c) ++vef[uf.find(c)][0];
  for (const auto& arc : d.arcs_) ++vef[uf.find(arc.ends[0].crossing)][1];
  for (const auto& face : d.faces_) ++vef[uf.find(face.corners.front().crossing)][2];
  for (const auto& [root, counts] : vef) {
    const int chi = counts[0] - counts[1] + counts[2];
    if (chi != 2)
      throw StructureError("rotation data is not planar: v - e + f = " + std::to_string(chi) + " on a connected piece");
  }
  d.graph_components_ = static_cast<int>(vef.size());
  return d;
}

ValidationReport validate(const Diagram& d) {
  ValidationReport r;

  if (d.graph_components() != 1) {
    r.connected = false;
    r.failures.push_back("diagram splits into " + std::to_string(d.graph_components()) + " disjoint pieces");
  }

  for (int a = 0; a < d.arc_count(); ++a) {
    const auto& arc = d.arcs()[a];
    if (arc.ends[0].position % 2 == arc.ends[1].position % 2) {
      r.alternating = false;
      r.non_alternating_arc = a;
      r.failures.push_back("arc " + std::to_string(a + 1) + " runs " +
                           (arc.ends[0].position % 2 == 0 ? "under to under" : "over to over"));
      break;
    }
  }

  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int i = 0; i < 2; ++i) {
      if (d.corner_face(c, i) == d.corner_face(c, i + 2)) {
        r.reduced = false;
        r.nugatory_crossing = c;
        r.failures.push_back("crossing " + std::to_string(c + 1) + " is nugatory: corners " + std::to_string(i) + " and " +
                             std::to_string(i + 2) + " lie on face " + std::to_string(d.corner_face(c, i)));
        break;
      }
    }
    if (!r.reduced) break;
  }

  const int base = d.graph_components();
  for (int a = 0; a < d.arc_count() && r.prime; ++a)
    for (int b = a + 1; b < d.arc_count(); ++b) {
      if (count_pieces(d, a, b) > base) {
        r.prime = false;
        r.cut_arcs = std::make_pair(a, b);
        r.failures.push_back("arcs " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                             " form a 2-edge cut separating crossings");
        break;
      }
    }

  return r;
}

}  // namespace surfenum
