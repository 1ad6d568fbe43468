#include "surfenum/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace surfenum {

std::string render_svg(const AugmentedDualGraph& g, const std::vector<Configuration>& configs,
                       std::size_t max_configs) {
  constexpr double kSize = 480.0;
  constexpr double kRadius = 180.0;
  static const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

  const int faces = g.node_count();
  std::vector<std::pair<double, double>> at(faces);
  for (int f = 0; f < faces; ++f) {
    const double t = 2.0 * std::numbers::pi * f / faces;
    at[f] = {kSize / 2 + kRadius * std::cos(t), kSize / 2 + kRadius * std::sin(t)};
  }

  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(1);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n";
  for (const auto& e : g.edges()) {
    const auto& [x0, y0] = at[e.faces[0]];
    const auto& [x1, y1] = at[e.faces[1]];
    svg << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
        << "\" stroke=\"#bbbbbb\"" << (e.kind == LetterKind::S ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }

  std::size_t drawn = 0;
  for (const auto& cfg : configs) {
    if (drawn == max_configs) break;
    const char* colour = kPalette[drawn % std::size(kPalette)];
    const double shift = 3.0 * static_cast<double>(drawn);
    for (const auto& w : cfg.words_plus) {
      svg << "  <polygon fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
      for (int f : w.faces) svg << at[f].first + shift << "," << at[f].second + shift << " ";
      svg << "\"><title>" << serialize_word(w) << "</title></polygon>\n";
    }
    ++drawn;
  }

  for (int f = 0; f < faces; ++f)
    svg << "  <circle cx=\"" << at[f].first << "\" cy=\"" << at[f].second << "\" r=\"12\" fill=\"white\" stroke=\"black\"/>\n"
        << "  <text x=\"" << at[f].first << "\" y=\"" << at[f].second + 4
        << "\" text-anchor=\"middle\" font-size=\"11\">" << f << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace surfenum
