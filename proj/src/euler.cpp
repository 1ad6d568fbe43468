#include "surfenum/euler.hpp"

#include <array>
#include <cstdlib>

#include "surfenum/errors.hpp"

namespace surfenum {

EnumerationBudget budgets(int genus) {
  if (genus < 2) throw PreconditionError("genus must be at least 2, got " + std::to_string(genus));
  return EnumerationBudget{genus, 20 * genus - 16, 2 * genus - 2, 4 * genus - 4, 2 * genus - 2};
}

Rational polygon_contribution(int s0) { return Rational(1) - Rational(s0, 4); }

Rational euler_characteristic(const Configuration& cfg, bool require_integral) {
  Rational chi(0);
  for (const auto* sphere : {&cfg.words_plus, &cfg.words_minus})
    for (const auto& w : *sphere) chi += polygon_contribution(w.s_count());
  if (require_integral && chi.denominator() != 1)
    throw StructureError("polygon contributions sum to a non-integer; S+ and S- data are inconsistent");
  return chi;
}

PolygonComplex polygon_complex(const Configuration& cfg) {
  PolygonComplex pc;
  // corners[crossing][sphere * 2 + side]
  std::vector<std::array<std::vector<PolygonCorner>, 4>> corners;
  auto add_sphere = [&](const std::vector<CurveWord>& words, int sphere) {
    for (const auto& w : words) {
      const int poly = static_cast<int>(pc.polygon_sides.size());
      int slot = 0;
      for (const auto& l : w.letters) {
        if (!l.is_s()) continue;
        const auto ch = l.channel();
        if (ch.crossing >= static_cast<int>(corners.size())) corners.resize(ch.crossing + 1);
        corners[ch.crossing][sphere * 2 + static_cast<int>(ch.side)].push_back({poly, slot++});
      }
      pc.polygon_sides.push_back(slot);
    }
  };
  add_sphere(cfg.words_plus, 0);
  add_sphere(cfg.words_minus, 1);

  for (std::size_t c = 0; c < corners.size(); ++c) {
    const auto& groups = corners[c];
    const std::size_t m = groups[0].size();
    for (const auto& g : groups)
      if (g.size() != m)
        throw StructureError("saddle passages at crossing " + std::to_string(c + 1) + " cannot be grouped into saddles");
    for (std::size_t j = 0; j < m; ++j)
      pc.saddle_vertices.push_back({groups[0][j], groups[1][j], groups[2][j], groups[3][j]});
  }
  return pc;
}

Rational euler_crosscheck(const PolygonComplex& pc) {
  long long total_sides = 0;
  std::vector<std::vector<int>> used(pc.polygon_sides.size());
  for (std::size_t p = 0; p < pc.polygon_sides.size(); ++p) {
    if (pc.polygon_sides[p] < 0) throw StructureError("negative side count");
    used[p].assign(pc.polygon_sides[p], 0);
    total_sides += pc.polygon_sides[p];
  }
  if (total_sides % 2 != 0) throw StructureError("odd number of polygon sides; edges cannot pair up");
  for (const auto& vertex : pc.saddle_vertices) {
    if (vertex.size() != 4) throw StructureError("saddle vertex without exactly four polygon corners");
    for (const auto& corner : vertex) {
      if (corner.polygon < 0 || corner.polygon >= static_cast<int>(used.size()) || corner.slot < 0 ||
          corner.slot >= static_cast<int>(used[corner.polygon].size()))
        throw StructureError("corner refers to a missing polygon slot");
      if (used[corner.polygon][corner.slot]++) throw StructureError("polygon corner shared by two saddle vertices");
    }
  }
  for (const auto& slots : used)
    for (int u : slots)
      if (!u) throw StructureError("polygon corner not attached to any saddle vertex");

  const long long v = static_cast<long long>(pc.saddle_vertices.size());
  const long long e = total_sides / 2;
  const long long f = static_cast<long long>(pc.polygon_sides.size());
  return Rational(v - e + f);
}

int genus_bound_from_chi(const Rational& chi, int punctures) {
  if (chi.denominator() != 1) throw PreconditionError("Euler characteristic must be integral");
  const long long filled = std::llabs(chi.numerator() + punctures);
  return static_cast<int>(std::max<long long>(2, (filled + 3) / 2));
}

}  // namespace surfenum
