#pragma once

// Polygon-decomposition accounting of the Euler characteristic of the
// filled surface, and the genus-dependent enumeration budgets derived from it.
// Everything here is exact; denominators never exceed 4.

#include <vector>

#include <boost/rational.hpp>

#include "surfenum/words.hpp"

namespace surfenum {

using Rational = boost::rational<long long>;

struct EnumerationBudget {
  int genus = 2;
  int max_word_length = 24;  // 20g - 16
  int max_curves = 2;        // 2g - 2 curves on S+
  int max_punctures = 4;     // 4g - 4 meridian boundary curves
  int max_compressions = 2;  // 2g - 2
  friend bool operator==(const EnumerationBudget&, const EnumerationBudget&) = default;
};

// Throws PreconditionError for g < 2.
EnumerationBudget budgets(int genus);

// A disk whose boundary passes s0 saddles contributes 1 - s0/4.
Rational polygon_contribution(int s0);

// Sum of polygon contributions over both spheres. When require_integral is
// set a fractional total throws StructureError (inconsistent S+/S- data).
Rational euler_characteristic(const Configuration& cfg, bool require_integral = true);

struct PolygonCorner {
  int polygon = 0;
  int slot = 0;  // index among the polygon's saddle corners
  friend bool operator==(const PolygonCorner&, const PolygonCorner&) = default;
};

struct PolygonComplex {
  std::vector<int> polygon_sides;                            // s0 per polygon
  std::vector<std::vector<PolygonCorner>> saddle_vertices;   // four corners each
};

// One polygon per word (S+ words first), one vertex per saddle: at each
// crossing the k-th A and B passages on each sphere are grouped together.
PolygonComplex polygon_complex(const Configuration& cfg);

// v - e + f computed directly. Throws StructureError on malformed incidence.
Rational euler_crosscheck(const PolygonComplex& pc);

// Smallest g >= 2 with 2 - 2g <= chi + punctures <= 2g - 2.
int genus_bound_from_chi(const Rational& chi, int punctures);

}  // namespace surfenum
