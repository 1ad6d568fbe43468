#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "surfenum/dualgraph.hpp"
#include "surfenum/words.hpp"

namespace surfenum {

// Static SVG: faces on a circle, P-edges solid, S-edges dashed, and the S+
// curves of the first max_configs configurations as coloured closed paths.
std::string render_svg(const AugmentedDualGraph& g, const std::vector<Configuration>& configs,
                       std::size_t max_configs = 8);

}  // namespace surfenum
