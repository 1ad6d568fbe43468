#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "surfenum/diagram.hpp"
#include "surfenum/dualgraph.hpp"

namespace testing {

inline const std::filesystem::path kFixtures{SURFENUM_FIXTURE_DIR};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline surfenum::Diagram diagram(const std::string& file) {
  return surfenum::build_diagram(surfenum::parse_pd(slurp(kFixtures / file)));
}

inline surfenum::AugmentedDualGraph dual(const std::string& file) { return surfenum::build_dual(diagram(file)); }

// Valid fixtures in filename order.
inline std::vector<std::string> valid_fixtures() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(kFixtures))
    if (e.is_regular_file()) out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

inline int crossings_of(const std::string& file) { return diagram(file).crossing_count(); }

}  // namespace testing
