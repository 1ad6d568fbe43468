#pragma once

// Enumeration of candidate standard-position curve configurations on S+.
//
// Specialized genus-2 families are generated constructively (choose three
// punctures, or two saddles) and then quotiented by the determination rules.
// The general enumerator walks the dual graph under genus budgets. The oracle
// is a plain closed-walk search used only to cross-check the others.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "surfenum/dualgraph.hpp"
#include "surfenum/euler.hpp"
#include "surfenum/words.hpp"

namespace surfenum {

inline constexpr unsigned long long kDefaultGuardCap = 10'000'000ULL;
inline constexpr const char* kGuardCapEnv = "SURFENUM_GUARD_CAP";

// The value of SURFENUM_GUARD_CAP if set to a positive integer, else fallback.
unsigned long long guard_cap_from_env(unsigned long long fallback = kDefaultGuardCap);

struct EnumerationOptions {
  int jobs = 1;  // 1 runs the serial reference path; 0 uses every hardware thread
  unsigned long long guard_cap = kDefaultGuardCap;
  std::vector<std::string> patterns;  // restrict words to these P/S patterns; empty allows all
};

struct EnumerationResult {
  std::vector<Configuration> configurations;  // sorted, pairwise distinct
  std::size_t pppp = 0;
  std::size_t psps_pair = 0;
  std::size_t other = 0;
  std::map<int, unsigned long long> pruned;  // property number -> rejections
  unsigned long long visited = 0;            // search nodes expanded

  std::size_t total() const { return configurations.size(); }
};

// Sorts, removes duplicates and fills the family counts.
EnumerationResult make_result(std::vector<Configuration> configs);

// Quotient by the two determination relations: single PPPP curves sharing
// three punctures are identified; PSPS pairs are identified when a curve of
// one and a curve of the other pass the same two saddles. Each class is
// represented by its least member. Other configurations pass through.
std::vector<Configuration> apply_determination_rules(std::vector<Configuration> configs);

EnumerationResult enumerate_pppp(const AugmentedDualGraph& g);
EnumerationResult enumerate_psps_pairs(const AugmentedDualGraph& g);

// Union of the two families. Throws InternalError if the total reaches 2n^3.
EnumerationResult enumerate_genus2(const AugmentedDualGraph& g);

// Configurations of at most max_curves words, each of even length 4..max_word_length,
// at most max_punctures P letters in total, passing every word predicate and
// saddle balance. Canonical dedup only. Throws GuardAbort past the node cap.
EnumerationResult enumerate_general(const AugmentedDualGraph& g, const EnumerationBudget& b,
                                    const EnumerationOptions& opts = {});

inline constexpr int kOracleMaxLength = 8;

// Every closed walk of length <= max_len, filtered by check_word, then every
// multiset of at most max_curves such words passing check_configuration.
// No determination rules. Throws PreconditionError for max_len > 8.
EnumerationResult oracle_enumerate(const AugmentedDualGraph& g, int max_len, int max_curves = 2);

}  // namespace surfenum
