#pragma once

// Exact values of the closed-form surface-count bounds, and their comparison
// with observed enumeration counts.

#include <optional>

#include "surfenum/bigint.hpp"

namespace surfenum {

// (2n)(2n-1)(2n-2)/4 = 2n^3 - 3n^2 + n single PPPP curves.
BigInt pppp_bound(long long n);
// binom(2n, 2) = 2n^2 - n PSPS pairs.
BigInt psps_bound(long long n);
// 2n^3 genus-2 curve configurations.
BigInt genus2_config_bound(long long n);
// 12n^3 closed genus-2 surfaces.
BigInt genus2_surface_bound(long long n);

enum class BoundVariant { Tight, Stated };

// (20g - 16)(2g - 2): word length budget times curve budget.
long long tight_exponent(int genus);
// 40g^2, the rounded exponent.
long long stated_exponent(int genus);
// C_g = binom(4g-4, 2g-2) * 4^(40g^2).
BigInt stated_constant(int genus);

// Tight: binom(4g-4, 2g-2) * (4n)^((20g-16)(2g-2)).  Stated: C_g * n^(40g^2).
BigInt general_bound(long long n, int genus, BoundVariant variant = BoundVariant::Tight);

struct ObservedCounts {
  std::optional<BigInt> pppp;
  std::optional<BigInt> psps_pair;
  std::optional<BigInt> genus2_total;   // configurations from the genus-2 enumerator
  std::optional<BigInt> general_total;  // configurations from the general enumerator at this genus
};

struct BoundReport {
  long long n = 0;
  int genus = 2;
  BigInt pppp_bound;
  BigInt psps_bound;
  BigInt genus2_config_bound;
  BigInt genus2_surface_bound;
  BigInt tight_general_bound;
  BigInt stated_general_bound;
  BigInt stated_constant;
  long long tight_exponent = 0;
  long long stated_exponent = 0;
  ObservedCounts observed;
  std::optional<BigInt> closed_surface_upper_bound;  // genus2_total * binom(4, 2)
  std::optional<BigInt> general_surface_upper_bound; // general_total * binom(4g-4, 2g-2)

  // Absent when the corresponding observation is absent.
  std::optional<bool> pass_pppp;
  std::optional<bool> pass_psps;
  std::optional<bool> pass_genus2_config;
  std::optional<bool> pass_genus2_surface;
  std::optional<bool> pass_general;

  bool all_pass() const;
};

// Throws PreconditionError for n < 1 or g < 2.
BoundReport compare(long long n, int genus, const ObservedCounts& observed);

}  // namespace surfenum
