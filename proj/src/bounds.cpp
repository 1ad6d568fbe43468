#include "surfenum/bounds.hpp"

#include "surfenum/errors.hpp"
#include "surfenum/tubing.hpp"

namespace surfenum {

namespace {

void require(long long n, int genus) {
  if (n < 1) throw PreconditionError("crossing number must be at least 1");
  if (genus < 2) throw PreconditionError("genus must be at least 2, got " + std::to_string(genus));
}

}  // namespace

BigInt pppp_bound(long long n) {
  const BigInt m = n;
  return (2 * m) * (2 * m - 1) * (2 * m - 2) / 4;
}

BigInt psps_bound(long long n) { return binomial(static_cast<unsigned>(2 * n), 2); }

BigInt genus2_config_bound(long long n) {
  const BigInt m = n;
  return 2 * m * m * m;
}

BigInt genus2_surface_bound(long long n) {
  const BigInt m = n;
  return 12 * m * m * m;
}

long long tight_exponent(int genus) { return (20LL * genus - 16) * (2LL * genus - 2); }

long long stated_exponent(int genus) { return 40LL * genus * genus; }

BigInt stated_constant(int genus) {
  if (genus < 2) throw PreconditionError("genus must be at least 2");
  return binomial(4 * genus - 4, 2 * genus - 2) * ipow(BigInt(4), static_cast<unsigned>(stated_exponent(genus)));
}

BigInt general_bound(long long n, int genus, BoundVariant variant) {
  require(n, genus);
  const BigInt tubings = binomial(4 * genus - 4, 2 * genus - 2);
  if (variant == BoundVariant::Tight)
    return tubings * ipow(BigInt(4 * n), static_cast<unsigned>(tight_exponent(genus)));
  return stated_constant(genus) * ipow(BigInt(n), static_cast<unsigned>(stated_exponent(genus)));
}

bool BoundReport::all_pass() const {
  for (const auto& flag : {pass_pppp, pass_psps, pass_genus2_config, pass_genus2_surface, pass_general})
    if (flag && !*flag) return false;
  return true;
}

BoundReport compare(long long n, int genus, const ObservedCounts& observed) {
  require(n, genus);
  BoundReport r;
  r.n = n;
  r.genus = genus;
  r.pppp_bound = pppp_bound(n);
  r.psps_bound = psps_bound(n);
  r.genus2_config_bound = genus2_config_bound(n);
  r.genus2_surface_bound = genus2_surface_bound(n);
  r.tight_exponent = tight_exponent(genus);
  r.stated_exponent = stated_exponent(genus);
  r.stated_constant = stated_constant(genus);
  r.tight_general_bound = general_bound(n, genus, BoundVariant::Tight);
  r.stated_general_bound = general_bound(n, genus, BoundVariant::Stated);
  r.observed = observed;

  // The summands are "at most" bounds; the totals are strict.
  if (observed.pppp) r.pass_pppp = *observed.pppp <= r.pppp_bound;
  if (observed.psps_pair) r.pass_psps = *observed.psps_pair <= r.psps_bound;
  if (observed.genus2_total) {
    r.pass_genus2_config = *observed.genus2_total < r.genus2_config_bound;
    r.closed_surface_upper_bound = closed_surface_upper_bound(*observed.genus2_total, 2);
    r.pass_genus2_surface = *r.closed_surface_upper_bound < r.genus2_surface_bound;
  }
  if (observed.general_total) {
    r.general_surface_upper_bound = closed_surface_upper_bound(*observed.general_total, genus);
    r.pass_general = *r.general_surface_upper_bound < r.tight_general_bound;
  }
  return r;
}

}  // namespace surfenum
