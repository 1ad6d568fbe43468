#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace surfenum {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // exact at every step
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace surfenum
