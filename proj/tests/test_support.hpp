#pragma once

#include "aktangent/bigint.hpp"
#include "aktangent/unipoly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace aktangent::testing {

/// Small deterministic generator for property tests.
class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }

  BigRational rational(long long height = 20) {
    return BigRational(integer(-height, height), integer(1, height));
  }

  BigRational nonzero_rational(long long height = 20) {
    for (;;) {
      BigRational r = rational(height);
      if (r != 0) return r;
    }
  }

  QPoly poly(int degree, long long height = 20) {
    std::vector<BigRational> cs;
    for (int i = 0; i < degree; ++i) cs.push_back(rational(height));
    cs.push_back(nonzero_rational(height));
    return QPoly(cs);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// c * prod (x - r_i).
inline QPoly from_roots(const BigRational& c, const std::vector<BigRational>& roots) {
  QPoly p(c);
  for (const auto& r : roots) p = p * QPoly{-r, BigRational(1)};
  return p;
}

}  // namespace aktangent::testing
