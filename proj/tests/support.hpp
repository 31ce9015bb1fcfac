#pragma once

#include "quasipoly/cyclo.hpp"

#include <random>
#include <vector>

namespace quasipoly::testing {

inline CycInt random_cycint(std::mt19937_64& rng, int n, int bound = 10) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<BigInt> c(phi(static_cast<std::uint64_t>(n)));
  for (auto& v : c) v = coeff(rng);
  return CycInt(n, std::move(c));
}

inline CycInt nonzero_cycint(std::mt19937_64& rng, int n, int bound = 10) {
  for (;;) {
    auto z = random_cycint(rng, n, bound);
    if (!z.is_zero()) return z;
  }
}

inline CycInt ci(int n, long long v) { return CycInt::integer(n, v); }
inline CycInt zeta(int n, long long k = 1) { return CycInt::zeta(n, k); }

}  // namespace quasipoly::testing
