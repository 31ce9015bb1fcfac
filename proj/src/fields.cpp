#include "quasipoly/fields.hpp"

#include "quasipoly/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace quasipoly {

namespace {

void check_decision_args(Natural n, Natural m) {
  if (n < 3) throw InvalidArgument("n must be >= 3, got " + std::to_string(n));
  if (m % 2 != 0) throw InvalidArgument("m must be even, got " + std::to_string(m));
  if (m < 8) throw InvalidArgument("m must be >= 8, got " + std::to_string(m));
}

Natural mulmod(Natural a, Natural b, Natural mod) {
  return static_cast<Natural>(static_cast<unsigned __int128>(a) * b % mod);
}

Natural powmod(Natural base, Natural exp, Natural mod) {
  Natural result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

Natural canonicalize(Natural n) { return n % 4 == 2 ? n / 2 : n; }

bool cyclotomic_inclusion(Natural a, Natural b) {
  if (a == 0 || b == 0) throw InvalidArgument("cyclotomic_inclusion: arguments must be >= 1");
  return canonicalize(b) % canonicalize(a) == 0;
}

Verdict decide_vii_verdict(Natural n, Natural m) {
  check_decision_args(n, m);
  Verdict v;
  if (m == 8 || m == 12) {
    v = {true, Clause::EightOrTwelve, "m = " + std::to_string(m) + " in {8, 12}"};
  } else if ((2 * n) % m == 0) {
    v = {true, Clause::DividesTwiceN,
         "m | 2n (" + std::to_string(m) + " | " + std::to_string(2 * n) + ")"};
  } else if (m % 4 == 0 && (m / 4) % 2 == 1 && n % (m / 4) == 0) {
    v = {true, Clause::FourTimesOddDivisor,
         "m = 4d, d = " + std::to_string(m / 4) + " odd divisor of n = " + std::to_string(n)};
  } else {
    v = {false, Clause::None,
         "m = " + std::to_string(m) + " not in {8, 12}, does not divide 2n = " +
             std::to_string(2 * n) + ", and is not 4d with d an odd divisor of n = " +
             std::to_string(n)};
  }
  return v;
}

bool decide_vii(Natural n, Natural m) { return decide_vii_verdict(n, m).admissible; }

bool decide_vi(Natural n, Natural m) {
  check_decision_args(n, m);
  if (m == 8 || m == 12) return true;
  return cyclotomic_inclusion(m / 2, n);
}

std::vector<Natural> admissible_edge_numbers(Natural n) {
  if (n < 3) throw InvalidArgument("n must be >= 3, got " + std::to_string(n));
  const Natural bound = std::max<Natural>(4 * n, 12);
  std::vector<Natural> out;
  for (Natural m = 8; m <= bound; m += 2)
    if (decide_vii(n, m)) out.push_back(m);
  if (decide_vii(n, bound + 2))
    throw std::logic_error("admissible m found beyond the search bound for n = " +
                           std::to_string(n));
  return out;
}

bool is_prime(Natural p) {
  if (p < 2) return false;
  static constexpr std::array<Natural, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (p % q == 0) return p == q;
  }
  Natural d = p - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (auto a : small) {
    Natural x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_sophie_germain(Natural p) {
  if (p > (std::numeric_limits<Natural>::max() - 1) / 2)
    throw InvalidArgument("is_sophie_germain: 2p+1 exceeds 64 bits");
  return is_prime(p) && is_prime(2 * p + 1);
}

std::optional<std::vector<Natural>> corollary2_table(Natural n) {
  if (n < 3) throw InvalidArgument("n must be >= 3, got " + std::to_string(n));
  std::vector<Natural> out;
  if (n == 3 || n == 4) {
    out = {8, 12};
  } else if (n == 8 || n == 12) {
    out = {8, 12, 2 * n};
  } else if (n == 9 || (n % 2 == 1 && is_sophie_germain((n - 1) / 2))) {
    out = {8, 12, 2 * n, 4 * n};
  } else {
    return std::nullopt;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_decider_mismatches_serial(Natural n_lo, Natural n_hi, Natural m_lo,
                                              Natural m_hi) {
  std::uint64_t mismatches = 0;
  for (Natural n = n_lo; n <= n_hi; ++n)
    for (Natural m = m_lo + m_lo % 2; m <= m_hi; m += 2)
      if (decide_vi(n, m) != decide_vii(n, m)) ++mismatches;
  return mismatches;
}

std::uint64_t count_decider_mismatches(Natural n_lo, Natural n_hi, Natural m_lo,
                                       Natural m_hi) {
  if (n_hi < n_lo) return 0;
  const long long count = static_cast<long long>(n_hi - n_lo + 1);
  std::uint64_t mismatches = 0;
#pragma omp parallel for reduction(+ : mismatches) schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    const Natural n = n_lo + static_cast<Natural>(i);
    for (Natural m = m_lo + m_lo % 2; m <= m_hi; m += 2)
      if (decide_vi(n, m) != decide_vii(n, m)) ++mismatches;
  }
  return mismatches;
}

std::string to_string(Clause clause) {
  switch (clause) {
    case Clause::None: return "none";
    case Clause::EightOrTwelve: return "m in {8,12}";
    case Clause::DividesTwiceN: return "m | 2n";
    case Clause::FourTimesOddDivisor: return "m = 4d, d odd divisor of n";
  }
  return "none";
}

}  // namespace quasipoly
