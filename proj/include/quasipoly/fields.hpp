#pragma once

// Existence of U-polygons of class >= 4 in cyclotomic model sets with
// underlying module Z[zeta_n]: two independent deciders for an even edge
// number m >= 8, plus the finite admissible sets they induce.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quasipoly {

using Natural = std::uint64_t;

// n/2 for n = 2 mod 4, else n. Q(zeta_n) depends only on this value.
Natural canonicalize(Natural n);

// Q(zeta_a) is a subfield of Q(zeta_b).
bool cyclotomic_inclusion(Natural a, Natural b);

enum class Clause {
  None,                  // inadmissible
  EightOrTwelve,         // m in {8, 12}
  DividesTwiceN,         // m | 2n
  FourTimesOddDivisor,   // m = 4d, d an odd divisor of n
};

struct Verdict {
  bool admissible = false;
  Clause clause = Clause::None;
  std::string explanation;
};

// Divisibility form: m in {8,12}, or m | 2n, or m = 4d with d | n odd.
// Throws InvalidArgument for n < 3, odd m, or m < 8 (distinct messages).
Verdict decide_vii_verdict(Natural n, Natural m);
bool decide_vii(Natural n, Natural m);

// Field-inclusion form: m in {8,12}, or Q(zeta_{m/2}) inside Q(zeta_n).
bool decide_vi(Natural n, Natural m);

// All admissible even m >= 8, ascending. The search stops at max(4n, 12):
// m | 2n gives m <= 2n and m = 4d with d | n gives m <= 4n.
std::vector<Natural> admissible_edge_numbers(Natural n);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(Natural p);
bool is_sophie_germain(Natural p);

// Closed-form tables for n in {3,4}, {8,12}, and n = 9 or n = 2p+1 with p a
// Sophie Germain prime; nullopt elsewhere.
std::optional<std::vector<Natural>> corollary2_table(Natural n);

// Number of (n, m) pairs, n in [n_lo, n_hi] and even m in [m_lo, m_hi]
// (m_lo >= 8), where decide_vi and decide_vii disagree. OpenMP-parallel over n.
std::uint64_t count_decider_mismatches(Natural n_lo, Natural n_hi, Natural m_lo, Natural m_hi);
// Single-threaded reference of the same sweep.
std::uint64_t count_decider_mismatches_serial(Natural n_lo, Natural n_hi, Natural m_lo,
                                              Natural m_hi);

std::string to_string(Clause clause);

}  // namespace quasipoly
