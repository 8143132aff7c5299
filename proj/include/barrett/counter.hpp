// counter.hpp
// Barrett's prime counter
//
//     Barr(n) = 3 + sum_{k=5}^{n-1} sin[((k-1)!/k) pi] / sin(pi/k),   n > 4
//
// evaluated exactly. Since sin(m pi / k) has period 2k in m, the residue
// m = (k-1)! mod 2k fixes each summand: m == k-1 gives 1 (k prime), and
// m in {0, k} gives 0 (k composite). No sine is evaluated on this path.
//
// Barrett counts 1 as a prime and counts strictly below n, so
// Barr(n) == pi(n-1) + 1 in the modern convention.

#pragma once

#include <cstdint>
#include <vector>

#include "barrett/number_theory.hpp"
#include "barrett/sieve.hpp"

namespace barrett {

// Smallest k the summand is defined for, and smallest n Barr(n) accepts.
inline constexpr u64 kFirstTerm = 5;

// Barr(5): the empty sum plus the base 3, i.e. {1, 2, 3}.
inline constexpr u64 kBarrettBase = 3;

enum class TermClass { Prime, Composite };

struct BarrettTerm {
    u64 k = 0;
    u64 m = 0;          // (k-1)! mod 2k
    unsigned value = 0; // exact summand, 0 or 1
    TermClass classification = TermClass::Composite;
};

struct CountRow {
    u64 n = 0;
    u64 barr = 0;
    u64 pi_oracle = 0; // modern pi(n-1)
    double pnt = 0.0;   // n / ln n
    double ratio = 0.0; // barr * ln n / n
};

struct SeriesEntry {
    u64 n = 0;
    u64 barr = 0;

    friend bool operator==(const SeriesEntry&, const SeriesEntry&) = default;
};

// (k-1)! mod 2k. Requires k >= 5.
u64 reduced_sine_argument(u64 k);

BarrettTerm barrett_term(u64 k);

// Exact summands for k in [k_lo, k_hi], indexed from k_lo. Identical for
// every thread count.
std::vector<unsigned char> barrett_terms(u64 k_lo, u64 k_hi, unsigned threads = 1);

// Barr(n) for n >= 5.
u64 barrett_count(u64 n, unsigned threads = 1);

// (n, Barr(n)) for n in [5, n_max], each summand computed once.
std::vector<SeriesEntry> barrett_series(u64 n_max, unsigned threads = 1);

// Modern pi(n) = Barr(n + 1) - 1, for n >= 4.
u64 pi_modern(u64 n);

// n / ln n, for n >= 2.
double pnt_estimate(u64 n);

// One comparison row for n >= 5; oracle must cover n - 1.
CountRow asymptotic_ratio(u64 n, const SieveOracle& oracle);
CountRow asymptotic_ratio(u64 n);

// Rows for n = from, from + step, ... <= to. Terms are evaluated once over
// [5, to - 1] and prefix-summed.
std::vector<CountRow> count_table(u64 from, u64 to, u64 step, const SieveOracle& oracle,
                                  unsigned threads = 1);

} // namespace barrett
