// verify.hpp
// Runtime sweeps that check the Barrett terms, the Wilson certificate and
// the absorption argument against the sieve, k by k.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "barrett/sieve.hpp"

namespace barrett {

struct Mismatch {
    std::uint64_t k = 0;
    std::string what;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

// For each k in [k_lo, k_hi]: the exact term agrees with the sieve, and
// m = (k-1)! mod 2k is k-1 for primes and 0 or k for composites.
// Requires 5 <= k_lo <= k_hi <= s.limit(). Mismatches come back sorted by k.
std::vector<Mismatch> verify_range(const SieveOracle& s, std::uint64_t k_lo, std::uint64_t k_hi,
                                   unsigned threads = 1);

struct VerifyReport {
    std::uint64_t max = 0;
    std::uint64_t terms_checked = 0;      // k in [5, max]
    std::uint64_t primes = 0;             // primes among those terms
    std::uint64_t composites = 0;
    std::uint64_t composite_m_zero = 0;   // composite k with m == 0
    std::uint64_t composite_m_k = 0;      // composite k with m == k
    std::uint64_t wilson_checked = 0;     // k in [2, max]
    std::uint64_t absorption_checked = 0; // composite k in [6, max]
    bool k4_exception_holds = false;      // (3! mod 4 == 2, nu_2(3!) = 1 < 2)
    std::vector<Mismatch> mismatches;

    [[nodiscard]] bool ok() const noexcept { return mismatches.empty() && k4_exception_holds; }
};

// Everything verify_range does over [5, max], plus Wilson vs sieve over
// [2, max] and the absorption check on every composite in [6, max].
VerifyReport verify_all(const SieveOracle& s, std::uint64_t max, unsigned threads = 1);

} // namespace barrett
