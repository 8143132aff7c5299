#include "barrett/verify.hpp"

#include <stdexcept>

#include "barrett/counter.hpp"
#include "barrett/number_theory.hpp"
#include "barrett/parallel.hpp"

namespace barrett {

namespace {

void require_range(const SieveOracle& s, u64 k_lo, u64 k_hi)
{
    if (k_lo < kFirstTerm || k_hi < k_lo || k_hi > s.limit()) {
        throw std::domain_error("verify_range: need 5 <= k_lo <= k_hi <= " +
                                std::to_string(s.limit()));
    }
}

// Appends the term-level violations for one k.
void check_term(const SieveOracle& s, u64 k, u64 m, std::vector<Mismatch>& out)
{
    if (s.is_prime(k)) {
        if (m != k - 1) {
            out.push_back({k, "prime but m = " + std::to_string(m) + " != k-1 (term is 0)"});
        }
    } else if (m == k - 1) {
        out.push_back({k, "composite but m = k-1 (term is 1)"});
    } else if (m != 0 && m != k) {
        out.push_back({k, "composite with m = " + std::to_string(m) + " not in {0, k}"});
    }
}

} // namespace

std::vector<Mismatch> verify_range(const SieveOracle& s, u64 k_lo, u64 k_hi, unsigned threads)
{
    require_range(s, k_lo, k_hi);
    std::vector<u64> m(k_hi - k_lo + 1);
    parallel_for(threads, k_lo, k_hi + 1, [&](u64 lo, u64 hi) {
        for (u64 k = lo; k < hi; ++k) {
            m[k - k_lo] = reduced_sine_argument(k);
        }
    });
    std::vector<Mismatch> out;
    for (u64 k = k_lo; k <= k_hi; ++k) {
        check_term(s, k, m[k - k_lo], out);
    }
    return out;
}

VerifyReport verify_all(const SieveOracle& s, u64 max, unsigned threads)
{
    require_range(s, kFirstTerm, max);

    // Per-k results, filled in parallel and merged in k order.
    std::vector<u64> m(max + 1, 0);
    std::vector<unsigned char> wilson_prime(max + 1, 0);
    std::vector<unsigned char> absorbed(max + 1, 0);
    std::vector<unsigned char> modular_zero(max + 1, 0);

    parallel_for(threads, 2, max + 1, [&](u64 lo, u64 hi) {
        for (u64 k = lo; k < hi; ++k) {
            wilson_prime[k] = is_prime_wilson(k);
            if (k >= kFirstTerm) {
                m[k] = reduced_sine_argument(k);
            }
            if (k >= 6 && !s.is_prime(k)) {
                const AbsorptionReport a = absorption_check(k);
                absorbed[k] = a.absorbed;
                modular_zero[k] = a.modular_zero;
            }
        }
    });

    VerifyReport r;
    r.max = max;
    for (u64 k = 2; k <= max; ++k) {
        const bool prime = s.is_prime(k);
        ++r.wilson_checked;
        if (static_cast<bool>(wilson_prime[k]) != prime) {
            r.mismatches.push_back({k, "Wilson certificate disagrees with sieve"});
        }
        if (k < kFirstTerm) {
            continue;
        }
        ++r.terms_checked;
        check_term(s, k, m[k], r.mismatches);
        if (prime) {
            ++r.primes;
            continue;
        }
        ++r.composites;
        if (m[k] == 0) {
            ++r.composite_m_zero;
        } else if (m[k] == k) {
            ++r.composite_m_k;
        }
        if (k >= 6) {
            ++r.absorption_checked;
            if (!absorbed[k]) {
                r.mismatches.push_back({k, "prime power of k not absorbed by (k-1)!"});
            }
            if (!modular_zero[k]) {
                r.mismatches.push_back({k, "(k-1)! mod k is nonzero"});
            }
        }
    }

    const AbsorptionReport four = absorption_check(4);
    r.k4_exception_holds = wilson_witness(4).residue == 2 && !four.absorbed &&
                           four.valuations.size() == 1 && four.valuations[0].nu == 1 &&
                           four.valuations[0].alpha == 2;
    return r;
}

} // namespace barrett
