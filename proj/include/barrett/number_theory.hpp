// number_theory.hpp
// Exact integer primitives behind the Barrett counter: modular
// multiplication, modular factorials, Wilson certificates, trial
// factorization and Legendre valuations.
//
// All functions are pure and safe to call from any number of threads.
// Domain violations throw std::domain_error.

#pragma once

#include <cstdint>
#include <vector>

namespace barrett {

using u64 = std::uint64_t;

// Largest modulus accepted by mulmod and everything built on it.
inline constexpr u64 kMaxModulus = u64{1} << 62;

// (a * b) mod m for 1 <= m <= 2^62. Inputs are reduced mod m first.
u64 mulmod(u64 a, u64 b, u64 m);

// t! mod m, by t sequential multiplications. Stops as soon as the running
// residue reaches 0, and returns 0 outright when t >= m.
u64 factorial_mod(u64 t, u64 m);

// k together with (k-1)! mod k.
struct WilsonWitness {
    u64 k = 0;
    u64 residue = 0;

    [[nodiscard]] bool is_prime() const noexcept { return residue == k - 1; }
};

WilsonWitness wilson_witness(u64 k);

// true iff (k-1)! == -1 (mod k). Requires k >= 2.
bool is_prime_wilson(u64 k);

struct PrimePower {
    u64 p = 0;
    unsigned alpha = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    u64 k = 0;
    std::vector<PrimePower> factors; // ascending p

    [[nodiscard]] bool is_prime() const noexcept
    {
        return factors.size() == 1 && factors.front().alpha == 1;
    }
};

// Trial division up to sqrt(k).
Factorization trial_factorize(u64 k);

// Exponent of p in t!, i.e. sum over j >= 1 of floor(t / p^j).
//
// p is NOT checked for primality; callers pass primes obtained from
// trial_factorize or the sieve. Only p < 2 is rejected.
u64 legendre_valuation(u64 p, u64 t);

struct PrimeValuation {
    u64 p = 0;
    unsigned alpha = 0; // exponent of p in k
    u64 nu = 0;         // exponent of p in (k-1)!
};

struct AbsorptionReport {
    u64 k = 0;
    std::vector<PrimeValuation> valuations;
    bool absorbed = false;     // nu >= alpha for every prime factor
    bool modular_zero = false; // (k-1)! mod k == 0
};

// Legendre check that every prime power of composite k divides (k-1)!.
// k must be composite and >= 4; prime k throws.
AbsorptionReport absorption_check(u64 k);

} // namespace barrett
