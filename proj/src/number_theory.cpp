#include "barrett/number_theory.hpp"

#include <stdexcept>
#include <string>

namespace barrett {

namespace {

__extension__ using u128 = unsigned __int128;

void require_modulus(u64 m)
{
    if (m == 0) {
        throw std::domain_error("mulmod: modulus must be >= 1");
    }
    if (m > kMaxModulus) {
        throw std::domain_error("mulmod: modulus " + std::to_string(m) +
                                " exceeds the supported width 2^62");
    }
}

// a, b already reduced below m.
inline u64 mulmod_reduced(u64 a, u64 b, u64 m) noexcept
{
    if (m <= (u64{1} << 32)) {
        return (a * b) % m;
    }
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

} // namespace

u64 mulmod(u64 a, u64 b, u64 m)
{
    require_modulus(m);
    return mulmod_reduced(a % m, b % m, m);
}

u64 factorial_mod(u64 t, u64 m)
{
    require_modulus(m);
    if (m == 1 || t >= m) {
        return 0;
    }
    // From here every factor i <= t < m is already reduced.
    u64 r = 1;
    for (u64 i = 2; i <= t; ++i) {
        r = mulmod_reduced(r, i, m);
        if (r == 0) {
            break;
        }
    }
    return r;
}

WilsonWitness wilson_witness(u64 k)
{
    if (k < 2) {
        throw std::domain_error("wilson_witness: k must be >= 2");
    }
    return {k, factorial_mod(k - 1, k)};
}

bool is_prime_wilson(u64 k)
{
    return wilson_witness(k).is_prime();
}

Factorization trial_factorize(u64 k)
{
    if (k < 2) {
        throw std::domain_error("trial_factorize: k must be >= 2");
    }
    Factorization out{k, {}};
    u64 rest = k;
    auto strip = [&](u64 p) {
        unsigned alpha = 0;
        while (rest % p == 0) {
            rest /= p;
            ++alpha;
        }
        if (alpha != 0) {
            out.factors.push_back({p, alpha});
        }
    };
    strip(2);
    for (u64 p = 3; p <= rest / p; p += 2) {
        strip(p);
    }
    if (rest > 1) {
        out.factors.push_back({rest, 1});
    }
    return out;
}

u64 legendre_valuation(u64 p, u64 t)
{
    if (p < 2) {
        throw std::domain_error("legendre_valuation: p must be >= 2");
    }
    // floor(t / p^j) == floor(floor(t / p^(j-1)) / p), so no powers are formed.
    u64 nu = 0;
    while (t >= p) {
        t /= p;
        nu += t;
    }
    return nu;
}

AbsorptionReport absorption_check(u64 k)
{
    if (k < 4) {
        throw std::domain_error("absorption_check: k must be a composite >= 4");
    }
    const Factorization f = trial_factorize(k);
    if (f.is_prime()) {
        throw std::domain_error("absorption_check: " + std::to_string(k) + " is prime");
    }
    AbsorptionReport report{k, {}, true, false};
    report.valuations.reserve(f.factors.size());
    for (const auto& [p, alpha] : f.factors) {
        const u64 nu = legendre_valuation(p, k - 1);
        report.valuations.push_back({p, alpha, nu});
        if (nu < alpha) {
            report.absorbed = false;
        }
    }
    report.modular_zero = factorial_mod(k - 1, k) == 0;
    return report;
}

} // namespace barrett
