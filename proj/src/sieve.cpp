#include "barrett/sieve.hpp"

#include <bit>
#include <string>

namespace barrett {

SieveOracle::SieveOracle(std::uint64_t limit, std::uint64_t cap)
    : limit_(limit)
{
    if (limit < 2) {
        throw std::domain_error("build_sieve: limit must be >= 2");
    }
    if (limit > cap) {
        throw ResourceError("build_sieve: limit " + std::to_string(limit) +
                            " exceeds the sieve memory cap " + std::to_string(cap));
    }
    bits_.assign(limit / 64 + 1, 0);
    mark(0);
    mark(1);
    for (std::uint64_t p = 2; p <= limit / p; ++p) {
        if (not_prime(p)) {
            continue;
        }
        for (std::uint64_t q = p * p; q <= limit; q += p) {
            mark(q);
        }
    }

    prefix_.reserve(limit / kBlockSize + 1);
    std::uint64_t running = 0;
    for (std::uint64_t i = 0; i <= limit; ++i) {
        if (i % kBlockSize == 0) {
            prefix_.push_back(running);
        }
        running += not_prime(i) ? 0 : 1;
    }
}

std::uint64_t SieveOracle::pi(std::uint64_t n) const
{
    if (n > limit_) {
        throw std::domain_error("pi_oracle: n = " + std::to_string(n) +
                                " is above the sieve limit " + std::to_string(limit_));
    }
    const std::uint64_t block = n / kBlockSize;
    std::uint64_t count = prefix_[block];
    // Count primes in [block * kBlockSize, n]. kBlockSize is a multiple of 64,
    // so the range starts on a word boundary.
    std::uint64_t i = block * kBlockSize;
    for (; i + 63 <= n; i += 64) {
        count += 64 - static_cast<std::uint64_t>(std::popcount(bits_[i >> 6]));
    }
    for (; i <= n; ++i) {
        count += not_prime(i) ? 0 : 1;
    }
    return count;
}

bool SieveOracle::is_prime(std::uint64_t k) const
{
    if (k > limit_) {
        throw std::domain_error("is_prime_oracle: k = " + std::to_string(k) +
                                " is above the sieve limit " + std::to_string(limit_));
    }
    return !not_prime(k);
}

std::uint64_t SieveOracle::count_by_scan() const noexcept
{
    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i <= limit_; ++i) {
        count += not_prime(i) ? 0 : 1;
    }
    return count;
}

} // namespace barrett
