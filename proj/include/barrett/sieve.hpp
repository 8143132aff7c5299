// sieve.hpp
// Plain sieve of Eratosthenes used as ground truth for every Barrett check.
//
// Bit i of the map is set when i is not prime. 0 and 1 are set by
// convention, so the oracle never counts 1 as a prime.
// Prefix counts are sampled every kBlockSize entries: prefix_[b] is the
// number of primes strictly below b * kBlockSize.
//
// Immutable after construction; share freely across threads.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace barrett {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

// Raised when a request would exceed a configured memory cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SieveOracle {
public:
    static constexpr std::uint64_t kBlockSize = 4096;

    // limit >= 2, limit <= cap. Throws ResourceError above the cap.
    explicit SieveOracle(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

    [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }

    // Number of primes <= n. Requires n <= limit.
    [[nodiscard]] std::uint64_t pi(std::uint64_t n) const;

    // Bitmap lookup. Requires k <= limit.
    [[nodiscard]] bool is_prime(std::uint64_t k) const;

    // Unsampled count over the whole bitmap; used to cross-check pi(limit).
    [[nodiscard]] std::uint64_t count_by_scan() const noexcept;

private:
    [[nodiscard]] bool not_prime(std::uint64_t i) const noexcept
    {
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }
    void mark(std::uint64_t i) noexcept { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    std::uint64_t limit_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint64_t> prefix_;
};

inline SieveOracle build_sieve(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap)
{
    return SieveOracle(limit, cap);
}

inline std::uint64_t pi_oracle(const SieveOracle& s, std::uint64_t n) { return s.pi(n); }

inline bool is_prime_oracle(const SieveOracle& s, std::uint64_t k) { return s.is_prime(k); }

} // namespace barrett
