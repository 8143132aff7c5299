// trig.hpp
// Floating-point evaluations of the summand sin[((k-1)!/k) pi] / sin(pi/k).
//
// The reduced path feeds sin() the argument m pi / k with m = (k-1)! mod 2k,
// so the argument stays below 2 pi and the result is accurate to ~1e-11 for
// k <= 1e5. The naive path forms (k-1)! pi / k directly in double precision
// and lets the math library reduce it; it is only attempted while (k-1)! is
// exactly representable (k <= 19), so any error is pure argument-reduction
// error.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace barrett {

// Largest k whose factorial (k-1)! fits the 53-bit significand exactly.
inline constexpr std::uint64_t kNaiveMaxK = 19;

inline constexpr std::string_view kNaiveUndefinedReason = "factorial not representable";

// Reduced tolerance that every supported k must meet.
inline constexpr double kReducedTolerance = 1e-9;

// m * pi / k, the argument actually handed to sin() on the reduced path.
double reduced_trig_argument(std::uint64_t k);

double term_reduced_trig(std::uint64_t k);

// std::nullopt for k > kNaiveMaxK.
std::optional<double> term_naive_float(std::uint64_t k);

struct TermComparison {
    std::uint64_t k = 0;
    unsigned exact = 0;
    std::uint64_t m = 0;
    double numerator = 0.0; // sin(m pi / k)
    double reduced_trig = 0.0;
    std::optional<double> naive_float;
    double abs_error_reduced = 0.0;
    std::optional<double> abs_error_naive;

    [[nodiscard]] bool naive_defined() const noexcept { return naive_float.has_value(); }
};

struct ComparisonSummary {
    double max_error_reduced = 0.0;
    std::uint64_t max_error_reduced_k = 0;
    // First k whose naive error exceeds 0.5, if any in range.
    std::optional<std::uint64_t> first_naive_divergence;
};

struct ComparisonReport {
    std::vector<TermComparison> rows; // ascending k
    ComparisonSummary summary;
};

// Requires 5 <= k_lo <= k_hi.
ComparisonReport compare_methods(std::uint64_t k_lo, std::uint64_t k_hi, unsigned threads = 1);

} // namespace barrett
