#include "barrett/trig.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "barrett/counter.hpp"
#include "barrett/parallel.hpp"

namespace barrett {

namespace {

constexpr double kNaiveDivergence = 0.5;

double argument_of(u64 m, u64 k)
{
    return static_cast<double>(m) * std::numbers::pi / static_cast<double>(k);
}

double quotient_of(double arg, u64 k)
{
    return std::sin(arg) / std::sin(std::numbers::pi / static_cast<double>(k));
}

} // namespace

double reduced_trig_argument(std::uint64_t k)
{
    return argument_of(reduced_sine_argument(k), k);
}

double term_reduced_trig(std::uint64_t k)
{
    return quotient_of(reduced_trig_argument(k), k);
}

std::optional<double> term_naive_float(std::uint64_t k)
{
    if (k < kFirstTerm || k > kNaiveMaxK) {
        return std::nullopt;
    }
    double factorial = 1.0;
    for (std::uint64_t i = 2; i < k; ++i) {
        factorial *= static_cast<double>(i);
    }
    const double kd = static_cast<double>(k);
    const double arg = factorial * std::numbers::pi / kd;
    return std::sin(arg) / std::sin(std::numbers::pi / kd);
}

ComparisonReport compare_methods(std::uint64_t k_lo, std::uint64_t k_hi, unsigned threads)
{
    if (k_lo < kFirstTerm || k_hi < k_lo) {
        throw std::domain_error("compare_methods: need 5 <= k_lo <= k_hi");
    }
    ComparisonReport report;
    report.rows.resize(k_hi - k_lo + 1);
    parallel_for(threads, k_lo, k_hi + 1, [&](u64 lo, u64 hi) {
        for (u64 k = lo; k < hi; ++k) {
            const BarrettTerm exact = barrett_term(k);
            TermComparison& row = report.rows[k - k_lo];
            row.k = k;
            row.exact = exact.value;
            row.m = exact.m;
            const double arg = argument_of(exact.m, k);
            row.numerator = std::sin(arg);
            row.reduced_trig = quotient_of(arg, k);
            row.abs_error_reduced = std::abs(row.reduced_trig - exact.value);
            row.naive_float = term_naive_float(k);
            if (row.naive_float) {
                row.abs_error_naive = std::abs(*row.naive_float - exact.value);
            }
        }
    });

    ComparisonSummary& s = report.summary;
    for (const TermComparison& row : report.rows) {
        if (row.abs_error_reduced >= s.max_error_reduced) {
            s.max_error_reduced = row.abs_error_reduced;
            s.max_error_reduced_k = row.k;
        }
        if (!s.first_naive_divergence && row.abs_error_naive &&
            *row.abs_error_naive > kNaiveDivergence) {
            s.first_naive_divergence = row.k;
        }
    }
    return report;
}

} // namespace barrett
