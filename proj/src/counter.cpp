#include "barrett/counter.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "barrett/parallel.hpp"

namespace barrett {

namespace {

void require_term_domain(u64 k, const char* what)
{
    if (k < kFirstTerm) {
        throw std::domain_error(std::string(what) + ": k = " + std::to_string(k) +
                                " is outside the formula domain (k > 4)");
    }
}

void require_count_domain(u64 n, const char* what)
{
    if (n < kFirstTerm) {
        throw std::domain_error(std::string(what) + ": n = " + std::to_string(n) +
                                " is outside the formula domain (n > 4)");
    }
}

u64 sum_terms(u64 n, unsigned threads)
{
    u64 total = kBarrettBase;
    if (n > kFirstTerm) {
        for (unsigned char v : barrett_terms(kFirstTerm, n - 1, threads)) {
            total += v;
        }
    }
    return total;
}

CountRow make_row(u64 n, u64 barr, u64 pi)
{
    const auto x = static_cast<double>(n);
    return {n, barr, pi, pnt_estimate(n), static_cast<double>(barr) * std::log(x) / x};
}

} // namespace

u64 reduced_sine_argument(u64 k)
{
    require_term_domain(k, "reduced_sine_argument");
    if (k > kMaxModulus / 2) {
        throw std::domain_error("reduced_sine_argument: 2k exceeds the supported modulus width");
    }
    return factorial_mod(k - 1, 2 * k);
}

BarrettTerm barrett_term(u64 k)
{
    const u64 m = reduced_sine_argument(k);
    const bool prime = m == k - 1;
    return {k, m, prime ? 1u : 0u, prime ? TermClass::Prime : TermClass::Composite};
}

std::vector<unsigned char> barrett_terms(u64 k_lo, u64 k_hi, unsigned threads)
{
    require_term_domain(k_lo, "barrett_terms");
    if (k_hi < k_lo) {
        throw std::domain_error("barrett_terms: empty range");
    }
    std::vector<unsigned char> values(k_hi - k_lo + 1);
    parallel_for(threads, k_lo, k_hi + 1, [&](u64 lo, u64 hi) {
        for (u64 k = lo; k < hi; ++k) {
            values[k - k_lo] = static_cast<unsigned char>(barrett_term(k).value);
        }
    });
    return values;
}

u64 barrett_count(u64 n, unsigned threads)
{
    require_count_domain(n, "barrett_count");
    return sum_terms(n, threads);
}

std::vector<SeriesEntry> barrett_series(u64 n_max, unsigned threads)
{
    require_count_domain(n_max, "barrett_series");
    std::vector<SeriesEntry> series;
    series.reserve(n_max - kFirstTerm + 1);
    series.push_back({kFirstTerm, kBarrettBase});
    if (n_max == kFirstTerm) {
        return series;
    }
    // Barr(n + 1) = Barr(n) + term(n).
    const auto terms = barrett_terms(kFirstTerm, n_max - 1, threads);
    u64 running = kBarrettBase;
    for (u64 n = kFirstTerm + 1; n <= n_max; ++n) {
        running += terms[n - 1 - kFirstTerm];
        series.push_back({n, running});
    }
    return series;
}

u64 pi_modern(u64 n)
{
    if (n < 4) {
        throw std::domain_error("pi_modern: n must be >= 4");
    }
    return barrett_count(n + 1) - 1;
}

double pnt_estimate(u64 n)
{
    if (n < 2) {
        throw std::domain_error("pnt_estimate: n must be >= 2");
    }
    const auto x = static_cast<double>(n);
    return x / std::log(x);
}

CountRow asymptotic_ratio(u64 n, const SieveOracle& oracle)
{
    const u64 barr = barrett_count(n);
    return make_row(n, barr, oracle.pi(n - 1));
}

CountRow asymptotic_ratio(u64 n)
{
    require_count_domain(n, "asymptotic_ratio");
    return asymptotic_ratio(n, SieveOracle(n));
}

std::vector<CountRow> count_table(u64 from, u64 to, u64 step, const SieveOracle& oracle,
                                  unsigned threads)
{
    require_count_domain(from, "count_table");
    if (to < from || step == 0) {
        throw std::domain_error("count_table: need 5 <= from <= to and step >= 1");
    }
    // Validates the oracle covers the whole table before the expensive part.
    (void)oracle.pi(to - 1);

    const auto series = barrett_series(to, threads);
    std::vector<CountRow> rows;
    rows.reserve((to - from) / step + 1);
    for (u64 n = from; n <= to; n += step) {
        rows.push_back(make_row(n, series[n - kFirstTerm].barr, oracle.pi(n - 1)));
        if (to - n < step) {
            break;
        }
    }
    return rows;
}

} // namespace barrett
