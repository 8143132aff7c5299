// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every check is single-threaded unless the criterion is about threads.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "barrett/cli.hpp"
#include "barrett/counter.hpp"
#include "barrett/number_theory.hpp"
#include "barrett/sieve.hpp"
#include "barrett/trig.hpp"
#include "oracles.hpp"

using namespace barrett;

namespace {

using clock_type = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(clock_type::time_point t)
{
    return std::chrono::duration<double>(clock_type::now() - t).count();
}

// C1: the worked example, exact, < 1 ms.
Outcome golden_table()
{
    const std::vector<std::pair<u64, u64>> expected{
        {6, 4},  {7, 4},  {8, 5},  {9, 5},  {10, 5}, {11, 5},
        {12, 6}, {13, 6}, {14, 7}, {15, 7}, {16, 7}, {17, 7},
    };
    const auto start = clock_type::now();
    int wrong = 0;
    for (const auto& [n, barr] : expected) {
        wrong += barrett_count(n) != barr;
    }
    const double ms = seconds_since(start) * 1e3;
    return {wrong == 0 && ms < 1.0,
            std::to_string(wrong) + " wrong of 12, " + std::to_string(ms) + " ms (limit 1 ms)"};
}

// C2: exact term vs sieve over [5, 1e5], single thread, < 60 s.
Outcome oracle_equivalence(const SieveOracle& s)
{
    const auto start = clock_type::now();
    u64 mismatches = 0;
    for (u64 k = 5; k <= 100'000; ++k) {
        mismatches += (barrett_term(k).value == 1) != s.is_prime(k);
    }
    const double sec = seconds_since(start);
    return {mismatches == 0 && sec < 60.0,
            std::to_string(mismatches) + " mismatches, " + std::to_string(sec) + " s (limit 60 s)"};
}

// C3: m == k-1 for primes, m in {0, k} for composites, [5, 1e5].
Outcome case_two_invariant(const SieveOracle& s)
{
    u64 violations = 0;
    u64 zero = 0, equal_k = 0;
    for (u64 k = 5; k <= 100'000; ++k) {
        const u64 m = reduced_sine_argument(k);
        if (s.is_prime(k)) {
            violations += m != k - 1;
        } else {
            violations += m != 0 && m != k;
            zero += m == 0;
            equal_k += m == k;
        }
    }
    return {violations == 0, std::to_string(violations) + " violations; composite split m=0: " +
                                 std::to_string(zero) + ", m=k: " + std::to_string(equal_k)};
}

// C4: absorption on composites in [6, 1e4], and the k = 4 exception.
Outcome absorption(const SieveOracle& s)
{
    u64 violations = 0;
    for (u64 k = 6; k <= 10'000; ++k) {
        if (s.is_prime(k)) continue;
        const AbsorptionReport r = absorption_check(k);
        for (const auto& v : r.valuations) violations += v.nu < v.alpha;
        violations += factorial_mod(k - 1, k) != 0;
    }
    const AbsorptionReport four = absorption_check(4);
    const bool four_fails = four.valuations.size() == 1 && four.valuations[0].p == 2 &&
                            four.valuations[0].nu == 1 && four.valuations[0].alpha == 2 && !four.absorbed;
    return {violations == 0 && four_fails,
            std::to_string(violations) + " violations; k=4 nu=1 < alpha=2: " + (four_fails ? "yes" : "no")};
}

// C5: Legendre vs incremental factor counting, p <= 50, t <= 1e4, < 10 s.
Outcome legendre_vs_counting()
{
    const auto start = clock_type::now();
    u64 mismatches = 0;
    u64 checks = 0;
    for (u64 p = 2; p <= 50; ++p) {
        if (!oracle::is_prime(p)) continue;
        u64 nu = 0;
        for (u64 t = 0; t <= 10'000; ++t) {
            if (t > 0) {
                for (u64 x = t; x % p == 0; x /= p) ++nu;
            }
            mismatches += legendre_valuation(p, t) != nu;
            ++checks;
        }
    }
    const double sec = seconds_since(start);
    return {mismatches == 0 && sec < 10.0, std::to_string(mismatches) + " mismatches of " +
                                               std::to_string(checks) + ", " + std::to_string(sec) +
                                               " s (limit 10 s)"};
}

// C6: reduced-trig error < 1e-9 on [5, 1e5]; naive error > 0.5 at some k <= 19.
Outcome trig_paths()
{
    double max_error = 0.0;
    u64 max_k = 0;
    for (u64 k = 5; k <= 100'000; ++k) {
        const double e = std::abs(term_reduced_trig(k) - barrett_term(k).value);
        if (e > max_error) {
            max_error = e;
            max_k = k;
        }
    }
    u64 first_divergence = 0;
    for (u64 k = 5; k <= kNaiveMaxK && first_divergence == 0; ++k) {
        const auto naive = term_naive_float(k);
        if (naive && std::abs(*naive - barrett_term(k).value) > 0.5) {
            first_divergence = k;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "max reduced error %.3e at k=%llu (limit 1e-9); first naive divergence k=%s",
                  max_error, static_cast<unsigned long long>(max_k),
                  first_divergence ? std::to_string(first_divergence).c_str() : "none");
    return {max_error < 1e-9 && first_divergence != 0, buf};
}

// C7: ratio at 1e5 in [1.10, 1.11]; pi(1e6) == 78498; sieve work < 5 s.
Outcome pnt_table()
{
    const auto start = clock_type::now();
    const SieveOracle big(1'000'000);
    const u64 pi6 = big.pi(1'000'000);
    const double sieve_sec = seconds_since(start);
    const CountRow row = asymptotic_ratio(100'000, big);
    char buf[200];
    std::snprintf(buf, sizeof buf, "ratio(1e5)=%.6f (Barr=%llu, pi=%llu), pi(1e6)=%llu, sieve %.3f s (limit 5 s)",
                  row.ratio, static_cast<unsigned long long>(row.barr),
                  static_cast<unsigned long long>(row.pi_oracle), static_cast<unsigned long long>(pi6), sieve_sec);
    return {row.ratio >= 1.10 && row.ratio <= 1.11 && pi6 == 78498 && sieve_sec < 5.0, buf};
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str()};
}

// C8: verify report identical for 1 and 8 threads; table identical across formats.
Outcome determinism()
{
    const CliRun one = cli({"verify", "100000", "--threads", "1"});
    const CliRun eight = cli({"verify", "100000", "--threads", "8"});
    const bool verify_ok = one.code == 0 && eight.code == 0 && one.out == eight.out;

    const std::vector<std::string> base{"table", "5", "20000", "97"};
    auto table = [&](const char* fmt) {
        auto a = base;
        a.insert(a.end(), {"--format", fmt});
        return cli(a).out;
    };
    auto rows = [](const std::string& text, char sep) {
        std::vector<std::vector<std::string>> out;
        std::istringstream in(text);
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line)) {
            std::vector<std::string> cells;
            std::string cell;
            std::istringstream ls(line);
            while (std::getline(ls, cell, sep)) cells.push_back(cell);
            out.push_back(cells);
        }
        return out;
    };
    const auto csv = rows(table("csv"), ',');
    const auto tsv = rows(table("tsv"), '\t');
    std::vector<std::vector<std::string>> json;
    {
        std::istringstream in(table("jsonl"));
        std::string line;
        while (std::getline(in, line)) {
            const auto obj = nlohmann::json::parse(line);
            std::vector<std::string> cells;
            for (const char* key : {"n", "barr", "pi", "pnt", "ratio"}) {
                // Re-serialise the raw number token from the line itself.
                const std::string tag = std::string("\"") + key + "\":";
                const auto at = line.find(tag) + tag.size();
                cells.push_back(line.substr(at, line.find_first_of(",}", at) - at));
                if (!obj.at(key).is_number()) cells.back() = "<not a number>";
            }
            json.push_back(cells);
        }
    }
    const bool formats_ok = !csv.empty() && csv == tsv && csv == json;
    return {verify_ok && formats_ok,
            std::string("verify 1 vs 8 threads: ") + (verify_ok ? "identical, exit 0" : "DIFFERENT or failed") +
                "; table csv/tsv/jsonl: " + (formats_ok ? "identical" : "DIFFERENT") + " (" +
                std::to_string(csv.size()) + " rows)"};
}

} // namespace

int main()
{
    const SieveOracle s(100'000);
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 golden table", golden_table},
        {"2 oracle equivalence [5, 1e5]", [&] { return oracle_equivalence(s); }},
        {"3 reduced-argument invariant", [&] { return case_two_invariant(s); }},
        {"4 absorption", [&] { return absorption(s); }},
        {"5 Legendre vs brute force", legendre_vs_counting},
        {"6 trig paths", trig_paths},
        {"7 PNT table", pnt_table},
        {"8 determinism", determinism},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const Outcome o = check();
        std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
