#include "barrett/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "barrett/counter.hpp"
#include "barrett/parallel.hpp"
#include "barrett/trig.hpp"
#include "barrett/verify.hpp"

namespace barrett {

namespace {

// Thrown for argument values the parser accepts but a command rejects.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_formula_domain(u64 v, const char* name)
{
    if (v < kFirstTerm) {
        throw UsageError(std::string(name) + " = " + std::to_string(v) +
                         " is outside the formula domain: " + name + " must be an integer > 4");
    }
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string term_class_name(TermClass c)
{
    return c == TermClass::Prime ? "prime" : "composite";
}

int cmd_count(const RunConfig& cfg, u64 n, std::ostream& out)
{
    require_formula_domain(n, "n");
    const SieveOracle oracle(n - 1, cfg.sieve_cap);
    const u64 barr = barrett_count(n, cfg.threads);
    const u64 pi = oracle.pi(n - 1);
    Table t{{"n", "barr", "pi", "difference"}, {}};
    t.rows.push_back({Cell::integer(n), Cell::integer(barr), Cell::integer(pi), Cell::integer(barr - pi)});
    render(t, cfg.format, out);
    return kExitOk;
}

int cmd_table(const RunConfig& cfg, u64 from, u64 to, u64 step, std::ostream& out)
{
    require_formula_domain(from, "from");
    if (to < from || step == 0) {
        throw UsageError("table: need 5 <= from <= to and step >= 1");
    }
    const SieveOracle oracle(to - 1, cfg.sieve_cap);
    Table t{{"n", "barr", "pi", "pnt", "ratio"}, {}};
    for (const CountRow& r : count_table(from, to, step, oracle, cfg.threads)) {
        t.rows.push_back({Cell::integer(r.n), Cell::integer(r.barr), Cell::integer(r.pi_oracle),
                          Cell::fixed6(r.pnt), Cell::fixed6(r.ratio)});
    }
    render(t, cfg.format, out);
    return kExitOk;
}

int cmd_term(const RunConfig& cfg, u64 k, const std::string& method, std::ostream& out)
{
    require_formula_domain(k, "k");
    const BarrettTerm exact = barrett_term(k);
    Cell value;
    std::string note;
    if (method == "exact") {
        value = Cell::integer(exact.value);
    } else if (method == "reduced-trig") {
        value = Cell::real(term_reduced_trig(k));
    } else {
        if (const auto v = term_naive_float(k)) {
            value = Cell::real(*v);
        } else {
            value = Cell::null();
            note = kNaiveUndefinedReason;
        }
    }
    Table t{{"k", "m", "method", "value", "classification", "note"}, {}};
    t.rows.push_back({Cell::integer(k), Cell::integer(exact.m), Cell::string(method), value,
                      Cell::string(term_class_name(exact.classification)), Cell::string(note)});
    render(t, cfg.format, out);
    return kExitOk;
}

int cmd_compare(const RunConfig& cfg, u64 k_lo, u64 k_hi, std::ostream& out, std::ostream& err)
{
    require_formula_domain(k_lo, "k_lo");
    if (k_hi < k_lo) {
        throw UsageError("compare: need 5 <= k_lo <= k_hi");
    }
    const ComparisonReport report = compare_methods(k_lo, k_hi, cfg.threads);
    auto optional_real = [](const std::optional<double>& v) {
        return v ? Cell::real(*v) : Cell::null();
    };
    Table t{{"k", "exact", "m", "numerator", "reduced_trig", "naive_float", "abs_error_reduced",
             "abs_error_naive"},
            {}};
    for (const TermComparison& r : report.rows) {
        t.rows.push_back({Cell::integer(r.k), Cell::integer(r.exact), Cell::integer(r.m),
                          Cell::real(r.numerator), Cell::real(r.reduced_trig), optional_real(r.naive_float),
                          Cell::real(r.abs_error_reduced), optional_real(r.abs_error_naive)});
    }
    render(t, cfg.format, out);

    // Summary goes after the table in human mode and to stderr otherwise,
    // keeping machine output one schema per stream.
    std::ostream& summary = cfg.format == OutputFormat::Human ? out : err;
    const ComparisonSummary& s = report.summary;
    summary << "max reduced error: " << Cell::real(s.max_error_reduced).text << " at k = "
            << s.max_error_reduced_k << '\n'
            << "first naive divergence (> 0.5): "
            << (s.first_naive_divergence ? std::to_string(*s.first_naive_divergence) : "none") << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, u64 max, std::ostream& out, std::ostream& err)
{
    require_formula_domain(max, "max");
    const auto start = std::chrono::steady_clock::now();
    const SieveOracle oracle(max, cfg.sieve_cap);
    const VerifyReport r = verify_all(oracle, max, cfg.threads);

    Table t{{"check", "value"}, {}};
    auto row = [&](std::string key, Cell v) { t.rows.push_back({Cell::string(std::move(key)), std::move(v)}); };
    row("max", Cell::integer(r.max));
    row("terms_checked", Cell::integer(r.terms_checked));
    row("primes", Cell::integer(r.primes));
    row("composites", Cell::integer(r.composites));
    row("composite_m_zero", Cell::integer(r.composite_m_zero));
    row("composite_m_k", Cell::integer(r.composite_m_k));
    row("wilson_checked", Cell::integer(r.wilson_checked));
    row("absorption_checked", Cell::integer(r.absorption_checked));
    row("k4_exception", Cell::string(r.k4_exception_holds ? "holds" : "VIOLATED"));
    row("mismatches", Cell::integer(r.mismatches.size()));
    for (const Mismatch& m : r.mismatches) {
        row("mismatch", Cell::string(std::to_string(m.k) + ": " + m.what));
    }
    row("result", Cell::string(r.ok() ? "PASS" : "FAIL"));
    render(t, cfg.format, out);

    err << "verify: " << std::fixed << std::setprecision(3) << seconds_since(start) << " s with "
        << cfg.threads << " thread(s)\n";
    return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_bench(const RunConfig& cfg, u64 max, std::ostream& out)
{
    require_formula_domain(max, "max");
    using clock = std::chrono::steady_clock;

    auto start = clock::now();
    const auto serial = barrett_terms(kFirstTerm, max, 1);
    const double serial_s = seconds_since(start);

    start = clock::now();
    const auto parallel = barrett_terms(kFirstTerm, max, cfg.threads);
    const double parallel_s = seconds_since(start);

    auto sum = [](const std::vector<unsigned char>& v) {
        u64 s = 0;
        for (unsigned char x : v) s += x;
        return s;
    };
    const u64 terms = serial.size();
    const bool identical = serial == parallel;
    auto rate = [terms](double s) { return s > 0 ? static_cast<double>(terms) / s : 0.0; };

    Table t{{"mode", "threads", "terms", "term_sum", "seconds", "terms_per_second", "matches_serial"}, {}};
    t.rows.push_back({Cell::string("serial"), Cell::integer(1), Cell::integer(terms), Cell::integer(sum(serial)),
                      Cell::fixed6(serial_s), Cell::fixed6(rate(serial_s)), Cell::string("yes")});
    t.rows.push_back({Cell::string("parallel"), Cell::integer(cfg.threads), Cell::integer(terms),
                      Cell::integer(sum(parallel)), Cell::fixed6(parallel_s), Cell::fixed6(rate(parallel_s)),
                      Cell::string(identical ? "yes" : "no")});
    render(t, cfg.format, out);
    return identical ? kExitOk : kExitMismatch;
}

unsigned threads_from_env()
{
    const char* env = std::getenv("BARRETT_THREADS");
    if (env == nullptr || *env == '\0') {
        return default_thread_count();
    }
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 4096) {
        throw UsageError(std::string("BARRETT_THREADS must be an integer in [1, 4096], got '") + env + "'");
    }
    return static_cast<unsigned>(v);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Barrett prime counter: exact and floating-point evaluation, verification, tables"};
    app.name("barrett");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format_name = "human";
    unsigned threads_flag = 0;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"human", "csv", "tsv", "jsonl"}));
    app.add_option("--threads", threads_flag, "Worker threads (overrides BARRETT_THREADS)")
        ->check(CLI::Range(1u, 4096u));
    app.add_option("--sieve-cap", cfg.sieve_cap, "Largest sieve limit allowed")->check(CLI::PositiveNumber);

    u64 n = 0, from = 0, to = 0, step = 1, k = 0, k_hi = 0, max = 0;
    std::string method = "exact";

    auto* count = app.add_subcommand("count", "Barr(n) next to pi(n-1)");
    count->add_option("n", n)->required();

    auto* table = app.add_subcommand("table", "Barr(n), pi(n-1), n/ln n and the ratio Barr(n) ln n / n");
    table->add_option("from", from)->required();
    table->add_option("to", to)->required();
    table->add_option("step", step)->required();

    auto* term = app.add_subcommand("term", "Inspect one summand");
    term->add_option("k", k)->required();
    term->add_option("--method", method, "exact, reduced-trig or naive-float")
        ->check(CLI::IsMember({"exact", "reduced-trig", "naive-float"}));

    auto* compare = app.add_subcommand("compare", "Exact vs reduced-trig vs naive-float over a k range");
    compare->add_option("k_lo", k)->required();
    compare->add_option("k_hi", k_hi)->required();

    auto* verify = app.add_subcommand("verify", "Check every term in [5, max] against the sieve");
    verify->add_option("max", max)->required();

    auto* bench = app.add_subcommand("bench", "Serial vs parallel exact evaluation throughput");
    bench->add_option("max", max)->required();

    for (auto* sub : {count, table, term, compare, verify, bench}) {
        sub->fallthrough();
    }

    std::vector<const char*> argv{"barrett"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.format = *parse_format(format_name);
        cfg.threads = threads_flag != 0 ? threads_flag : threads_from_env();

        if (*count) return cmd_count(cfg, n, out);
        if (*table) return cmd_table(cfg, from, to, step, out);
        if (*term) return cmd_term(cfg, k, method, out);
        if (*compare) return cmd_compare(cfg, k, k_hi, out, err);
        if (*verify) return cmd_verify(cfg, max, out, err);
        if (*bench) return cmd_bench(cfg, max, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitResource;
    }
    return kExitUsage;
}

} // namespace barrett
