// cyclo: Kummer ratio r(q) and Euler-Kronecker differences for prime cyclotomic fields.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cyclo/ek.hpp"
#include "cyclo/error.hpp"
#include "cyclo/kummer.hpp"
#include "cyclo/scan.hpp"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitPrecondition = 2;
constexpr const char* kJobsEnv = "CYCLO_JOBS";
constexpr std::uint64_t kBytesPerEntry = sizeof(std::uint64_t);

unsigned default_jobs()
{
    if (const char* env = std::getenv(kJobsEnv)) {
        try {
            const long value = std::stol(env);
            if (value >= 1) {
                return static_cast<unsigned>(value);
            }
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring " << kJobsEnv << "='" << env << "'\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string fixed_digits(double x, int digits)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
    return buffer;
}

struct EngineFlags {
    std::uint64_t oracle_cap = 10'000;
    std::uint64_t memory_budget = cyclo::arith::kDefaultMaxTableEntries * kBytesPerEntry;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--oracle-cap", oracle_cap, "Largest q accepted by the quadratic oracle")
            ->capture_default_str();
        cmd.add_option("--memory-budget", memory_budget, "Bytes allowed for the power table (8 bytes per entry)")
            ->capture_default_str();
    }

    cyclo::kummer::EngineOptions options() const
    {
        return {oracle_cap, memory_budget / kBytesPerEntry};
    }
};

int run_compute(std::uint64_t q, const std::string& method_name, bool with_ek, int digits, const EngineFlags& flags)
{
    using namespace cyclo;
    if (digits < 15 || digits > 21) {
        throw PreconditionError("--digits must lie in [15, 21]");
    }
    arith::require_odd_prime(q);
    const auto method = kummer::parse_method(method_name);
    const auto result = kummer::kummer_ratio(q, method, flags.options());
    std::cout << "q            = " << q << '\n'
              << "method       = " << kummer::to_string(method) << '\n'
              << "log r(q)     = " << fixed_digits(result.log_r, digits) << '\n'
              << "r(q)         = " << fixed_digits(result.r, digits) << '\n'
              << "log10 G(q)   = " << fixed_digits(kummer::log10_G(q), digits) << '\n'
              << "arg defect   = " << fixed_digits(result.arg_defect, 3) << '\n'
              << "elapsed      = " << fixed_digits(static_cast<double>(result.elapsed_ns) * 1e-6, 6) << " ms\n";
    if (with_ek) {
        const auto ekr = ek::ek_difference(q, flags.options().max_table_entries);
        std::cout << "EK diff      = " << fixed_digits(ekr.diff, digits) << '\n'
                  << "EK diff/logq = " << fixed_digits(ekr.normalized, digits) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kummer ratio r(q) of the first factor of the class number of Q(zeta_q), and the\n"
                 "Euler-Kronecker difference G_q - G_q^+.\n\n"
                 "Environment: " + std::string(kJobsEnv) + " sets the default --jobs for scan."};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Evaluate r(q) for one odd prime q");
    std::uint64_t q = 0;
    std::string method = "bernoulli";
    bool with_ek = false;
    int digits = 17;
    EngineFlags compute_flags;
    compute->add_option("q", q, "Odd prime")->required();
    compute->add_option("--method", method, "oracle | digamma | bernoulli")->capture_default_str();
    compute->add_flag("--ek", with_ek, "Also compute (G_q - G_q^+) and its ratio to log q");
    compute->add_option("--digits", digits, "Significant digits printed (15-21)")->capture_default_str();
    compute_flags.attach(*compute);

    // scan
    auto* scan = app.add_subcommand("scan", "Evaluate every odd prime in [start, end] into a CSV checkpoint");
    std::uint64_t start = 3, end = 3;
    std::string kind = "kummer";
    std::string scan_method = "bernoulli";
    std::string out;
    unsigned jobs = default_jobs();
    EngineFlags scan_flags;
    scan->add_option("start", start, "First candidate q")->required();
    scan->add_option("end", end, "Last candidate q")->required();
    scan->add_option("--kind", kind, "kummer | ek")->capture_default_str();
    scan->add_option("--method", scan_method, "Engine for kummer scans")->capture_default_str();
    scan->add_option("--out", out, "Output CSV; an existing file is resumed")->required();
    scan->add_option("--jobs", jobs, "Worker threads (default: $" + std::string(kJobsEnv) + " or all cores)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan_flags.attach(*scan);

    // stats
    auto* stats = app.add_subcommand("stats", "Summarize an existing scan CSV");
    std::string csv;
    stats->add_option("csv", csv, "Scan CSV")->required();

    // candidates
    auto* candidates = app.add_subcommand("candidates", "Rank primes q by how many b q + 1 are prime");
    std::uint64_t from = 3, to = 100'000;
    unsigned b_limit = 20;
    std::size_t count = 20;
    candidates->add_option("--from", from, "Window start")->capture_default_str();
    candidates->add_option("--to", to, "Window end")->capture_default_str();
    candidates->add_option("--b-limit", b_limit, "Largest multiplier b")->capture_default_str();
    candidates->add_option("--count", count, "Entries printed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitPrecondition;
    }

    try {
        if (*compute) {
            return run_compute(q, method, with_ek, digits, compute_flags);
        }
        if (*scan) {
            cyclo::scan::ScanOptions options;
            options.start = start;
            options.end = end;
            options.kind = cyclo::scan::parse_kind(kind);
            options.method = cyclo::kummer::parse_method(scan_method);
            options.out = out;
            options.jobs = jobs;
            options.engine = scan_flags.options();
            const auto summary = cyclo::scan::run_scan(options, &std::cerr);
            std::cout << cyclo::scan::format_summary(summary, options.kind);
            return 0;
        }
        if (*stats) {
            const auto file = cyclo::scan::read_scan_file(csv);
            const auto kind_of_rows = file.rows.empty() ? cyclo::scan::ScanKind::kummer : file.rows.front().kind;
            std::cout << cyclo::scan::format_summary(cyclo::scan::summarize(file.rows), kind_of_rows);
            return 0;
        }
        if (*candidates) {
            for (const auto& c : cyclo::scan::rank_candidates(from, to, b_limit, count)) {
                std::cout << c.q << ' ' << c.hits << '\n';
            }
            return 0;
        }
    } catch (const cyclo::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
