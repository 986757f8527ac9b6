#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/kummer.hpp"

namespace cyclo::scan {

enum class ScanKind { kummer, ek };

std::string_view to_string(ScanKind kind);
ScanKind parse_kind(std::string_view name);

/// One CSV line. For kummer rows value = log r(q) and r_or_norm = r(q); for ek
/// rows value = G_q - G_q^+ and r_or_norm = value / log q.
struct ScanRow {
    std::uint64_t q = 0;
    double value = 0.0;
    double r_or_norm = 0.0;
    std::string method;
    ScanKind kind = ScanKind::kummer;

    bool operator==(const ScanRow&) const = default;
};

inline constexpr std::string_view kCsvHeader = "q,value,r,method,kind";

/// 17 significant digits, "%.17g" style.
std::string format_number(double x);

/// Row without the trailing newline.
std::string format_row(const ScanRow& row);

/// Throws PreconditionError naming line_number on malformed input.
ScanRow parse_row(std::string_view line, std::size_t line_number);

/// Statistics over the r_or_norm column. The split threshold is 1 for kummer
/// rows and 0 for ek rows; a value equal to the threshold counts as above.
struct ScanSummary {
    std::uint64_t count_total = 0;
    std::uint64_t count_above_one = 0;
    std::uint64_t count_below_one = 0;
    std::uint64_t min_q = 0;
    std::uint64_t max_q = 0;
    double min_value = 0.0;
    double max_value = 0.0;

    bool operator==(const ScanSummary&) const = default;
};

ScanSummary summarize(std::span<const ScanRow> rows);

/// Multi-line, deterministic text rendering shared by `scan` and `stats`.
std::string format_summary(const ScanSummary& summary, ScanKind kind);

/// Reads a scan CSV, enforcing the header, well-formed rows, a single kind and
/// strictly increasing q. Errors carry the 1-based line number.
struct ScanFile {
    std::vector<ScanRow> rows;
    std::uintmax_t complete_bytes = 0;  // bytes up to and including the last '\n'
    bool has_partial_tail = false;      // trailing bytes without a newline
};
ScanFile parse_scan_text(std::string_view text);
ScanFile read_scan_file(const std::filesystem::path& path);

struct ScanOptions {
    std::uint64_t start = 3;
    std::uint64_t end = 3;
    ScanKind kind = ScanKind::kummer;
    kummer::Method method = kummer::Method::bernoulli;
    std::filesystem::path out;
    unsigned jobs = 1;
    kummer::EngineOptions engine;
    std::size_t sync_every = 64;
};

/// Evaluates one q.
ScanRow compute_row(std::uint64_t q, const ScanOptions& options);

/// Scans every odd prime in [start, end] into options.out. An existing file is
/// treated as a checkpoint: its rows must be the leading primes of the range,
/// a partial last line is dropped, and the scan continues after the last row.
/// Rows are committed in ascending q and fsync'ed every sync_every rows.
/// Returns the summary over all rows in the file.
ScanSummary run_scan(const ScanOptions& options, std::ostream* log = nullptr);

/// Candidate record primes: q ranked by how many b <= b_limit make b q + 1 prime.
struct Candidate {
    std::uint64_t q = 0;
    unsigned hits = 0;

    bool operator==(const Candidate&) const = default;
};

/// Odd primes in [from, to], sorted by hits descending then q ascending,
/// truncated to count entries.
std::vector<Candidate> rank_candidates(std::uint64_t from, std::uint64_t to, unsigned b_limit, std::size_t count);

/// Number of b in [1, b_limit] with b q + 1 prime.
unsigned count_prime_multiples(std::uint64_t q, unsigned b_limit);

}  // namespace cyclo::scan
