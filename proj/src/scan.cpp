#include "cyclo/scan.hpp"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <fstream>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "cyclo/ek.hpp"
#include "cyclo/error.hpp"
#include "cyclo/sieve.hpp"

namespace cyclo::scan {

namespace {

constexpr std::string_view kEkMethodTag = "loggamma";

[[noreturn]] void parse_error(std::size_t line_number, const std::string& what)
{
    throw PreconditionError("line " + std::to_string(line_number) + ": " + what);
}

double parse_real(std::string_view field, std::size_t line_number, const char* column)
{
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(x)) {
        parse_error(line_number, std::string("bad ") + column + " '" + std::string(field) + "'");
    }
    return x;
}

std::string expected_method(const ScanOptions& options)
{
    return options.kind == ScanKind::ek ? std::string(kEkMethodTag) : std::string(kummer::to_string(options.method));
}

struct FileCloser {
    void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void write_line(std::FILE* f, const std::string& line, const std::filesystem::path& path)
{
    if (std::fwrite(line.data(), 1, line.size(), f) != line.size() || std::fputc('\n', f) == EOF) {
        throw PreconditionError("cannot write to " + path.string());
    }
}

void sync(std::FILE* f, const std::filesystem::path& path)
{
    if (std::fflush(f) != 0 || ::fsync(::fileno(f)) != 0) {
        throw PreconditionError("cannot flush " + path.string());
    }
}

// Computes rows for `primes` on `jobs` threads and hands them to `commit` in order.
template <typename Commit>
void compute_ordered(const std::vector<std::uint64_t>& primes, const ScanOptions& options, Commit&& commit)
{
    const std::size_t n = primes.size();
    if (options.jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            commit(i, compute_row(primes[i], options));
        }
        return;
    }

    std::mutex mutex;
    std::condition_variable cv;
    std::vector<std::optional<ScanRow>> slots(n);
    std::size_t next_claim = 0;
    std::size_t committed = 0;
    bool stop = false;
    std::exception_ptr error;
    // Workers never run further than this many rows ahead of the writer.
    const std::size_t window = std::max<std::size_t>(options.sync_every, 1) * options.jobs * 2;

    auto worker = [&] {
        for (;;) {
            std::size_t i = 0;
            {
                std::unique_lock lock(mutex);
                cv.wait(lock, [&] { return stop || next_claim >= n || next_claim < committed + window; });
                if (stop || next_claim >= n) {
                    return;
                }
                i = next_claim++;
            }
            try {
                auto row = compute_row(primes[i], options);
                std::lock_guard lock(mutex);
                slots[i] = std::move(row);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!error) {
                    error = std::current_exception();
                }
                stop = true;
            }
            cv.notify_all();
        }
    };

    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < options.jobs; ++j) {
        pool.emplace_back(worker);
    }
    auto halt = [&] {
        {
            std::lock_guard lock(mutex);
            stop = true;
        }
        cv.notify_all();
        pool.clear();
    };
    try {
        for (std::size_t i = 0; i < n; ++i) {
            ScanRow row;
            {
                std::unique_lock lock(mutex);
                cv.wait(lock, [&] { return slots[i].has_value() || error; });
                if (!slots[i]) {
                    break;
                }
                row = std::move(*slots[i]);
                slots[i].reset();
                committed = i + 1;
            }
            cv.notify_all();
            commit(i, std::move(row));
        }
    } catch (...) {
        halt();
        throw;
    }
    halt();
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace

std::string_view to_string(ScanKind kind)
{
    return kind == ScanKind::ek ? "ek" : "kummer";
}

ScanKind parse_kind(std::string_view name)
{
    if (name == "kummer") {
        return ScanKind::kummer;
    }
    if (name == "ek") {
        return ScanKind::ek;
    }
    throw PreconditionError("unknown scan kind '" + std::string(name) + "' (expected kummer or ek)");
}

std::string format_number(double x)
{
    char buffer[64];
    const int length = std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return std::string(buffer, static_cast<std::size_t>(length));
}

std::string format_row(const ScanRow& row)
{
    std::string line = std::to_string(row.q);
    line += ',';
    line += format_number(row.value);
    line += ',';
    line += format_number(row.r_or_norm);
    line += ',';
    line += row.method;
    line += ',';
    line += to_string(row.kind);
    return line;
}

ScanRow parse_row(std::string_view line, std::size_t line_number)
{
    std::vector<std::string_view> fields;
    for (std::size_t begin = 0;;) {
        const auto comma = line.find(',', begin);
        fields.push_back(line.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin));
        if (comma == std::string_view::npos) {
            break;
        }
        begin = comma + 1;
    }
    if (fields.size() != 5) {
        parse_error(line_number, "expected 5 fields, found " + std::to_string(fields.size()));
    }
    ScanRow row;
    const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), row.q);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size() || fields[0].empty()) {
        parse_error(line_number, "bad q '" + std::string(fields[0]) + "'");
    }
    row.value = parse_real(fields[1], line_number, "value");
    row.r_or_norm = parse_real(fields[2], line_number, "r");
    if (fields[3].empty() || !std::all_of(fields[3].begin(), fields[3].end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
        parse_error(line_number, "bad method '" + std::string(fields[3]) + "'");
    }
    row.method = std::string(fields[3]);
    try {
        row.kind = parse_kind(fields[4]);
    } catch (const PreconditionError& e) {
        parse_error(line_number, e.what());
    }
    return row;
}

ScanSummary summarize(std::span<const ScanRow> rows)
{
    ScanSummary summary;
    for (const auto& row : rows) {
        const double threshold = row.kind == ScanKind::ek ? 0.0 : 1.0;
        const double v = row.r_or_norm;
        if (summary.count_total == 0 || v < summary.min_value) {
            summary.min_value = v;
            summary.min_q = row.q;
        }
        if (summary.count_total == 0 || v > summary.max_value) {
            summary.max_value = v;
            summary.max_q = row.q;
        }
        ++summary.count_total;
        if (v >= threshold) {
            ++summary.count_above_one;
        } else {
            ++summary.count_below_one;
        }
    }
    return summary;
}

std::string format_summary(const ScanSummary& summary, ScanKind kind)
{
    const char* column = kind == ScanKind::ek ? "normalized" : "r";
    const char* threshold = kind == ScanKind::ek ? "0" : "1";
    auto percent = [&](std::uint64_t count) {
        char buffer[32];
        const double share = summary.count_total == 0 ? 0.0 : 100.0 * static_cast<double>(count) /
                                                                  static_cast<double>(summary.count_total);
        std::snprintf(buffer, sizeof buffer, "%.2f%%", share);
        return std::string(buffer);
    };
    std::ostringstream out;
    out << "kind: " << to_string(kind) << '\n';
    out << "total: " << summary.count_total << '\n';
    out << "above (" << column << " >= " << threshold << "): " << summary.count_above_one << " ("
        << percent(summary.count_above_one) << ")\n";
    out << "below (" << column << " < " << threshold << "): " << summary.count_below_one << " ("
        << percent(summary.count_below_one) << ")\n";
    if (summary.count_total == 0) {
        out << "min: n/a\nmax: n/a\n";
    } else {
        out << "min: " << format_number(summary.min_value) << " at q = " << summary.min_q << '\n';
        out << "max: " << format_number(summary.max_value) << " at q = " << summary.max_q << '\n';
    }
    return out.str();
}

ScanFile parse_scan_text(std::string_view text)
{
    ScanFile file;
    const auto last_newline = text.rfind('\n');
    file.complete_bytes = last_newline == std::string_view::npos ? 0 : last_newline + 1;
    file.has_partial_tail = file.complete_bytes < text.size();
    const std::string_view complete = text.substr(0, file.complete_bytes);

    std::size_t line_number = 0;
    for (std::size_t begin = 0; begin < complete.size();) {
        const auto newline = complete.find('\n', begin);
        const std::string_view line = complete.substr(begin, newline - begin);
        begin = newline + 1;
        ++line_number;
        if (line_number == 1) {
            if (line != kCsvHeader) {
                parse_error(1, "expected header '" + std::string(kCsvHeader) + "'");
            }
            continue;
        }
        ScanRow row = parse_row(line, line_number);
        if (!file.rows.empty()) {
            if (row.q <= file.rows.back().q) {
                parse_error(line_number, "q = " + std::to_string(row.q) + " does not increase");
            }
            if (row.kind != file.rows.front().kind) {
                parse_error(line_number, "mixed scan kinds");
            }
        }
        file.rows.push_back(std::move(row));
    }
    return file;
}

ScanFile read_scan_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw PreconditionError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
        return parse_scan_text(text);
    } catch (const PreconditionError& e) {
        throw PreconditionError(path.string() + ": " + e.what());
    }
}

ScanRow compute_row(std::uint64_t q, const ScanOptions& options)
{
    ScanRow row;
    row.q = q;
    row.kind = options.kind;
    if (options.kind == ScanKind::ek) {
        const auto result = ek::ek_difference(q, options.engine.max_table_entries);
        row.value = result.diff;
        row.r_or_norm = result.normalized;
        row.method = std::string(kEkMethodTag);
    } else {
        const auto result = kummer::kummer_ratio(q, options.method, options.engine);
        row.value = result.log_r;
        row.r_or_norm = result.r;
        row.method = std::string(kummer::to_string(options.method));
    }
    return row;
}

ScanSummary run_scan(const ScanOptions& options, std::ostream* log)
{
    if (options.start > options.end) {
        throw PreconditionError("scan: start must not exceed end");
    }
    if (options.out.empty()) {
        throw PreconditionError("scan: an output path is required");
    }
    const auto primes = odd_primes_in(options.start, options.end);
    const std::string method = expected_method(options);

    std::vector<ScanRow> rows;
    bool need_header = true;
    std::error_code ec;
    if (std::filesystem::exists(options.out, ec)) {
        ScanFile existing = read_scan_file(options.out);
        if (existing.has_partial_tail) {
            std::filesystem::resize_file(options.out, existing.complete_bytes, ec);
            if (ec) {
                throw PreconditionError("cannot truncate partial line in " + options.out.string());
            }
        }
        need_header = existing.complete_bytes == 0;
        rows = std::move(existing.rows);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto line_number = i + 2;
            if (i >= primes.size() || rows[i].q != primes[i]) {
                parse_error(line_number, "checkpoint row q = " + std::to_string(rows[i].q) +
                                             " is not the next odd prime of the requested range");
            }
            if (rows[i].kind != options.kind || rows[i].method != method) {
                parse_error(line_number, "checkpoint row was computed with a different kind or method");
            }
        }
        if (log && !rows.empty()) {
            *log << "resuming after q = " << rows.back().q << " (" << rows.size() << " rows present)\n";
        }
    }

    FilePtr file(std::fopen(options.out.c_str(), "ab"));
    if (!file) {
        throw PreconditionError("cannot open " + options.out.string() + " for writing");
    }
    if (need_header) {
        write_line(file.get(), std::string(kCsvHeader), options.out);
    }

    const std::vector<std::uint64_t> remaining(primes.begin() + static_cast<std::ptrdiff_t>(rows.size()), primes.end());
    rows.reserve(primes.size());
    const std::size_t sync_every = std::max<std::size_t>(options.sync_every, 1);
    try {
        compute_ordered(remaining, options, [&](std::size_t i, ScanRow row) {
            write_line(file.get(), format_row(row), options.out);
            rows.push_back(std::move(row));
            if ((i + 1) % sync_every == 0) {
                sync(file.get(), options.out);
            }
        });
    } catch (...) {
        std::fflush(file.get());
        throw;
    }
    sync(file.get(), options.out);
    return summarize(rows);
}

}  // namespace cyclo::scan
