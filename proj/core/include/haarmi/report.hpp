#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "haarmi/dims.hpp"
#include "haarmi/page.hpp"

namespace haarmi {

enum class Command { Exact, Series, Integral, Oracle, Verify, Sweep };
enum class OutputFormat { Table, Csv, Json };

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kNonConvergence = 3;
inline constexpr int kVerificationFailed = 4;
inline constexpr int kIo = 5;
}  // namespace exit_code

/// Inclusive integer range; a single value is lo == hi.
struct IntRange {
    long long lo = 1;
    long long hi = 1;

    /// Accepts "7" or "2..4". Throws UsageError.
    static IntRange parse(std::string_view text);
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct RunConfig {
    Command command = Command::Exact;
    IntRange d_a;
    IntRange d_b;
    /// Exactly one of d_e and d_e_mult is set; d_e_mult scales d_A d_B.
    std::optional<IntRange> d_e;
    std::optional<IntRange> d_e_mult;
    double tol = 1e-14;
    int k_max = 40;
    std::int64_t n_samples = 20000;
    std::uint64_t seed = 42;
    unsigned workers = 0;
    OutputFormat format = OutputFormat::Table;
    std::optional<std::string> output_path;
    /// Run the Monte Carlo oracle (always on for oracle, default on for verify).
    bool with_oracle = false;
    /// Test hook: added to J before it enters the closed form.
    double j_perturbation = 0.0;

    /// Every dimension triple the ranges describe, in row-major (d_A, d_B, d_E) order.
    std::vector<Dimensions> grid() const;
};

/// One output row; unset fields serialise as empty.
struct ResultRow {
    Dimensions dims = Dimensions::make(1, 1, 1);
    Regime regime = Regime::Factorised;
    std::optional<double> i_exact;
    std::optional<double> i_diag;
    std::optional<double> delta_ev;
    std::optional<double> i_leading;
    std::optional<double> i_series_opt;
    std::optional<double> series_err;
    std::optional<double> i_integral;
    std::optional<double> j;
    std::optional<double> bound_deficit;
    std::optional<double> oracle_mean;
    std::optional<double> oracle_stderr;
    /// Exact rational value converted once; used by verify.
    std::optional<double> i_rational;
};

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    Dimensions dims = Dimensions::make(1, 1, 1);
    std::vector<VerifyCheck> checks;
    bool passed() const;
};

struct RunMetadata {
    std::string version;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::string rng;
};

struct RunResult {
    RunMetadata metadata;
    std::vector<ResultRow> rows;
    std::vector<VerifyReport> reports;
    bool passed() const;
};

inline constexpr std::string_view kCsvHeader =
    "dA,dB,dE,N,regime,I_exact,I_diag,Delta_ev,I_leading,I_series_opt,series_err,I_integral,J,"
    "bound_deficit,oracle_mean,oracle_stderr";

/// Builds a RunConfig from argv (without the program name). HAAR_MI_SEED in the
/// environment replaces the default seed. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

ResultRow evaluate_row(const Dimensions& dims, const RunConfig& config);

VerifyReport verify_row(const ResultRow& row, const RunConfig& config);

RunResult execute(const RunConfig& config);

/// Table, CSV or JSON text. Numbers carry 17 significant digits (10 in the table).
std::string emit(const RunResult& result, OutputFormat format);

/// Executes and writes to config.output_path or `out`; returns the exit code.
/// Throws IoError when the output file cannot be written.
int run(const RunConfig& config, std::ostream& out);

/// Full command-line entry point with error-to-exit-code mapping.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace haarmi
