#include "haarmi/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "haarmi/asymptotics.hpp"
#include "haarmi/borel.hpp"
#include "haarmi/errors.hpp"
#include "haarmi/haar_mc.hpp"
#include "haarmi/rng.hpp"
#include "haarmi/special_functions.hpp"

#ifndef HAARMI_VERSION
#define HAARMI_VERSION "0.0.0"
#endif

namespace haarmi {

namespace {

constexpr double kRouteFloor = 1e-12;
constexpr double kRationalRelTol = 1e-13;
constexpr double kOracleSigmas = 3.0;

struct HelpRequested {
    std::string text;
};

long long parse_int(std::string_view text) {
    long long v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw UsageError("malformed integer '" + std::string(text) + "'");
    }
    return v;
}

std::string format_number(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string field(const std::optional<double>& v, int digits = 17) {
    return v ? format_number(*v, digits) : std::string();
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Exact: return "exact";
        case Command::Series: return "series";
        case Command::Integral: return "integral";
        case Command::Oracle: return "oracle";
        case Command::Verify: return "verify";
        case Command::Sweep: return "sweep";
    }
    return "?";
}

bool wants(Command c, Command a) { return c == a || c == Command::Verify || c == Command::Sweep; }

}  // namespace

IntRange IntRange::parse(std::string_view text) {
    const auto dots = text.find("..");
    IntRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_int(text);
    } else {
        r.lo = parse_int(text.substr(0, dots));
        r.hi = parse_int(text.substr(dots + 2));
    }
    if (r.lo < 1 || r.hi < r.lo) {
        throw UsageError("range '" + std::string(text) + "' must be non-empty with values >= 1");
    }
    return r;
}

std::vector<Dimensions> RunConfig::grid() const {
    std::vector<Dimensions> out;
    for (long long a = d_a.lo; a <= d_a.hi; ++a) {
        for (long long b = d_b.lo; b <= d_b.hi; ++b) {
            if (d_e_mult) {
                for (long long m = d_e_mult->lo; m <= d_e_mult->hi; ++m) {
                    out.push_back(Dimensions::make_checked(a, b, m * a * b));
                }
            } else {
                for (long long e = d_e->lo; e <= d_e->hi; ++e) out.push_back(Dimensions::make_checked(a, b, e));
            }
        }
    }
    return out;
}

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig config;
    if (const char* env = std::getenv("HAAR_MI_SEED"); env != nullptr && *env != '\0') {
        try {
            config.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("HAAR_MI_SEED is not an unsigned integer: ") + env);
        }
    }

    CLI::App app{"Haar-average bipartite mutual information of random pure states", "haar-mi"};
    app.require_subcommand(1);
    std::string da, db, de, de_mult, format = "table", out_path;
    bool no_oracle = false;

    struct Subcommand {
        Command command;
        const char* description;
    };
    const Subcommand subcommands[] = {
        {Command::Exact, "Digamma and exact-rational evaluation with its diagonal/eigenvalue split"},
        {Command::Series, "Bernoulli asymptotic series at optimal truncation"},
        {Command::Integral, "Bose-Einstein closed-form integral and bound deficit"},
        {Command::Oracle, "Monte Carlo estimate from Haar-random states"},
        {Command::Verify, "Cross-check every route against each other"},
        {Command::Sweep, "Evaluate all analytic routes over dimension ranges"},
    };
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& entry : subcommands) {
        CLI::App* sub = app.add_subcommand(std::string(command_name(entry.command)), entry.description);
        sub->add_option("--da", da, "d_A, value or range lo..hi")->required();
        sub->add_option("--db", db, "d_B, value or range lo..hi")->required();
        auto* e = sub->add_option("--de", de, "d_E, value or range lo..hi");
        auto* em = sub->add_option("--de-mult", de_mult, "d_E as multiples of d_A d_B, value or range");
        e->excludes(em);
        sub->add_option("--tol", config.tol, "absolute quadrature tolerance")->capture_default_str();
        sub->add_option("--kmax", config.k_max, "highest series order")->capture_default_str();
        sub->add_option("--samples", config.n_samples, "Monte Carlo sample count")->capture_default_str();
        sub->add_option("--seed", config.seed, "Monte Carlo seed (env HAAR_MI_SEED)");
        sub->add_option("--workers", config.workers, "worker threads, 0 = available parallelism");
        sub->add_option("--format", format, "table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        sub->add_option("--out", out_path, "write output to PATH instead of stdout");
        if (entry.command == Command::Verify) {
            sub->add_flag("--no-oracle", no_oracle, "skip the Monte Carlo comparison");
        }
        if (entry.command == Command::Sweep) {
            sub->add_flag("--oracle", config.with_oracle, "include Monte Carlo columns");
        }
        sub->add_option("--inject-j-fault", config.j_perturbation)->group("");
        subs.emplace_back(sub, entry.command);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = &app;
        for (auto& [sub, cmd] : subs) {
            if (sub->parsed()) target = sub;
        }
        throw HelpRequested{target->help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (auto& [sub, cmd] : subs) {
        if (sub->parsed()) config.command = cmd;
    }
    config.d_a = IntRange::parse(da);
    config.d_b = IntRange::parse(db);
    if (!de.empty()) {
        config.d_e = IntRange::parse(de);
    } else if (!de_mult.empty()) {
        config.d_e_mult = IntRange::parse(de_mult);
    } else {
        throw UsageError("one of --de or --de-mult is required");
    }
    if (!(config.tol > 0.0)) throw UsageError("--tol must be > 0");
    if (config.k_max < 1 || config.k_max > kMaxBernoulliIndex / 2) {
        throw UsageError("--kmax must lie in [1, " + std::to_string(kMaxBernoulliIndex / 2) + "]");
    }
    if (config.command == Command::Oracle) config.with_oracle = true;
    if (config.command == Command::Verify) config.with_oracle = !no_oracle;
    if (config.with_oracle && config.n_samples < 2) throw UsageError("--samples must be >= 2");
    config.format = format == "csv" ? OutputFormat::Csv
                                    : (format == "json" ? OutputFormat::Json : OutputFormat::Table);
    if (!out_path.empty()) config.output_path = out_path;
    // Validates every triple up front so bad dimensions are usage errors.
    try {
        (void)config.grid();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return config;
}

ResultRow evaluate_row(const Dimensions& dims, const RunConfig& config) {
    ResultRow row{.dims = dims, .regime = dims.factorised_regime() ? Regime::Factorised : Regime::Swapped};
    const bool factorised = dims.factorised_regime();
    const Command c = config.command;

    if (wants(c, Command::Exact) || c == Command::Oracle) {
        const auto mi = mutual_information_exact(dims);
        row.i_exact = mi.total;
        if (c != Command::Oracle) {
            row.i_diag = mi.i_diag;
            row.delta_ev = mi.delta_ev;
        }
    }
    if (c == Command::Verify) row.i_rational = mutual_information_rational(dims).to_double();
    if (factorised && (wants(c, Command::Exact) || c == Command::Series)) row.i_leading = leading_order(dims);
    if (factorised && wants(c, Command::Series)) {
        const auto truncated = optimal_truncation_value(dims, config.k_max);
        row.i_series_opt = truncated.value;
        row.series_err = truncated.error_estimate;
    }
    if (factorised && wants(c, Command::Integral)) {
        const double su = static_cast<double>(casimir_counts(dims).su_product);
        const double j = compute_j(dims, config.tol).value + config.j_perturbation;
        row.j = j;
        row.i_integral = dims.has_trivial_subsystem()
                             ? 0.0
                             : su * (1.0 / (2.0 * static_cast<double>(dims.total())) - 2.0 * j);
        row.bound_deficit = 2.0 * su * j;
    }
    if (config.with_oracle) {
        const auto stats = run_oracle(dims, config.n_samples, config.seed, config.workers);
        row.oracle_mean = stats.mutual_information.mean;
        row.oracle_stderr = stats.mutual_information.stderr_;
    }
    return row;
}

bool VerifyReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

bool RunResult::passed() const {
    for (const auto& r : reports) {
        if (!r.passed()) return false;
    }
    return true;
}

VerifyReport verify_row(const ResultRow& row, const RunConfig& config) {
    VerifyReport report{.dims = row.dims};
    auto add = [&](std::string name, bool ok, const std::string& detail) {
        report.checks.push_back({std::move(name), ok, detail});
    };
    const double exact = row.i_exact.value_or(NAN);
    if (row.i_rational) {
        const double diff = std::abs(exact - *row.i_rational);
        add("exact_vs_rational", diff <= kRationalRelTol * std::max(std::abs(*row.i_rational), 1e-300) ||
                                     diff == 0.0,
            "|diff| = " + format_number(diff, 3));
    }
    if (row.i_integral) {
        const double diff = std::abs(exact - *row.i_integral);
        add("exact_vs_integral", diff <= std::max(kRouteFloor, 10.0 * config.tol),
            "|diff| = " + format_number(diff, 3));
    }
    if (row.i_series_opt && row.series_err) {
        const double diff = std::abs(row.i_rational.value_or(exact) - *row.i_series_opt);
        add("series_within_error", diff <= 2.0 * *row.series_err,
            "|diff| = " + format_number(diff, 3) + ", error estimate " + format_number(*row.series_err, 3));
    }
    if (row.bound_deficit && !row.dims.has_trivial_subsystem()) {
        add("bound_deficit_positive", *row.bound_deficit > 0.0, format_number(*row.bound_deficit, 6));
    }
    if (row.oracle_mean && row.oracle_stderr) {
        const double z = std::abs(*row.oracle_mean - exact) / *row.oracle_stderr;
        add("oracle_within_3se", std::abs(*row.oracle_mean - exact) <= kOracleSigmas * *row.oracle_stderr,
            "z = " + format_number(z, 3));
    }
    return report;
}

RunResult execute(const RunConfig& config) {
    RunResult result;
    result.metadata = {HAARMI_VERSION, config.seed, config.tol, std::string(Philox4x32::kName)};
    for (const auto& dims : config.grid()) {
        result.rows.push_back(evaluate_row(dims, config));
        if (config.command == Command::Verify) result.reports.push_back(verify_row(result.rows.back(), config));
    }
    return result;
}

namespace {

std::vector<std::string> row_fields(const ResultRow& r, int digits) {
    return {std::to_string(r.dims.d_a()),
            std::to_string(r.dims.d_b()),
            std::to_string(r.dims.d_e()),
            std::to_string(r.dims.total()),
            std::string(to_string(r.regime)),
            field(r.i_exact, digits),
            field(r.i_diag, digits),
            field(r.delta_ev, digits),
            field(r.i_leading, digits),
            field(r.i_series_opt, digits),
            field(r.series_err, digits),
            field(r.i_integral, digits),
            field(r.j, digits),
            field(r.bound_deficit, digits),
            field(r.oracle_mean, digits),
            field(r.oracle_stderr, digits)};
}

std::vector<std::string> header_names() {
    std::vector<std::string> names;
    std::string_view rest = kCsvHeader;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        names.emplace_back(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
    }
    return names;
}

std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string emit_json(const RunResult& result) {
    const auto names = header_names();
    std::ostringstream os;
    os << "{\n  \"metadata\": {\"version\": " << json_string(result.metadata.version)
       << ", \"seed\": " << result.metadata.seed << ", \"tol\": " << format_number(result.metadata.tol, 17)
       << ", \"rng\": " << json_string(result.metadata.rng) << "},\n  \"rows\": [";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto fields = row_fields(result.rows[i], 17);
        os << (i == 0 ? "\n" : ",\n") << "    {";
        for (std::size_t f = 0; f < fields.size(); ++f) {
            os << (f == 0 ? "" : ", ") << json_string(names[f]) << ": ";
            if (f == 4) {
                os << json_string(fields[f]);
            } else {
                os << (fields[f].empty() ? "null" : fields[f]);
            }
        }
        os << "}";
    }
    os << (result.rows.empty() ? "]" : "\n  ]");
    if (!result.reports.empty()) {
        os << ",\n  \"verify\": [";
        for (std::size_t i = 0; i < result.reports.size(); ++i) {
            const auto& rep = result.reports[i];
            os << (i == 0 ? "\n" : ",\n") << "    {\"dA\": " << rep.dims.d_a() << ", \"dB\": " << rep.dims.d_b()
               << ", \"dE\": " << rep.dims.d_e() << ", \"passed\": " << (rep.passed() ? "true" : "false")
               << ", \"checks\": [";
            for (std::size_t c = 0; c < rep.checks.size(); ++c) {
                const auto& ch = rep.checks[c];
                os << (c == 0 ? "" : ", ") << "{\"name\": " << json_string(ch.name)
                   << ", \"passed\": " << (ch.passed ? "true" : "false")
                   << ", \"detail\": " << json_string(ch.detail) << "}";
            }
            os << "]}";
        }
        os << "\n  ],\n  \"passed\": " << (result.passed() ? "true" : "false");
    }
    os << "\n}\n";
    return os.str();
}

std::string emit_table(const RunResult& result) {
    const auto names = header_names();
    std::ostringstream os;
    for (const auto& row : result.rows) {
        const auto fields = row_fields(row, 10);
        os << "(" << fields[0] << ", " << fields[1] << ", " << fields[2] << ")  N = " << fields[3]
           << "  regime = " << fields[4] << "\n";
        for (std::size_t f = 5; f < fields.size(); ++f) {
            if (!fields[f].empty()) os << "  " << std::left << std::setw(15) << names[f] << fields[f] << "\n";
        }
    }
    for (const auto& rep : result.reports) {
        os << "verify (" << rep.dims.d_a() << ", " << rep.dims.d_b() << ", " << rep.dims.d_e()
           << "): " << (rep.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& ch : rep.checks) {
            os << "  [" << (ch.passed ? "pass" : "FAIL") << "] " << ch.name << "  " << ch.detail << "\n";
        }
    }
    os << "seed " << result.metadata.seed << ", tol " << format_number(result.metadata.tol, 3) << ", rng "
       << result.metadata.rng << ", version " << result.metadata.version << "\n";
    return os.str();
}

}  // namespace

std::string emit(const RunResult& result, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: {
            std::string out(kCsvHeader);
            out += '\n';
            for (const auto& row : result.rows) {
                const auto fields = row_fields(row, 17);
                for (std::size_t f = 0; f < fields.size(); ++f) {
                    if (f) out += ',';
                    out += fields[f];
                }
                out += '\n';
            }
            return out;
        }
        case OutputFormat::Json: return emit_json(result);
        case OutputFormat::Table: return emit_table(result);
    }
    return {};
}

int run(const RunConfig& config, std::ostream& out) {
    const RunResult result = execute(config);
    const std::string text = emit(result, config.format);
    if (config.output_path) {
        std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
        if (!file || !(file << text) || !file.flush()) {
            throw IoError("cannot write output to '" + *config.output_path + "'");
        }
    } else {
        out << text;
    }
    if (config.command == Command::Verify && !result.passed()) return exit_code::kVerificationFailed;
    return exit_code::kOk;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(parse_args(args), out);
    } catch (const HelpRequested& help) {
        out << help.text;
        return exit_code::kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_code::kInvalidInput;
    } catch (const NonConvergenceError& e) {
        err << "non-convergence: " << e.what() << "\n";
        return exit_code::kNonConvergence;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << "\n";
        return exit_code::kIo;
    } catch (const InvalidDimensionError& e) {
        err << "invalid dimensions: " << e.what() << "\n";
        return exit_code::kInvalidInput;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return exit_code::kInvalidInput;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return exit_code::kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kInternal;
    }
}

}  // namespace haarmi
