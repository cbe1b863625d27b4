// Command-line front end: single norms, parameter tables, randomized
// verification suites and radial profile dumps.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "janowski/janowski.hpp"

namespace {

using namespace janowski;

enum Exit : int { kOk = 0, kInvalid = 2, kVerifyFailed = 3, kIoFailed = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "lo:hi:n" -> n evenly spaced values from lo to hi inclusive.
std::vector<double> parse_range(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw UsageError("range must look like lo:hi:n, got '" + spec + "'");
    auto number = [&](std::string_view s) {
        double v{};
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw UsageError("bad number '" + std::string(s) + "' in range '" + spec + "'");
        return v;
    };
    const std::string_view sv(spec);
    const double lo = number(sv.substr(0, c1));
    const double hi = number(sv.substr(c1 + 1, c2 - c1 - 1));
    const auto ns = sv.substr(c2 + 1);
    long n{};
    const auto [ptr, ec] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
    if (ec != std::errc{} || ptr != ns.data() + ns.size() || n < 1)
        throw UsageError("range count must be a positive integer in '" + spec + "'");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            n == 1 ? lo : (i == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    std::sort(out.begin(), out.end());
    return out;
}

int run_compute(double a, double b, double tol, bool json) {
    const auto p = validate(a, b);
    const auto rec = OutputRecord::from(p, preschwarzian_norm(p, tol));
    std::cout << (json ? to_json(rec) + "\n" : to_human(rec));
    return kOk;
}

int run_table(const std::string& a_range, const std::string& b_range, const std::string& out_path,
              const std::string& format) {
    const auto as = parse_range(a_range);
    const auto bs = parse_range(b_range);
    std::vector<OutputRecord> rows;
    std::size_t skipped = 0;
    for (double a : as) {
        for (double b : bs) {
            try {
                const auto p = validate(a, b);
                rows.push_back(OutputRecord::from(p, preschwarzian_norm(p)));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::InvalidParams) throw;
                ++skipped;
            }
        }
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kIoFailed;
    }
    if (format == "csv") {
        out << kCsvHeader << '\n';
        for (const auto& r : rows) out << to_csv_row(r) << '\n';
        out << "# skipped " << skipped << " invalid pairs\n";
    } else {
        out << "{\"records\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? ",\n" : "\n") << to_json(rows[i]);
        out << "\n],\"skipped\":" << skipped << "}\n";
    }
    out.flush();
    if (!out) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kIoFailed;
    }
    return kOk;
}

int run_verify(const std::string& suite, std::size_t samples, std::uint64_t seed) {
    std::vector<verify::InvariantResult> results;
    auto append = [&](std::vector<verify::InvariantResult> more) {
        results.insert(results.end(), more.begin(), more.end());
    };
    if (suite == "lemma" || suite == "all") append(verify::lemma_suite(samples, seed));
    if (suite == "theorem" || suite == "all") append(verify::theorem_suite(samples, seed));
    if (suite == "schwarz" || suite == "all") append(verify::schwarz_suite(samples, seed));
    std::cout << "seed: " << seed << "\n";
    bool ok = true;
    for (const auto& r : results) {
        std::cout << r.name << ": " << r.passed << "/" << r.total << (r.ok() ? " pass" : " FAIL") << "\n";
        ok = ok && r.ok();
    }
    return ok ? kOk : kVerifyFailed;
}

int run_profile(double a, double b, std::size_t points, const std::string& out_path) {
    const auto p = validate(a, b);
    if (points < 2) throw UsageError("--points must be at least 2");
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kIoFailed;
    }
    out << "x,gamma1,gamma2,h1,h2\n";
    for (std::size_t i = 0; i < points; ++i) {
        const double x = i + 1 == points ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
        out << format_exact(x) << ',' << format_exact(gamma(Profile::Gamma1, p, x)) << ','
            << format_exact(gamma(Profile::Gamma2, p, x)) << ',' << format_exact(h1(p, x)) << ','
            << format_exact(h2(p, x)) << '\n';
    }
    out.flush();
    if (!out) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kIoFailed;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp pre-Schwarzian norms for the Janowski starlike class S*(A,B)"};
    app.require_subcommand(1);

    double a = 0, b = 0, tol = kDefaultTol;
    bool json = false;
    auto* compute = app.add_subcommand("compute", "Norm for one (A, B)");
    compute->add_option("--a", a, "A in (-1, 1]")->required();
    compute->add_option("--b", b, "B in [-1, A)")->required();
    compute->add_option("--tol", tol, "root bracket width")->check(CLI::PositiveNumber);
    compute->add_flag("--json", json, "print one JSON object");

    std::string a_range, b_range, out_path, format = "csv";
    auto* table = app.add_subcommand("table", "Norms over a grid of (A, B)");
    table->add_option("--a-range", a_range, "lo:hi:n")->required();
    table->add_option("--b-range", b_range, "lo:hi:n")->required();
    table->add_option("--out", out_path, "output file")->required();
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::string suite = "all";
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Randomized property suites");
    verify_cmd->add_option("--suite", suite, "lemma, theorem, schwarz or all")
        ->check(CLI::IsMember({"lemma", "theorem", "schwarz", "all"}));
    verify_cmd->add_option("--samples", samples, "draws per invariant")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "RNG seed");

    std::size_t points = 201;
    auto* profile = app.add_subcommand("profile", "Dump gamma1, gamma2, h1, h2 on [0, 1]");
    profile->add_option("--a", a, "A in (-1, 1]")->required();
    profile->add_option("--b", b, "B in [-1, A)")->required();
    profile->add_option("--points", points, "number of x samples");
    profile->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kInvalid;
    }

    try {
        if (*compute) return run_compute(a, b, tol, json);
        if (*table) return run_table(a_range, b_range, out_path, format);
        if (*verify_cmd) return run_verify(suite, samples, seed);
        if (*profile) return run_profile(a, b, points, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InvalidParams || e.code() == ErrorCode::Domain ? kInvalid
                                                                                      : kVerifyFailed;
    }
    return kInvalid;
}
