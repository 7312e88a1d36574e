#include "goat/cli/commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "goat/cli/log.hpp"
#include "goat/contour_root.hpp"
#include "goat/errors.hpp"

namespace goat::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::int64_t kMaxTableRows = 100000;

struct GlobalFlags {
    double tol = kDefaultSolverTol;
    std::string format;
    std::uint64_t seed = 42;
    std::int64_t samples = 1'000'000;
    int nodes = 256;
    std::string output;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + path + " for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("failed writing " + path);
}

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

template <typename Fn>
auto timed(Fn&& fn, double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

nlohmann::json solution_json(const GoatSolution& s) {
    return {{"n", s.n}, {"beta", s.beta}, {"k", s.k}, {"residual", s.residual},
            {"method", std::string(to_string(s.method))}};
}

std::string default_format(const GlobalFlags& g, const char* fallback) {
    return g.format.empty() ? std::string(fallback) : g.format;
}

SolveOptions solve_options(const GlobalFlags& g) {
    SolveOptions opts;
    opts.tol = g.tol;
    return opts;
}

// --- solve -------------------------------------------------------------------

struct SolveArgs {
    double n = 2.0;
    double r = 1.0;
    std::string method = "auto";
    bool force_numeric = false;
};

int cmd_solve(const SolveArgs& a, const GlobalFlags& g, std::ostream& out) {
    if (!(a.n >= 0.0) || !std::isfinite(a.n)) throw UsageError("--n must be a finite real >= 0");
    if (!(a.r > 0.0) || !std::isfinite(a.r)) throw UsageError("--r must be positive");

    GoatSolution s;
    if (a.method == "fraser" || a.method == "auto") {
        SolveOptions opts = solve_options(g);
        opts.force_numeric = a.force_numeric;
        s = solve_k(a.n, opts);
    } else if (a.method == "contour") {
        if (a.n != 2.0) throw UsageError("method contour is only defined for n = 2");
        CircleContour contour = default_ullisch_contour();
        contour.nodes = g.nodes;
        s = ullisch_k(contour);
    } else {
        if (!is_integer(a.n) || a.n < 1.0) throw UsageError("method oracle needs an integer n >= 1");
        s = solve_k_oracle(static_cast<int>(a.n), g.tol);
    }
    log_debug("solved n = " + format_number(a.n) + " with method " + std::string(to_string(s.method)));

    const double tether = s.tether_length(a.r);
    std::string text;
    if (default_format(g, "json") == "csv") {
        text = "n,r,beta,k,R,residual,method\n" + format_number(s.n) + "," + format_number(a.r) + "," +
               format_number(s.beta) + "," + format_number(s.k) + "," + format_number(tether) + "," +
               format_number(s.residual) + "," + std::string(to_string(s.method)) + "\n";
    } else {
        nlohmann::json j = solution_json(s);
        j["r"] = a.r;
        j["R"] = tether;
        text = j.dump(2) + "\n";
    }
    emit(text, g.output, out);
    return kSuccess;
}

// --- table -------------------------------------------------------------------

struct TableArgs {
    double n_min = 0.0;
    double n_max = 10.0;
    double step = 1.0;
};

int cmd_table(const TableArgs& a, const GlobalFlags& g, std::ostream& out) {
    if (!(a.n_min >= 0.0) || !(a.n_max >= a.n_min) || !std::isfinite(a.n_max)) {
        throw UsageError("table needs 0 <= n-min <= n-max");
    }
    if (!(a.step > 0.0)) throw UsageError("--step must be positive");
    if ((a.n_max - a.n_min) / a.step >= static_cast<double>(kMaxTableRows)) {
        throw UsageError("table would exceed " + std::to_string(kMaxTableRows) + " rows");
    }
    const auto rows = compute_table(a.n_min, a.n_max, a.step, solve_options(g));
    const std::string text =
        default_format(g, "csv") == "json" ? table_json(rows).dump(2) + "\n" : table_csv(rows);
    emit(text, g.output, out);
    return kSuccess;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    int n = 2;
    double tol_cross = 1e-8;
    bool with_mc = false;
    bool timings = false;
};

int cmd_verify(const VerifyArgs& a, const GlobalFlags& g, std::ostream& out) {
    if (a.n < 1 || a.n > 6) throw UsageError("verify supports n = 1..6");
    if (!(a.tol_cross > 0.0)) throw UsageError("--tol-cross must be positive");
    VerifyOptions opts;
    opts.tol_cross = a.tol_cross;
    opts.solve = solve_options(g);
    opts.nodes = g.nodes;
    opts.with_mc = a.with_mc;
    opts.mc = {g.samples, g.seed};
    const RunReport report = verify(a.n, opts);

    std::string text;
    if (default_format(g, "json") == "csv") {
        text = "first,second,abs_delta_k,tolerance,pass\n";
        for (const Deviation& d : report.deviations) {
            text += d.first + "," + d.second + "," + format_number(d.abs_delta_k) + "," +
                    format_number(d.tolerance) + "," + (d.pass ? "true" : "false") + "\n";
        }
    } else {
        text = report.to_json(a.timings).dump(2) + "\n";
    }
    emit(text, g.output, out);
    for (const MethodRun& run : report.runs) {
        log_info(run.path + ": k = " + format_number(run.solution.k) + " (" + format_number(run.seconds) + " s)");
    }
    if (!report.pass()) {
        for (const Deviation& d : report.deviations) {
            if (!d.pass) {
                log_info("deviation " + d.first + " vs " + d.second + " = " + format_number(d.abs_delta_k) +
                         " exceeds " + format_number(d.tolerance));
            }
        }
        return kVerificationFailure;
    }
    return kSuccess;
}

// --- plot --------------------------------------------------------------------

struct PlotArgs {
    double n_max = 32.0;
    double step = 0.5;
};

int cmd_plot(const PlotArgs& a, const GlobalFlags& g, std::ostream& out) {
    if (!(a.n_max > 0.0) || !std::isfinite(a.n_max)) throw UsageError("--n-max must be positive");
    if (!(a.step > 0.0)) throw UsageError("--step must be positive");
    if (g.output.empty()) throw UsageError("plot requires --output <file.svg>");
    if (a.n_max / a.step >= static_cast<double>(kMaxTableRows)) throw UsageError("too many plot points");

    const auto rows = compute_table(0.0, a.n_max, a.step, solve_options(g));
    std::vector<PlotPoint> points;
    points.reserve(rows.size());
    for (const TableRow& row : rows) points.push_back({row.n, row.k});
    emit(render_svg(points, a.n_max), g.output, out);
    log_info("wrote " + g.output);
    return kSuccess;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return {buf, res.ptr};
}

std::vector<TableRow> compute_table(double n_min, double n_max, double step, const SolveOptions& opts) {
    const auto count = static_cast<std::int64_t>(std::floor((n_max - n_min) / step + 1e-9)) + 1;
    std::vector<TableRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        const double n = n_min + static_cast<double>(i) * step;
        const GoatSolution s = solve_k(n, opts);
        rows.push_back({n, s.beta, s.k, std::numbers::sqrt2 - s.k});
    }
    return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string text = "n,beta,k,sqrt2_gap\n";
    for (const TableRow& r : rows) {
        text += format_number(r.n) + "," + format_number(r.beta) + "," + format_number(r.k) + "," +
                format_number(r.sqrt2_gap) + "\n";
    }
    return text;
}

nlohmann::json table_json(const std::vector<TableRow>& rows) {
    nlohmann::json list = nlohmann::json::array();
    for (const TableRow& r : rows) {
        list.push_back({{"n", r.n}, {"beta", r.beta}, {"k", r.k}, {"sqrt2_gap", r.sqrt2_gap}});
    }
    return {{"rows", list}};
}

bool RunReport::pass() const {
    for (const Deviation& d : deviations) {
        if (!d.pass) return false;
    }
    return !monte_carlo || monte_carlo->pass;
}

nlohmann::json RunReport::to_json(bool with_timings) const {
    nlohmann::json methods = nlohmann::json::array();
    for (const MethodRun& run : runs) {
        nlohmann::json j = solution_json(run.solution);
        j["path"] = run.path;
        if (with_timings) j["wall_seconds"] = run.seconds;
        methods.push_back(j);
    }
    nlohmann::json devs = nlohmann::json::array();
    for (const Deviation& d : deviations) {
        devs.push_back({{"first", d.first},
                        {"second", d.second},
                        {"abs_delta_k", d.abs_delta_k},
                        {"tolerance", d.tolerance},
                        {"pass", d.pass}});
    }
    nlohmann::json j = {{"n", n}, {"tol_cross", tol_cross}, {"methods", methods}, {"deviations", devs}};
    if (monte_carlo) {
        j["monte_carlo"] = {{"k", monte_carlo->k},
                            {"fraction", monte_carlo->estimate.fraction},
                            {"std_error", monte_carlo->estimate.std_error},
                            {"pass", monte_carlo->pass}};
    }
    j["verdict"] = pass() ? "pass" : "fail";
    return j;
}

RunReport verify(int n, const VerifyOptions& opts) {
    RunReport report;
    report.n = n;
    report.tol_cross = opts.tol_cross;

    MethodRun fraser{"fraser", {}, 0.0};
    fraser.solution = timed([&] { return solve_k(n, opts.solve); }, fraser.seconds);
    report.runs.push_back(fraser);

    if (n == 2) {
        MethodRun contour{"contour", {}, 0.0};
        CircleContour c = default_ullisch_contour();
        c.nodes = opts.nodes;
        contour.solution = timed([&] { return ullisch_k(c); }, contour.seconds);
        report.runs.push_back(contour);
    }

    MethodRun oracle{"oracle", {}, 0.0};
    oracle.solution = timed([&] { return solve_k_oracle(n, opts.solve.tol, opts.solve.quadrature); },
                            oracle.seconds);
    report.runs.push_back(oracle);

    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        for (std::size_t j = i + 1; j < report.runs.size(); ++j) {
            const double delta = std::abs(report.runs[i].solution.k - report.runs[j].solution.k);
            report.deviations.push_back({report.runs[i].path, report.runs[j].path, delta, opts.tol_cross,
                                         delta <= opts.tol_cross});
        }
    }

    if (opts.with_mc) {
        McCheck mc;
        mc.k = fraser.solution.k;
        mc.estimate = grazed_fraction_mc(n, mc.k, opts.mc);
        mc.pass = std::abs(mc.estimate.fraction - 0.5) <= 4.0 * mc.estimate.std_error;
        report.monte_carlo = mc;
    }
    return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    set_log_level(log_level_from_env());

    CLI::App app{"Half-grazing tether ratios for the interior goat problem", "goat"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--tol", g.tol, "solver tolerance on beta")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", g.seed, "Monte Carlo seed");
    app.add_option("--samples", g.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    app.add_option("--nodes", g.nodes, "contour quadrature nodes")->check(CLI::Range(8, 1 << 24));
    app.add_option("--output", g.output, "output file (stdout when omitted; required for plot)");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "tether ratio k_n and tether length R = k_n r");
    solve->add_option("--n", solve_args.n, "field dimension (real, >= 0)");
    solve->add_option("--r", solve_args.r, "field radius");
    solve->add_option("--method", solve_args.method)
        ->check(CLI::IsMember({"fraser", "contour", "oracle", "auto"}));
    solve->add_flag("--force-numeric", solve_args.force_numeric, "skip the closed forms for n = 0, 1");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "k_n over a range of dimensions");
    table->add_option("--n-min", table_args.n_min);
    table->add_option("--n-max", table_args.n_max);
    table->add_option("--step", table_args.step);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "cross-check Fraser, contour and geometric paths");
    verify_cmd->add_option("--n", verify_args.n, "integer dimension 1..6");
    verify_cmd->add_option("--tol-cross", verify_args.tol_cross, "allowed |delta k| between methods");
    verify_cmd->add_flag("--with-mc", verify_args.with_mc, "add the Monte Carlo half-volume check");
    verify_cmd->add_flag("--timings", verify_args.timings, "include wall times in the report");

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "SVG of k_n against n with the sqrt(2) asymptote");
    plot->add_option("--n-max", plot_args.n_max);
    plot->add_option("--step", plot_args.step);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_args, g, out);
        if (table->parsed()) return cmd_table(table_args, g, out);
        if (verify_cmd->parsed()) return cmd_verify(verify_args, g, out);
        return cmd_plot(plot_args, g, out);
    } catch (const UsageError& e) {
        err << "goat: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "goat: " << e.what() << '\n';
        return kUsageError;
    } catch (const IoError& e) {
        err << "goat: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::exception& e) {
        err << "goat: numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    }
}

}  // namespace goat::cli
