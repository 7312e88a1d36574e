#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "goat/fraser_solver.hpp"
#include "goat/geometry_oracle.hpp"
#include "goat/solution.hpp"

namespace goat::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kNumericFailure = 3,
    kIoFailure = 4,
};

/// Entry point shared by the `goat` binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 12 significant digits with "." as decimal point regardless of locale.
std::string format_number(double value);

struct TableRow {
    double n = 0.0;
    double beta = 0.0;
    double k = 0.0;
    double sqrt2_gap = 0.0;
};

/// Rows at n_min, n_min + step, ... up to n_max (inclusive within rounding).
std::vector<TableRow> compute_table(double n_min, double n_max, double step, const SolveOptions& opts);
std::string table_csv(const std::vector<TableRow>& rows);
nlohmann::json table_json(const std::vector<TableRow>& rows);

struct MethodRun {
    std::string path;  // fraser | contour | oracle
    GoatSolution solution;
    double seconds = 0.0;
};

struct Deviation {
    std::string first;
    std::string second;
    double abs_delta_k = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct McCheck {
    double k = 0.0;
    FractionEstimate estimate;
    bool pass = false;
};

struct RunReport {
    int n = 0;
    double tol_cross = 0.0;
    std::vector<MethodRun> runs;
    std::vector<Deviation> deviations;
    std::optional<McCheck> monte_carlo;

    [[nodiscard]] bool pass() const;
    /// Wall times are only included on request; they would break byte-identical output.
    [[nodiscard]] nlohmann::json to_json(bool with_timings) const;
};

struct VerifyOptions {
    double tol_cross = 1e-8;
    SolveOptions solve{};
    int nodes = 256;
    bool with_mc = false;
    MonteCarloConfig mc{};
};

/// Fraser and oracle paths (plus contour at n = 2), compared pairwise on k.
RunReport verify(int n, const VerifyOptions& opts);

struct PlotPoint {
    double n = 0.0;
    double k = 0.0;
};

/// Self-contained SVG 1.1: k_n polyline plus dashed asymptote at sqrt(2).
std::string render_svg(const std::vector<PlotPoint>& points, double n_max);

}  // namespace goat::cli
