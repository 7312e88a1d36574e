#include "goat/fraser_solver.hpp"

#include <cmath>
#include <string>

#include "goat/errors.hpp"
#include "goat/root_finding.hpp"

namespace goat {

namespace {

void check_dimension(double n) {
    if (!(n >= 0.0) || !std::isfinite(n)) throw DomainError("dimension must be a finite real >= 0");
}

void check_angle(double beta) {
    if (!(beta >= kQuarterPi && beta <= kHalfPi)) {
        throw DomainError("beta must lie in [pi/4, pi/2], got " + std::to_string(beta));
    }
}

}  // namespace

double fraser_residual(double n, double beta, const QuadratureConfig& cfg) {
    check_dimension(n);
    check_angle(beta);
    // (2 cos beta)^n is folded into the integrand: on the reach range
    // 2 cos beta cos theta <= sin 2 beta <= 1, so nothing overflows for large n.
    const double reach =
        scaled_cos_power_integral(n, 2.0 * std::cos(beta), kHalfPi - beta, kHalfPi, cfg);
    const double overlap = cos_power_integral(n, 0.0, 2.0 * beta - kHalfPi, cfg);
    return reach - overlap;
}

double tether_ratio(double beta) {
    check_angle(beta);
    // cos(pi/2) is 6e-17 in floating point; the bracket end is k = 0 exactly.
    if (beta == kHalfPi) return 0.0;
    return 2.0 * std::cos(beta);
}

GoatSolution solve_beta(double n, const SolveOptions& opts) {
    check_dimension(n);
    if (!(opts.tol > 0.0)) throw DomainError("solver tolerance must be positive");
    opts.quadrature.validate();

    if (!opts.force_numeric && n == 0.0) {
        // beta = 2 beta - pi/2.
        return {n, kHalfPi, 0.0, fraser_residual(n, kHalfPi, opts.quadrature), Method::exact};
    }
    if (!opts.force_numeric && n == 1.0) {
        // cos beta = 1/2.
        const double beta = std::numbers::pi / 3.0;
        return {n, beta, 1.0, fraser_residual(n, beta, opts.quadrature), Method::exact};
    }

    const auto residual = [&](double beta) { return fraser_residual(n, beta, opts.quadrature); };
    RootResult root;
    try {
        root = brent_root(residual, kQuarterPi, kHalfPi, opts.tol);
    } catch (const BracketError& e) {
        throw BracketError("Fraser residual does not change sign on [pi/4, pi/2] for n = " +
                           std::to_string(n) + ": " + e.what());
    }
    return {n, root.root, tether_ratio(root.root), root.f_root, Method::numeric};
}

GoatSolution solve_k(double n, const SolveOptions& opts) {
    GoatSolution s = solve_beta(n, opts);
    s.k = tether_ratio(s.beta);
    if (s.method == Method::exact && n == 1.0) s.k = 1.0;
    return s;
}

double limit_gap(double n, const SolveOptions& opts) { return std::numbers::sqrt2 - solve_k(n, opts).k; }

}  // namespace goat
