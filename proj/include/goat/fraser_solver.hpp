#pragma once

#include "goat/solution.hpp"
#include "goat/special_functions.hpp"

namespace goat {

inline constexpr double kQuarterPi = std::numbers::pi / 4.0;
inline constexpr double kDefaultSolverTol = 1e-12;

struct SolveOptions {
    double tol = kDefaultSolverTol;
    QuadratureConfig quadrature{};
    /// Skip the closed-form branches for n = 0 and n = 1.
    bool force_numeric = false;
};

/// F_n(beta) = (2 cos beta)^n * int_{pi/2-beta}^{pi/2} cos^n - int_0^{2 beta - pi/2} cos^n.
///
/// beta must lie in [pi/4, pi/2]. F_n is positive at pi/4 and its unique zero
/// in the bracket is the half-grazing angle. (2 cos beta)^0 is taken as 1
/// everywhere, including beta = pi/2.
double fraser_residual(double n, double beta, const QuadratureConfig& cfg = {});

/// Root of F_n in [pi/4, pi/2].
GoatSolution solve_beta(double n, const SolveOptions& opts = {});

/// 2 cos beta for beta in [pi/4, pi/2].
double tether_ratio(double beta);

/// solve_beta followed by tether_ratio.
GoatSolution solve_k(double n, const SolveOptions& opts = {});

/// sqrt(2) - k_n, which shrinks towards zero as n grows.
double limit_gap(double n, const SolveOptions& opts = {});

}  // namespace goat
