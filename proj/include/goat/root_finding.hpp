#pragma once

#include <functional>

namespace goat {

struct RootResult {
    double root = 0.0;
    double f_root = 0.0;
    int evaluations = 0;
};

/// Brent's method (bisection safeguarded inverse quadratic / secant steps).
///
/// Requires f(lo) and f(hi) to differ in sign or one of them to vanish;
/// throws BracketError otherwise. Returns once the bracket containing the
/// root is no wider than `tol`, or f evaluates to exactly zero.
RootResult brent_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                      int max_iterations = 200);

/// Plain bisection with the same bracket contract as brent_root.
RootResult bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                       int max_iterations = 200);

}  // namespace goat
