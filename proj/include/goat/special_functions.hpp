#pragma once

#include <functional>
#include <numbers>
#include <span>

namespace goat {

/// Tolerance and subdivision limit for real-line integrals.
///
/// `max_subdivisions` bounds the halving depth of any single panel.
struct QuadratureConfig {
    double abs_tol = 1e-12;
    int max_subdivisions = 20;

    /// Throws DomainError unless abs_tol > 0 and max_subdivisions >= 1.
    void validate() const;
};

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Gamma function for x > 0.
double gamma(double x);

/// Volume of the n-ball of radius r, pi^(n/2) r^n / Gamma(n/2 + 1).
/// Real n >= 0 is accepted; V_0(r) = 1 for every r (0^0 = 1).
double ball_volume(double n, double r);

/// Adaptive composite Gauss-Legendre integration of a smooth integrand on [a, b].
///
/// Each panel is compared against its two halves and split until the
/// difference is below its share of cfg.abs_tol (proportional to length).
/// Throws ConvergenceError once a panel would exceed cfg.max_subdivisions halvings.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg);

/// As above over consecutive panels [p0, p1], [p1, p2], ... of a sorted
/// breakpoint list, each refined independently. The tolerance is shared by length.
double integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 const QuadratureConfig& cfg);

/// Integral of cos^n over [a, b] with 0 <= a <= b <= pi/2 and real n >= 0.
///
/// Negative n is rejected rather than extended. For fractional n the integrand
/// has a branch point at pi/2, so the integral is evaluated in the variable
/// u = sqrt(pi/2 - theta) where the integrand behaves like u^(2n+1). For large
/// n the mass sits in a narrow layer at a, so the range is pre-split into panels
/// growing geometrically away from a.
double cos_power_integral(double n, double a, double b, const QuadratureConfig& cfg = {});

/// Integral of (factor * cos theta)^n over [a, b]; same domain rules as
/// cos_power_integral, factor >= 0. Keeps factor^n inside the integrand so large
/// n neither overflows nor amplifies the absolute quadrature error.
double scaled_cos_power_integral(double n, double factor, double a, double b,
                                 const QuadratureConfig& cfg = {});

}  // namespace goat
