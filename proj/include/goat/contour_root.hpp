#pragma once

#include <complex>
#include <functional>

#include "goat/solution.hpp"

namespace goat {

using Complex = std::complex<double>;
using AnalyticFunction = std::function<Complex(Complex)>;

/// Circle |z - center| = radius sampled at `nodes` equispaced angles.
struct CircleContour {
    Complex center;
    double radius = 1.0;
    int nodes = 256;

    /// Throws DomainError unless radius > 0, nodes >= 8 and the centre is finite.
    void validate() const;
};

/// |z - 3pi/8| = pi/4 with 256 nodes.
CircleContour default_ullisch_contour();

/// sin z - z cos z - pi/2. Its zero at z = 2 beta is the n = 2 half-grazing angle.
Complex ullisch_f(Complex z);

/// z sin z.
Complex ullisch_f_prime(Complex z);

/// Trapezoidal rule for the closed integral of g along the contour.
/// Throws DegenerateError if g is non-finite at any node.
Complex contour_quadrature(const AnalyticFunction& g, const CircleContour& contour);

/// Simple zero of f enclosed by the contour, as (oint z/f dz) / (oint 1/f dz).
///
/// Assumes exactly one simple zero inside and none on the circle. Throws
/// DegenerateError when the denominator is below 1e-13 in magnitude.
Complex extract_root(const AnalyticFunction& f, const CircleContour& contour);

struct ZeroCount {
    int count = 0;
    /// (1/2 pi i) oint f'/f dz before rounding.
    Complex raw;
};

/// Argument-principle zero count. Throws ValidationError if the raw value is
/// more than 0.1 from an integer (including a sizeable imaginary part).
ZeroCount count_zeros(const AnalyticFunction& f, const AnalyticFunction& f_prime,
                      const CircleContour& contour);

/// Imaginary part of the extracted Ullisch root is accepted up to this size.
inline constexpr double kRootImagTolerance = 1e-9;

/// n = 2 tether ratio k = 2 cos(z0 / 2), z0 the zero of ullisch_f inside the contour.
///
/// Checks that the contour encloses exactly one zero and that z0 is real to
/// within kRootImagTolerance (ValidationError otherwise). Multiply k by the
/// field radius for the tether length.
GoatSolution ullisch_k(const CircleContour& contour = default_ullisch_contour());

}  // namespace goat
