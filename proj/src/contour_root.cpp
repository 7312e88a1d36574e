#include "goat/contour_root.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "goat/errors.hpp"

namespace goat {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

constexpr double kMinDenominator = 1e-13;
constexpr double kCountTolerance = 0.1;

}  // namespace

void CircleContour::validate() const {
    if (!is_finite(center)) throw DomainError("contour centre must be finite");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("contour radius must be positive");
    if (nodes < 8) throw DomainError("contour needs at least 8 nodes");
}

CircleContour default_ullisch_contour() {
    return {Complex{3.0 * std::numbers::pi / 8.0, 0.0}, std::numbers::pi / 4.0, 256};
}

Complex ullisch_f(Complex z) { return std::sin(z) - z * std::cos(z) - std::numbers::pi / 2.0; }

Complex ullisch_f_prime(Complex z) { return z * std::sin(z); }

Complex contour_quadrature(const AnalyticFunction& g, const CircleContour& contour) {
    contour.validate();
    const double step = 2.0 * std::numbers::pi / contour.nodes;
    Complex sum{0.0, 0.0};
    for (int j = 0; j < contour.nodes; ++j) {
        const Complex offset = std::polar(contour.radius, step * j);
        const Complex value = g(contour.center + offset);
        if (!is_finite(value)) {
            throw DegenerateError("non-finite integrand on contour at node " + std::to_string(j));
        }
        // dz = i (z - center) dt
        sum += value * offset;
    }
    return Complex{0.0, step} * sum;
}

Complex extract_root(const AnalyticFunction& f, const CircleContour& contour) {
    const Complex numerator = contour_quadrature([&](Complex z) { return z / f(z); }, contour);
    const Complex denominator = contour_quadrature([&](Complex z) { return 1.0 / f(z); }, contour);
    if (std::abs(denominator) < kMinDenominator) {
        throw DegenerateError("contour integral of 1/f vanishes; no enclosed zero or cancellation");
    }
    return numerator / denominator;
}

ZeroCount count_zeros(const AnalyticFunction& f, const AnalyticFunction& f_prime,
                      const CircleContour& contour) {
    const Complex integral = contour_quadrature([&](Complex z) { return f_prime(z) / f(z); }, contour);
    const Complex raw = integral / Complex{0.0, 2.0 * std::numbers::pi};
    const double nearest = std::round(raw.real());
    if (std::abs(raw - Complex{nearest, 0.0}) > kCountTolerance) {
        throw ValidationError("argument-principle integral " + std::to_string(raw.real()) + " + " +
                              std::to_string(raw.imag()) + "i is not close to an integer");
    }
    return {static_cast<int>(nearest), raw};
}

GoatSolution ullisch_k(const CircleContour& contour) {
    const ZeroCount zeros = count_zeros(ullisch_f, ullisch_f_prime, contour);
    if (zeros.count != 1) {
        throw ValidationError("contour encloses " + std::to_string(zeros.count) +
                              " zeros of sin z - z cos z - pi/2, expected 1");
    }
    const Complex root = extract_root(ullisch_f, contour);
    if (std::abs(root.imag()) > kRootImagTolerance) {
        throw ValidationError("extracted root has imaginary part " + std::to_string(root.imag()));
    }
    const double z = root.real();
    const double beta = 0.5 * z;
    return {2.0, beta, 2.0 * std::cos(beta), std::abs(ullisch_f(Complex{z, 0.0})), Method::contour};
}

}  // namespace goat
