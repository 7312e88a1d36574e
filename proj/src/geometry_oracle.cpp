#include "goat/geometry_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "goat/errors.hpp"
#include "goat/root_finding.hpp"

namespace goat {

namespace {

void check_dimension(int n) {
    if (n < 1) throw DomainError("geometry oracle needs an integer dimension >= 1, got " + std::to_string(n));
}

void check_ratio(double k) {
    if (!(k >= 0.0 && k <= 2.0)) throw DomainError("tether ratio must lie in [0, 2], got " + std::to_string(k));
}

// Volume of the part of the ball |x - c| <= rho (along the axis) with x between
// c + rho cos(phi_hi) and c + rho cos(phi_lo), phi_lo <= phi_hi.
// Slice at x has radius rho sin(phi) and dx = rho sin(phi) dphi.
double cap_slices(int n, double rho, double phi_lo, double phi_hi, const QuadratureConfig& cfg) {
    if (phi_hi <= phi_lo || rho == 0.0) return 0.0;
    const double cross_section = ball_volume(n - 1, 1.0);
    const auto slice = [&](double phi) {
        const double s = rho * std::sin(phi);
        return cross_section * std::pow(s, n - 1) * s;
    };
    return integrate(slice, phi_lo, phi_hi, cfg);
}

}  // namespace

void MonteCarloConfig::validate() const {
    if (samples < 1) throw DomainError("MonteCarloConfig: samples must be >= 1");
}

LensResult lens_volume(int n, double k, const QuadratureConfig& cfg) {
    check_dimension(n);
    check_ratio(k);
    cfg.validate();
    const double full = ball_volume(n, 1.0);
    if (k == 0.0) return {n, k, 0.0, 0.0};
    if (k == 2.0) return {n, k, full, 0.0};

    const double plane = 1.0 - 0.5 * k * k;
    // Field cap: x in [plane, 1] on the unit ball about 0, x = cos(phi).
    const double field_phi = std::acos(std::clamp(plane, -1.0, 1.0));
    // Tether cap: x in [1 - k, plane] on the radius-k ball about 1, x = 1 + k cos(phi).
    const double tether_phi = std::acos(std::clamp((plane - 1.0) / k, -1.0, 1.0));

    const double field_cap = cap_slices(n, 1.0, 0.0, field_phi, cfg);
    const double tether_cap = cap_slices(n, k, tether_phi, std::numbers::pi, cfg);
    const double volume = std::clamp(field_cap + tether_cap, 0.0, full);
    return {n, k, volume, 2.0 * cfg.abs_tol};
}

double lens_area_2d(double k) {
    check_ratio(k);
    const double k2 = k * k;
    return std::acos(1.0 - 0.5 * k2) + k2 * std::acos(0.5 * k) - 0.5 * k * std::sqrt(4.0 - k2);
}

double SampleStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SampleStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - u keeps the logarithm argument in (0, 1].
    const double radius = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::vector<double> sample_unit_ball(int n, SampleStream& stream) {
    check_dimension(n);
    std::vector<double> point(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& x : point) {
            x = stream.normal();
            norm2 += x * x;
        }
    } while (norm2 == 0.0);
    const double radius = std::pow(stream.uniform(), 1.0 / n);
    const double scale = radius / std::sqrt(norm2);
    for (double& x : point) x *= scale;
    return point;
}

FractionEstimate grazed_fraction_mc(int n, double k, const MonteCarloConfig& mc) {
    check_dimension(n);
    check_ratio(k);
    mc.validate();
    // Every point of the field is within distance 2 of the anchor.
    if (k == 2.0) return {1.0, 0.0};

    SampleStream stream(mc.seed);
    const double reach2 = k * k;
    std::int64_t inside = 0;
    for (std::int64_t i = 0; i < mc.samples; ++i) {
        const std::vector<double> p = sample_unit_ball(n, stream);
        double d2 = (p[0] - 1.0) * (p[0] - 1.0);
        for (std::size_t j = 1; j < p.size(); ++j) d2 += p[j] * p[j];
        if (d2 <= reach2) ++inside;
    }
    const double samples = static_cast<double>(mc.samples);
    const double f = static_cast<double>(inside) / samples;
    return {f, std::sqrt(f * (1.0 - f) / samples)};
}

GoatSolution solve_k_oracle(int n, double tol, const QuadratureConfig& cfg) {
    check_dimension(n);
    if (!(tol > 0.0)) throw DomainError("oracle tolerance must be positive");
    const double half = 0.5 * ball_volume(n, 1.0);
    const auto excess = [&](double k) { return lens_volume(n, k, cfg).volume - half; };
    const RootResult root = bisect_root(excess, 0.0, 2.0, tol);
    const double k = root.root;
    return {static_cast<double>(n), std::acos(0.5 * k), k, root.f_root, Method::oracle};
}

}  // namespace goat
