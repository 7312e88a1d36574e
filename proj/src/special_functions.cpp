#include "goat/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "goat/errors.hpp"

namespace goat {

namespace {

constexpr int kGaussOrder = 12;

struct GaussRule {
    std::array<double, kGaussOrder> nodes{};
    std::array<double, kGaussOrder> weights{};
};

// Legendre nodes on [-1, 1] by Newton iteration from the Chebyshev-like guess.
GaussRule make_gauss_rule() {
    GaussRule rule;
    constexpr int n = kGaussOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    const GaussRule& rule = gauss_rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < kGaussOrder; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Adaptive {
    const std::function<double(double)>& f;
    double tol_per_length;
    int max_depth;
    // Relative accuracy at which f itself can be evaluated.
    double rel_floor = 64.0 * kEps;

    double refine(double a, double b, double whole, int depth) const {
        const double mid = 0.5 * (a + b);
        const double left = gauss_panel(f, a, mid);
        const double right = gauss_panel(f, mid, b);
        const double fine = left + right;
        const double allowed = std::max(tol_per_length * (b - a), rel_floor * std::abs(fine));
        if (std::abs(fine - whole) <= allowed) return fine;
        if (depth >= max_depth) {
            throw ConvergenceError("quadrature did not converge on [" + std::to_string(a) + ", " +
                                   std::to_string(b) + "] within " + std::to_string(max_depth) +
                                   " subdivisions");
        }
        return refine(a, mid, left, depth + 1) + refine(mid, b, right, depth + 1);
    }
};

double integrate_panels(const std::function<double(double)>& f, std::span<const double> breakpoints,
                        const QuadratureConfig& cfg, double rel_floor) {
    cfg.validate();
    if (breakpoints.size() < 2) return 0.0;
    const double span = std::abs(breakpoints.back() - breakpoints.front());
    if (span == 0.0) return 0.0;
    const Adaptive adaptive{f, cfg.abs_tol / span, cfg.max_subdivisions, rel_floor};
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double lo = breakpoints[i];
        const double hi = breakpoints[i + 1];
        if (lo == hi) continue;
        total += adaptive.refine(lo, hi, gauss_panel(f, lo, hi), 0);
    }
    return total;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("QuadratureConfig: abs_tol must be positive");
    if (max_subdivisions < 1) throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
}

double gamma(double x) {
    if (!(x > 0.0)) throw DomainError("gamma: argument must be positive, got " + std::to_string(x));
    return std::tgamma(x);
}

double ball_volume(double n, double r) {
    if (!(n >= 0.0)) throw DomainError("ball_volume: dimension must be >= 0");
    if (!(r >= 0.0)) throw DomainError("ball_volume: radius must be >= 0");
    if (n == 0.0) return 1.0;
    // Integer dimensions use the exact power so that V_1(r) = 2r to the last bit.
    const double rn = (n == std::floor(n)) ? std::pow(r, static_cast<int>(n)) : std::pow(r, n);
    return std::pow(std::numbers::pi, 0.5 * n) / gamma(0.5 * n + 1.0) * rn;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
    cfg.validate();
    if (a == b) return 0.0;
    const Adaptive adaptive{f, cfg.abs_tol / std::abs(b - a), cfg.max_subdivisions};
    return adaptive.refine(a, b, gauss_panel(f, a, b), 0);
}

double integrate(const std::function<double(double)>& f, std::span<const double> breakpoints,
                 const QuadratureConfig& cfg) {
    return integrate_panels(f, breakpoints, cfg, 64.0 * kEps);
}

double cos_power_integral(double n, double a, double b, const QuadratureConfig& cfg) {
    return scaled_cos_power_integral(n, 1.0, a, b, cfg);
}

double scaled_cos_power_integral(double n, double factor, double a, double b, const QuadratureConfig& cfg) {
    if (!(n >= 0.0)) throw DomainError("cos_power_integral: exponent must be >= 0");
    if (!(factor >= 0.0) || !std::isfinite(factor)) throw DomainError("cos_power_integral: bad scale factor");
    if (!(a >= 0.0) || !(b <= kHalfPi) || !(a <= b)) {
        throw DomainError("cos_power_integral: need 0 <= a <= b <= pi/2, got [" + std::to_string(a) +
                          ", " + std::to_string(b) + "]");
    }
    cfg.validate();
    if (n == 0.0) return b - a;
    if (a == b) return 0.0;

    // Width of the layer at a where (cos theta)^n falls by O(1).
    const double layer = 0.25 / (1.0 + n * std::tan(a) + std::sqrt(n));
    std::vector<double> thetas{a};
    for (double width = layer; a + width < b; width *= 2.0) thetas.push_back(a + width);
    thetas.push_back(b);

    // theta = pi/2 - u^2, d theta = -2u du, cos(theta) = sin(u^2).
    std::vector<double> us(thetas.size());
    std::transform(thetas.rbegin(), thetas.rend(), us.begin(),
                   [](double theta) { return std::sqrt(std::max(0.0, kHalfPi - theta)); });
    const auto integrand = [n, factor](double u) { return 2.0 * u * std::pow(factor * std::sin(u * u), n); };
    // A relative error eps in sin(u^2) becomes n * eps in the integrand.
    return integrate_panels(integrand, us, cfg, 64.0 * kEps * std::max(1.0, n));
}

}  // namespace goat
