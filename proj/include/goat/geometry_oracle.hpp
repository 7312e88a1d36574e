#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "goat/solution.hpp"
#include "goat/special_functions.hpp"

namespace goat {

/// Region a goat tethered to the fence can reach inside the unit n-ball.
///
/// The field is the unit ball at the origin, the anchor is P = (1, 0, ..., 0)
/// and the tether ball has radius k about P.
struct LensResult {
    int n = 1;
    double k = 0.0;
    double volume = 0.0;
    double abs_error_estimate = 0.0;
};

struct MonteCarloConfig {
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 42;

    void validate() const;
};

/// Intersection volume of the unit n-ball with the radius-k ball centred on its boundary.
///
/// The lens is split at the plane x = 1 - k^2/2 where the two spheres meet.
/// Each side is a cap integrated slice by slice, int V_{n-1}(sqrt(rho^2 - (x-c)^2)) dx,
/// with the substitution x = c + rho cos(phi) to remove the square-root edge.
LensResult lens_volume(int n, double k, const QuadratureConfig& cfg = {});

/// Closed-form area of the unit disk cut by a radius-k circle centred on its rim.
double lens_area_2d(double k);

/// Deterministic random source: mt19937_64 with explicit uniform and normal transforms,
/// so a seed yields the same stream on every platform.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Point uniform in the unit n-ball: normalised Gaussian direction, radius U^(1/n).
std::vector<double> sample_unit_ball(int n, SampleStream& stream);

struct FractionEstimate {
    double fraction = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of lens_volume / ball_volume.
FractionEstimate grazed_fraction_mc(int n, double k, const MonteCarloConfig& mc = {});

/// Tether ratio grazing half the unit n-ball, by bisection on k in [0, 2]
/// against lens_volume. Does not use the Fraser equation.
GoatSolution solve_k_oracle(int n, double tol = 1e-10, const QuadratureConfig& cfg = {});

}  // namespace goat
