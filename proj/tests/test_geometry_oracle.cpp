#include <doctest.h>

#include <cmath>
#include <numbers>

#include "goat/errors.hpp"
#include "goat/fraser_solver.hpp"
#include "goat/geometry_oracle.hpp"

using namespace goat;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;

}  // namespace

TEST_CASE("one-dimensional lens is the reachable interval") {
    for (double k : {0.0, 0.25, 0.5, 1.0, 1.5, 1.99, 2.0}) {
        CHECK(std::abs(lens_volume(1, k).volume - k) <= 1e-12);
    }
}

TEST_CASE("empty and full lenses") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(lens_volume(n, 0.0).volume == 0.0);
        CHECK(lens_volume(n, 2.0).volume == ball_volume(n, 1.0));
        CHECK(std::abs(lens_volume(n, 2.0 - 1e-12).volume - ball_volume(n, 1.0)) <= 1e-10);
    }
}

TEST_CASE("symmetric case k = sqrt(2) in the plane") {
    CHECK(std::abs(lens_volume(2, sqrt2).volume - (pi - 1.0)) <= 1e-10);
    CHECK(std::abs(lens_area_2d(sqrt2) - (pi - 1.0)) <= 1e-14);
}

TEST_CASE("closed-form planar lens") {
    CHECK(lens_area_2d(2.0) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(lens_area_2d(0.0) == 0.0);
    CHECK(std::abs(lens_area_2d(1.15872847302) - pi / 2) <= 1e-6);
    CHECK_THROWS_AS(lens_area_2d(-0.1), DomainError);
    CHECK_THROWS_AS(lens_area_2d(2.1), DomainError);
    for (double k : {0.3, 0.9, 1.2, 1.8}) {
        CAPTURE(k);
        CHECK(std::abs(lens_volume(2, k).volume - lens_area_2d(k)) <= 1e-9);
    }
}

TEST_CASE("three-dimensional lens against the two-cap closed form") {
    // Cap of height h on a ball of radius R: pi h^2 (3R - h) / 3.
    const auto cap = [](double radius, double h) { return pi * h * h * (3.0 * radius - h) / 3.0; };
    for (double k : {0.4, 1.0, 1.6}) {
        const double plane = 1.0 - 0.5 * k * k;
        const double expected = cap(1.0, 1.0 - plane) + cap(k, plane - (1.0 - k));
        CHECK(std::abs(lens_volume(3, k).volume - expected) <= 1e-11);
    }
}

TEST_CASE("lens volume is nondecreasing in k") {
    for (int n = 1; n <= 6; ++n) {
        double previous = 0.0;
        for (int i = 0; i <= 80; ++i) {
            const double v = lens_volume(n, 0.025 * i).volume;
            CHECK(v >= previous);
            CHECK(v <= ball_volume(n, 1.0));
            previous = v;
        }
    }
}

TEST_CASE("lens input validation") {
    CHECK_THROWS_AS(lens_volume(0, 1.0), DomainError);
    CHECK_THROWS_AS(lens_volume(2, -0.5), DomainError);
    CHECK_THROWS_AS(lens_volume(2, 2.5), DomainError);
}

TEST_CASE("sampled points lie in the ball") {
    SampleStream stream(1);
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i < 2000; ++i) {
            const auto p = sample_unit_ball(n, stream);
            REQUIRE(p.size() == static_cast<std::size_t>(n));
            double norm2 = 0.0;
            for (double x : p) norm2 += x * x;
            CHECK(norm2 <= 1.0 + 1e-15);
        }
    }
}

TEST_CASE("one-dimensional samples are centred") {
    SampleStream stream(2024);
    constexpr int kCount = 100000;
    double sum = 0.0;
    for (int i = 0; i < kCount; ++i) sum += sample_unit_ball(1, stream)[0];
    const double sigma = std::sqrt(1.0 / 3.0);
    CHECK(std::abs(sum / kCount) <= 4.0 * sigma / std::sqrt(kCount));
}

TEST_CASE("planar samples follow area scaling") {
    SampleStream stream(77);
    constexpr int kCount = 100000;
    int inner = 0;
    for (int i = 0; i < kCount; ++i) {
        const auto p = sample_unit_ball(2, stream);
        if (p[0] * p[0] + p[1] * p[1] <= 0.25) ++inner;
    }
    const double f = static_cast<double>(inner) / kCount;
    CHECK(std::abs(f - 0.25) <= 4.0 * std::sqrt(0.25 * 0.75 / kCount));
}

TEST_CASE("uniform draws stay in [0, 1)") {
    SampleStream stream(5);
    for (int i = 0; i < 10000; ++i) {
        const double u = stream.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("Monte Carlo half-grazing checks") {
    const MonteCarloConfig mc{1'000'000, 42};
    const FractionEstimate one = grazed_fraction_mc(1, 1.0, mc);
    CHECK(std::abs(one.fraction - 0.5) <= 4.0 * one.std_error);
    const FractionEstimate two = grazed_fraction_mc(2, 1.158728, mc);
    CHECK(std::abs(two.fraction - 0.5) <= 4.0 * two.std_error);
    for (int n = 1; n <= 4; ++n) {
        const FractionEstimate all = grazed_fraction_mc(n, 2.0, MonteCarloConfig{1000, 3});
        CHECK(all.fraction == 1.0);
        CHECK(all.std_error == 0.0);
    }
}

TEST_CASE("Monte Carlo agrees with lens quadrature") {
    const MonteCarloConfig mc{200'000, 42};
    for (int n = 1; n <= 3; ++n) {
        for (double k : {0.7, 1.0, 1.3}) {
            CAPTURE(n);
            CAPTURE(k);
            const FractionEstimate est = grazed_fraction_mc(n, k, mc);
            const double exact = lens_volume(n, k).volume / ball_volume(n, 1.0);
            CHECK(std::abs(est.fraction - exact) <= 4.0 * est.std_error);
        }
    }
}

TEST_CASE("Monte Carlo is deterministic for a fixed seed") {
    const MonteCarloConfig mc{50'000, 9};
    const FractionEstimate a = grazed_fraction_mc(3, 1.1, mc);
    const FractionEstimate b = grazed_fraction_mc(3, 1.1, mc);
    CHECK(a.fraction == b.fraction);
    CHECK(a.std_error == b.std_error);
    const FractionEstimate c = grazed_fraction_mc(3, 1.1, MonteCarloConfig{50'000, 10});
    CHECK(a.fraction != c.fraction);
    CHECK_THROWS_AS(grazed_fraction_mc(2, 1.0, MonteCarloConfig{0, 1}), DomainError);
}

TEST_CASE("oracle solutions") {
    const GoatSolution one = solve_k_oracle(1, 1e-10);
    CHECK(one.method == Method::oracle);
    CHECK(std::abs(one.k - 1.0) <= 1e-10);
    CHECK(std::abs(solve_k_oracle(2, 1e-10).k - 1.15872847302) <= 1e-8);
    const GoatSolution three = solve_k_oracle(3, 1e-10);
    CHECK(std::abs(three.k - solve_k(3.0).k) <= 1e-8);
    CHECK(std::abs(three.beta - std::acos(0.5 * three.k)) <= 1e-15);
}

TEST_CASE("oracle regression values") {
    // Independent lens-volume root finding in double precision.
    const double expected[] = {1.0, 1.1587284730181, 1.2285448637352, 1.2680792566786, 1.2935979963602,
                               1.3114618190304};
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(std::abs(solve_k_oracle(n, 1e-12).k - expected[n - 1]) <= 1e-9);
    }
}

TEST_CASE("oracle and Fraser equation agree for n = 1..6") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(std::abs(solve_k_oracle(n, 1e-10).k - solve_k(n).k) <= 1e-8);
    }
}
