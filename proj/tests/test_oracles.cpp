#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "winding/errors.hpp"
#include "winding/limit_laws.hpp"
#include "winding/oracles.hpp"

using namespace winding;

namespace {

const double kPi = std::numbers::pi;

double point_limit(double theta, double t, double r0, double beta) {
    const auto n = normalizer(PointVortex{beta, r0}, t);
    return pdf_point(n(theta)) / n.scale;
}

double disk_limit(double theta, double t, double a, double beta) {
    const auto n = normalizer(DiskVortex{beta, a}, t);
    return pdf_disk(n(theta)) / n.scale;
}

}  // namespace

TEST_CASE("complex order: values and branch") {
    const auto k = complex_order(0.02, 2.0);
    CHECK(k.real() == doctest::Approx(0.142130221891761).epsilon(1e-13));
    CHECK(k.imag() == doctest::Approx(0.140716026006284).epsilon(1e-13));
    CHECK(complex_order(0.0, 3.0) == std::complex<double>(0.0, 0.0));
    CHECK(complex_order(-2.5, 0.0) == std::complex<double>(2.5, 0.0));

    for (double beta : {0.0, 0.5, 3.0}) {
        for (double mu = -50.0; mu <= 50.0; mu += 0.37) {
            const auto kp = complex_order(mu, beta);
            const auto km = complex_order(-mu, beta);
            REQUIRE(kp.real() >= 0.0);
            REQUIRE(kp.real() >= std::abs(mu) * (1.0 - 1e-15));
            REQUIRE(km == std::conj(kp));
            const auto sq = kp * kp;
            REQUIRE(std::abs(sq - std::complex<double>(mu * mu, beta * mu)) <= 1e-12 * (mu * mu + beta * std::abs(mu)));
        }
    }
}

TEST_CASE("point quadrature: reference values") {
    CHECK(point_density_quadrature(10.0, 1e4, 1.0, 1.0) == doctest::Approx(0.0222266548095747).epsilon(1e-8));
    CHECK(point_density_quadrature(-2.0, 1e4, 1.0, 1.0) == doctest::Approx(0.0031508192101442).epsilon(1e-7));
    CHECK(point_density_quadrature(3.0, 1e4, 1.0, 0.0) == doctest::Approx(0.0467674928511674).epsilon(1e-8));
}

TEST_CASE("point quadrature without drift is Cauchy") {
    for (double t : {1e4, 1e8}) {
        const double A = 0.5 * std::log(4.0 * t / std::exp(kEulerGamma));
        for (double theta : {0.0, 1.0, -3.0, 25.0}) {
            const double cauchy = A / (kPi * (A * A + theta * theta));
            CHECK(point_density_quadrature(theta, t, 1.0, 0.0) == doctest::Approx(cauchy).epsilon(1e-8));
        }
    }
}

TEST_CASE("disk quadrature: reference values and the drift-free sech form") {
    CHECK(disk_density_quadrature(50.0, 1e4, 0.1, 0.1, 3.0) ==
          doctest::Approx(0.00911886841069394).epsilon(1e-8));
    CHECK(disk_density_quadrature(50.0, 1e4, 0.5, 0.1, 3.0) ==
          doctest::Approx(0.00855548180920676).epsilon(1e-8));
    CHECK(disk_density_quadrature(2.0, 1e4, 0.1, 0.1, 0.0) ==
          doctest::Approx(0.0646155691295942).epsilon(1e-8));

    // r0 = a: cosh(0) = 1 and the density is (1/M) sech(pi theta / M).
    const double t = 1e8;
    const double M = std::log(4.0 * t / (0.01 * std::exp(2.0 * kEulerGamma)));
    for (double theta : {0.0, 2.0, -7.5, 30.0}) {
        CHECK(disk_density_quadrature(theta, t, 0.1, 0.1, 0.0) ==
              doctest::Approx(1.0 / (M * std::cosh(kPi * theta / M))).epsilon(1e-8));
    }
}

TEST_CASE("disk quadrature density integrates to one") {
    // Exponential tails on both sides; the interval covers mass to well below 1e-12.
    std::vector<double> breaks;
    for (double th = -300.0; th <= 6000.0; th += 100.0) breaks.push_back(th);
    auto density = [](double theta) { return disk_density_quadrature(theta, 1e4, 0.1, 0.1, 3.0); };
    const double mass = integrate_adaptive<double>(density, std::span<const double>(breaks), 1e-10, 0.0, 2000).value;
    CHECK(std::abs(mass - 1.0) <= 1e-9);
}

TEST_CASE("oracles approach their limit laws as t grows") {
    double previous_point = 1e300;
    double previous_disk = 1e300;
    for (double t : {1e4, 1e8, 1e16}) {
        double point_gap = 0.0;
        double disk_gap = 0.0;
        const double sp = normalizer(PointVortex{1.0, 1.0}, t).scale;
        const double sd = normalizer(DiskVortex{3.0, 0.1}, t).scale;
        for (double x : {0.5, 1.0, 3.0}) {
            const double lp = point_limit(x * sp, t, 1.0, 1.0);
            point_gap = std::max(point_gap, std::abs(point_density_quadrature(x * sp, t, 1.0, 1.0) - lp) / lp);
        }
        for (double x : {0.2, 0.5, 1.5}) {
            const double ld = disk_limit(x * sd, t, 0.1, 3.0);
            disk_gap = std::max(disk_gap, std::abs(disk_density_quadrature(x * sd, t, 0.1, 0.1, 3.0) - ld) / ld);
        }
        CHECK(point_gap < previous_point);
        CHECK(disk_gap < previous_disk);
        previous_point = point_gap;
        previous_disk = disk_gap;
    }
    CHECK(previous_point < 0.05);
    CHECK(previous_disk < 0.05);
}

TEST_CASE("oracle preconditions") {
    CHECK_THROWS_AS(point_density_quadrature(1.0, 0.4, 1.0, 1.0), ConfigError);
    CHECK_THROWS_AS(point_density_quadrature(1.0, 1e4, 0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(point_density_quadrature(1.0, 1e4, 1.0, -1.0), ConfigError);
    CHECK_THROWS_AS(disk_density_quadrature(1.0, 1e4, 0.05, 0.1, 1.0), ConfigError);
    CHECK_THROWS_AS(disk_density_quadrature(1.0, 0.001, 0.1, 0.1, 1.0), ConfigError);
    QuadratureSpec bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(point_density_quadrature(1.0, 1e4, 1.0, 1.0, bad), ConfigError);
    QuadratureSpec starved;
    starved.max_subdivisions = 0;
    starved.abs_tol = 1e-300;
    starved.rel_tol = 1e-300;
    CHECK_THROWS_AS(point_density_quadrature(1.0, 1e4, 1.0, 1.0, starved), QuadratureFailure);
}

TEST_CASE("annulus eigenvalue") {
    const double a = 0.5;
    const double b = 2.0;
    const double ks[] = {0.05, 0.02, 0.01};
    const double reference[] = {0.0429876210065196, 0.0171968339018023, 0.00859854452381662};
    double previous_ratio_gap = 1.0;
    double previous_lambda = 1e300;
    for (int i = 0; i < 3; ++i) {
        const double lambda = annulus_lead_eigenvalue(a, b, ks[i]);
        CHECK(lambda == doctest::Approx(reference[i]).epsilon(1e-10));
        CHECK(lambda < previous_lambda);
        const double scale = std::abs(bessel_derivative_cross(lambda * 1.01, a, b, ks[i]));
        CHECK(std::abs(bessel_derivative_cross(lambda, a, b, ks[i])) < 1e-8 * scale);
        const double ratio = lambda * lambda * (b * b - a * a) / (2.0 * ks[i] * ks[i] * std::log(b / a));
        CHECK(std::abs(ratio - 1.0) < previous_ratio_gap);
        previous_ratio_gap = std::abs(ratio - 1.0);
        previous_lambda = lambda;
    }

    CHECK_THROWS_AS(annulus_lead_eigenvalue(a, b, 50.0), BracketNotFound);
    CHECK_THROWS_AS(annulus_lead_eigenvalue(2.0, 0.5, 0.1), ConfigError);
    CHECK_THROWS_AS(annulus_lead_eigenvalue(a, b, 0.0), ConfigError);
}
