#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "winding/errors.hpp"
#include "winding/limit_laws.hpp"
#include "winding/stats.hpp"

using namespace winding;

namespace {

// Rejection sampling from a density bounded by `peak` on [lo, hi].
std::vector<double> rejection_sample(double (*density)(double), double lo, double hi, double peak, std::size_t n,
                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(lo, hi);
    std::uniform_real_distribution<double> uy(0.0, peak);
    std::vector<double> out;
    out.reserve(n);
    while (out.size() < n) {
        const double x = ux(rng);
        if (uy(rng) <= density(x)) out.push_back(x);
    }
    return out;
}

double mean_l2(double (*density)(double), double lo, double hi, double peak, std::size_t n, int reps) {
    double total = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto xs = rejection_sample(density, lo, hi, peak, n, 1000 + r);
        total += l2_error(make_histogram(xs, 100, lo, hi), density);
    }
    return total / reps;
}

}  // namespace

TEST_CASE("histogram examples") {
    const std::vector<double> xs{0.1, 0.2, 0.6, 1.0, 1.5, -0.1};
    const auto h = make_histogram(xs, 2, 0.0, 1.0);
    REQUIRE(h.n_bins() == 2);
    CHECK(h.edges == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(h.densities[0] == doctest::Approx(2.0 / 6.0 / 0.5));
    CHECK(h.densities[1] == doctest::Approx(2.0 / 6.0 / 0.5));
    CHECK(h.clipped_fraction == doctest::Approx(2.0 / 6.0));
    CHECK(h.n_samples == 6);
    CHECK(h.center(1) == 0.75);

    const std::vector<double> one{0.5};
    CHECK(make_histogram(one, 4, 0.0, 2.0).densities == std::vector<double>{0.0, 2.0, 0.0, 0.0});

    CHECK_THROWS_AS(make_histogram(std::vector<double>{}, 10, 0.0, 1.0), EmptyInput);
    CHECK_THROWS_AS(make_histogram(one, 0, 0.0, 1.0), ConfigError);
    CHECK_THROWS_AS(make_histogram(one, 10, 1.0, 1.0), ConfigError);
}

TEST_CASE("histogram mass equals the unclipped fraction") {
    std::mt19937_64 rng(5);
    std::cauchy_distribution<double> c;
    std::vector<double> xs(20000);
    for (auto& x : xs) x = c(rng);
    for (std::size_t bins : {1u, 7u, 100u, 1000u}) {
        const auto h = make_histogram(xs, bins, -10.0, 10.0);
        double mass = 0.0;
        for (std::size_t i = 0; i < h.n_bins(); ++i) mass += h.densities[i] * h.width(i);
        CHECK(mass == doctest::Approx(1.0 - h.clipped_fraction).epsilon(1e-12));
    }
}

TEST_CASE("large normal sample matches the density bin by bin") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> nd;
    std::vector<double> xs(1000000);
    for (auto& x : xs) x = nd(rng);
    const auto h = make_histogram(xs, 100, -6.0, 6.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < h.n_bins(); ++i)
        worst = std::max(worst, std::abs(h.densities[i] - pdf_std_normal(h.center(i))));
    CHECK(worst < 0.01);
}

TEST_CASE("l2 error examples") {
    const std::vector<double> xs{0.25, 0.75};
    const auto h = make_histogram(xs, 2, 0.0, 1.0);
    CHECK(l2_error(h, [](double) { return 1.0; }) == doctest::Approx(0.0));
    CHECK(l2_error(h, [](double) { return 0.0; }) == doctest::Approx(1.0));
    CHECK(l2_error(h, [](double) { return 3.0; }) == doctest::Approx(2.0));
}

TEST_CASE("ks distance examples") {
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_distance(std::vector<double>{0.5}, uniform) == doctest::Approx(0.5));
    CHECK(ks_distance(std::vector<double>{-1.0, -2.0}, uniform) == doctest::Approx(1.0));
    CHECK(ks_distance(std::vector<double>{0.25, 0.75}, uniform) == doctest::Approx(0.25));
    CHECK_THROWS_AS(ks_distance(std::vector<double>{}, uniform), EmptyInput);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u;
    std::vector<double> xs(100000);
    for (auto& x : xs) x = u(rng);
    CHECK(ks_distance(xs, uniform) < 1.63 / std::sqrt(100000.0));

    auto shuffled = xs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(ks_distance(shuffled, uniform) == ks_distance(xs, uniform));
    CHECK(l2_error(make_histogram(shuffled, 50, 0.0, 1.0), uniform) ==
          l2_error(make_histogram(xs, 50, 0.0, 1.0), uniform));
}

TEST_CASE("l2 error of exact samples halves when n quadruples") {
    const double normal_ratio = mean_l2(pdf_std_normal, -6.0, 6.0, 0.4, 1000, 40) /
                                mean_l2(pdf_std_normal, -6.0, 6.0, 0.4, 4000, 40);
    CHECK(normal_ratio >= 1.5);
    CHECK(normal_ratio <= 3.0);
    const double disk_ratio =
        mean_l2(pdf_disk, 0.0, 5.0, 1.6, 1000, 40) / mean_l2(pdf_disk, 0.0, 5.0, 1.6, 4000, 40);
    CHECK(disk_ratio >= 1.5);
    CHECK(disk_ratio <= 3.0);
}

TEST_CASE("validate on exact point-law samples") {
    // 1/Z^2 with Z standard normal follows the point law.
    const PointVortex law{1.0, 1.0};
    const double t = 1e6;
    const double scale = normalizer(law, t).scale;
    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd;
    std::vector<double> theta(200000);
    for (auto& th : theta) {
        const double z = nd(rng);
        th = scale / (z * z);
    }
    const auto rep = validate(theta, law, t);
    CHECK(rep.law == "point");
    CHECK(rep.geometry == "point");
    CHECK(rep.beta == 1.0);
    CHECK(rep.n_samples == theta.size());
    CHECK(rep.bins == 100);
    CHECK(rep.normalizer_scale == scale);
    CHECK(rep.clipped_fraction == doctest::Approx(1.0 - cdf_point(20.0)).epsilon(0.02));
    CHECK(rep.ks_distance < 0.005);
    CHECK(rep.sample_median == doctest::Approx(2.19810933831773).epsilon(0.02));
    CHECK(rep.l2_error < 0.05);

    const auto again = validate(theta, law, t);
    CHECK(again.l2_error == rep.l2_error);
    CHECK(again.ks_distance == rep.ks_distance);

    CHECK_THROWS_AS(validate(std::vector<double>{}, law, t), EmptyInput);
    CHECK_THROWS_AS(validate(theta, law, 0.1), NormalizerUndefined);
}

TEST_CASE("validate reports moments of the normalized sample") {
    const AnnulusGauss law{1.0, 0.5, 2.0};
    const double t = 20.0;
    const auto n = normalizer(law, t);
    const std::vector<double> theta{n.shift - n.scale, n.shift, n.shift + 2.0 * n.scale};
    const auto rep = validate(theta, law, t, 10);
    CHECK(rep.sample_mean == doctest::Approx(1.0 / 3.0));
    CHECK(rep.sample_variance == doctest::Approx((16.0 / 9.0 + 1.0 / 9.0 + 25.0 / 9.0) / 2.0));
    CHECK(rep.sample_median == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.normalizer_shift == n.shift);
    CHECK(rep.range_low == -6.0);
    CHECK(rep.range_high == 6.0);
}
