#include "winding/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "winding/errors.hpp"

namespace winding {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesCutoff = 1e-16;
// Below this the Jacobi-transformed series converges faster than the direct one.
constexpr double kDualSwitch = 0.5;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

[[noreturn]] void undefined(const std::string& law, double t, double threshold) {
    std::ostringstream msg;
    msg.precision(17);
    msg << law << " normalizer undefined at t=" << t << " (requires t > " << threshold << ")";
    throw NormalizerUndefined(msg.str());
}

// log(4t / scale2), requiring a positive result.
double log_normalizer(const std::string& law, double t, double scale2) {
    const double threshold = scale2 / 4.0;
    if (!(t > threshold)) undefined(law, t, threshold);
    return std::log(4.0 * t / scale2);
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(what) + " must be positive");
}

}  // namespace

double pdf_point(double x) {
    if (!(x > 0.0)) return 0.0;
    if (std::isinf(x)) return 0.0;
    return std::exp(-0.5 / x) / (std::sqrt(2.0 * kPi) * x * std::sqrt(x));
}

double cdf_point(double x) {
    if (!(x > 0.0)) return 0.0;
    return std::erfc(1.0 / std::sqrt(2.0 * x));
}

double pdf_disk(double x) { return pdf_disk_series(x, kSeriesCutoff); }

double pdf_disk_series(double x, double cutoff) {
    if (!(x > 0.0)) return 0.0;
    double sum = 0.0;
    double largest = 0.0;
    if (x < kDualSwitch) {
        // Dual series: x^{-3/2} / sqrt(pi) * sum (-1)^n (2n+1) e^{-(2n+1)^2 / (4x)}
        for (long n = 0;; ++n) {
            const double odd = 2.0 * static_cast<double>(n) + 1.0;
            const double magnitude = odd * std::exp(-odd * odd / (4.0 * x));
            if (n > 0 && !(magnitude > cutoff * largest)) break;
            sum += (n % 2 == 0) ? magnitude : -magnitude;
            largest = std::max(largest, std::abs(sum));
        }
        return std::max(0.0, sum / (std::sqrt(kPi) * x * std::sqrt(x)));
    }
    const double c = kPi * kPi * x / 4.0;
    for (long n = 0;; ++n) {
        const double odd = 2.0 * static_cast<double>(n) + 1.0;
        const double magnitude = odd * std::exp(-odd * odd * c);
        if (n > 0 && !(magnitude > cutoff * largest)) break;
        sum += (n % 2 == 0) ? magnitude : -magnitude;
        largest = std::max(largest, std::abs(sum));
    }
    return std::max(0.0, kPi * sum);
}

double cdf_disk(double x) {
    if (!(x > 0.0)) return 0.0;
    if (x < kDualSwitch) {
        // 2 sum (-1)^n erfc((2n+1) / (2 sqrt x))
        double sum = 0.0;
        for (long n = 0;; ++n) {
            const double term = std::erfc((2.0 * static_cast<double>(n) + 1.0) / (2.0 * std::sqrt(x)));
            if (n > 0 && !(term > kSeriesCutoff * 1e-1 * std::abs(sum))) break;
            sum += (n % 2 == 0) ? term : -term;
        }
        return std::clamp(2.0 * sum, 0.0, 1.0);
    }
    // Leibniz: sum (-1)^n 4/((2n+1) pi) = 1, leaving the rapidly decaying tail.
    const double c = kPi * kPi * x / 4.0;
    double tail = 0.0;
    for (long n = 0;; ++n) {
        const double odd = 2.0 * static_cast<double>(n) + 1.0;
        const double magnitude = std::exp(-odd * odd * c) / odd;
        if (magnitude < kSeriesCutoff * 1e-1) break;
        tail += (n % 2 == 0) ? magnitude : -magnitude;
    }
    return std::clamp(1.0 - 4.0 / kPi * tail, 0.0, 1.0);
}

double pdf_std_normal(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi); }

double cdf_std_normal(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double annulus_A(double t, double a, double b) {
    const double gap = b - a;
    if (gap == 0.0) return t / (a * a);
    return 2.0 * t * std::log1p(gap / a) / (gap * (b + a));
}

double pdf_point_free(double x) { return 1.0 / (kPi * (1.0 + x * x)); }

double cdf_point_free(double x) { return 0.5 + std::atan(x) / kPi; }

double pdf_disk_free(double x) { return 0.5 / std::cosh(kPi * std::abs(x) / 2.0); }

double cdf_disk_free(double x) { return 2.0 / kPi * std::atan(std::exp(kPi * x / 2.0)); }

double pdf(const LimitLaw& law, double x) {
    return std::visit(overloaded{
                          [x](const PointVortex&) { return pdf_point(x); },
                          [x](const DiskVortex&) { return pdf_disk(x); },
                          [x](const AnnulusGauss&) { return pdf_std_normal(x); },
                          [x](const PointFree&) { return pdf_point_free(x); },
                          [x](const DiskFree&) { return pdf_disk_free(x); },
                      },
                      law);
}

double cdf(const LimitLaw& law, double x) {
    return std::visit(overloaded{
                          [x](const PointVortex&) { return cdf_point(x); },
                          [x](const DiskVortex&) { return cdf_disk(x); },
                          [x](const AnnulusGauss&) { return cdf_std_normal(x); },
                          [x](const PointFree&) { return cdf_point_free(x); },
                          [x](const DiskFree&) { return cdf_disk_free(x); },
                      },
                      law);
}

std::string law_name(const LimitLaw& law) {
    return std::visit(overloaded{
                          [](const PointVortex&) { return std::string("point"); },
                          [](const DiskVortex&) { return std::string("disk"); },
                          [](const AnnulusGauss&) { return std::string("annulus"); },
                          [](const PointFree&) { return std::string("point-free"); },
                          [](const DiskFree&) { return std::string("disk-free"); },
                      },
                      law);
}

std::pair<double, double> default_range(const LimitLaw& law) {
    return std::visit(overloaded{
                          [](const PointVortex&) { return std::pair{0.0, 20.0}; },
                          [](const DiskVortex&) { return std::pair{0.0, 5.0}; },
                          [](const AnnulusGauss&) { return std::pair{-6.0, 6.0}; },
                          [](const PointFree&) { return std::pair{-10.0, 10.0}; },
                          [](const DiskFree&) { return std::pair{-10.0, 10.0}; },
                      },
                      law);
}

Normalizer normalizer(const LimitLaw& law, double t) {
    const double e_gamma = std::exp(kEulerGamma);
    return std::visit(
        overloaded{
            [&](const PointVortex& p) {
                require_positive(p.beta, "beta");
                require_positive(p.r0, "r0");
                const double L = log_normalizer("point", t, p.r0 * p.r0 * e_gamma);
                return Normalizer{p.beta * L * L / 8.0, 0.0};
            },
            [&](const DiskVortex& d) {
                require_positive(d.beta, "beta");
                require_positive(d.a, "a");
                const double M = log_normalizer("disk", t, d.a * d.a * e_gamma * e_gamma);
                return Normalizer{d.beta * M * M / 4.0, 0.0};
            },
            [&](const AnnulusGauss& g) {
                require_positive(g.a, "a");
                if (!(g.b > g.a)) throw ConfigError("annulus requires b > a");
                if (!(g.beta >= 0.0)) throw ConfigError("beta must be >= 0");
                if (!(t > 0.0)) undefined("annulus", t, 0.0);
                const double A = annulus_A(t, g.a, g.b);
                return Normalizer{std::sqrt(2.0 * A), A * g.beta};
            },
            [&](const PointFree& p) {
                require_positive(p.r0, "r0");
                const double L = log_normalizer("point-free", t,
                                                p.r0 * p.r0 * (p.euler_corrected ? e_gamma : 1.0));
                return Normalizer{L / 2.0, 0.0};
            },
            [&](const DiskFree& d) {
                require_positive(d.a, "a");
                const double L = log_normalizer("disk-free", t,
                                                d.a * d.a * (d.euler_corrected ? e_gamma : 1.0));
                return Normalizer{L / 2.0, 0.0};
            },
        },
        law);
}

std::vector<double> normalize_samples(std::span<const double> samples, const LimitLaw& law, double t) {
    const Normalizer map = normalizer(law, t);
    std::vector<double> out;
    out.reserve(samples.size());
    for (double theta : samples) out.push_back(map(theta));
    return out;
}

}  // namespace winding
