#include "winding/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>

#include "winding/errors.hpp"
#include "winding/limit_laws.hpp"

namespace winding {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxOscillationSegments = 50000;
constexpr int kScanSteps = 4096;
constexpr int kScanRefinements = 48;

// Length beyond which the integrand envelope 2 exp(-decay * mu / sqrt 2),
// integrated to infinity and divided by pi, stays under abs_tol / 10.
double envelope_cutoff(double decay, double abs_tol) {
    const double rate = decay / std::numbers::sqrt2;
    const double arg = 20.0 / (kPi * rate * abs_tol);
    return std::max(std::log(std::max(arg, 2.0)) / rate, 1.0 / rate);
}

// Geometric points toward 0 (square-root behaviour of k_mu) merged with a
// half-period grid for the e^{i mu theta} oscillation.
std::vector<double> fourier_breakpoints(double cutoff, double theta) {
    std::vector<double> pts{0.0, cutoff};
    for (double p = cutoff / 2.0; p > cutoff * 1e-14; p /= 2.0) pts.push_back(p);
    const double half_period = kPi / std::max(std::abs(theta), 1e-300);
    const double segments = std::ceil(cutoff / half_period);
    if (segments > 1.0) {
        const auto n = static_cast<std::size_t>(std::min<double>(segments, kMaxOscillationSegments));
        const double h = cutoff / static_cast<double>(n);
        for (std::size_t i = 1; i < n; ++i) pts.push_back(h * static_cast<double>(i));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

template <class F>
double fourier_density(F&& characteristic, double theta, double decay, const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) throw ConfigError("quadrature tolerances must be positive");
    const double cutoff = spec.mu_cutoff > 0.0 ? spec.mu_cutoff : envelope_cutoff(decay, spec.abs_tol);
    const auto pts = fourier_breakpoints(cutoff, theta);
    // Conjugate symmetry of the integrand: W = (1/pi) Re int_0^cutoff.
    // The integrand is divided by pi so abs_tol applies to the density itself.
    auto integrand = [&](double mu) { return characteristic(mu) * std::exp(cplx(0.0, mu * theta)) / kPi; };
    const auto res = integrate_adaptive<cplx>(integrand, std::span<const double>(pts), spec.abs_tol,
                                              spec.rel_tol, spec.max_subdivisions);
    return res.value.real();
}

double bessel_j_prime(double k, double x) {
    return 0.5 * (boost::math::cyl_bessel_j(k - 1.0, x) - boost::math::cyl_bessel_j(k + 1.0, x));
}

double bessel_y_prime(double k, double x) {
    return 0.5 * (boost::math::cyl_neumann(k - 1.0, x) - boost::math::cyl_neumann(k + 1.0, x));
}

}  // namespace

cplx complex_order(double mu, double beta) {
    // std::sqrt is the principal branch, Re >= 0, and respects conj(z) -> conj(sqrt z).
    return std::sqrt(cplx(mu * mu, beta * mu));
}

double point_density_quadrature(double theta, double t, double r0, double beta, const QuadratureSpec& spec) {
    if (!(r0 > 0.0)) throw ConfigError("r0 must be positive");
    if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
    const double threshold = r0 * r0 * std::exp(kEulerGamma) / 4.0;
    if (!(t > threshold)) throw ConfigError("point quadrature requires t > r0^2 e^gamma / 4");
    // (r0 e^{g/2} / (2 sqrt t))^k = exp(-k L / 2)
    const double half_log = 0.5 * std::log(t / threshold);
    auto characteristic = [&](double mu) { return std::exp(-half_log * complex_order(mu, beta)); };
    return fourier_density(characteristic, theta, half_log, spec);
}

double disk_density_quadrature(double theta, double t, double r0, double a, double beta,
                               const QuadratureSpec& spec) {
    if (!(a > 0.0)) throw ConfigError("a must be positive");
    if (!(r0 >= a)) throw ConfigError("disk quadrature requires r0 >= a");
    if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
    const double e2g = std::exp(2.0 * kEulerGamma);
    if (!(t > a * a * e2g / 4.0)) throw ConfigError("disk quadrature requires t > a^2 e^{2 gamma} / 4");
    // half_log = -log(a e^g / (2 sqrt t)), start_log = log(r0 / a)
    const double half_log = 0.5 * std::log(4.0 * t / (a * a * e2g));
    const double start_log = std::log(r0 / a);
    const double decay = half_log - start_log;
    if (!(decay > 0.0)) throw ConfigError("disk quadrature requires t > r0^2 e^{2 gamma} / 4");
    // cosh(k s) / cosh(k h) = (e^{k(s-h)} + e^{-k(s+h)}) / (1 + e^{-2kh}), all exponents decaying.
    auto characteristic = [&](double mu) {
        const cplx k = complex_order(mu, beta);
        return (std::exp(k * (start_log - half_log)) + std::exp(-k * (start_log + half_log))) /
               (1.0 + std::exp(-2.0 * k * half_log));
    };
    QuadratureSpec widened = spec;
    // Two exponentials in the numerator double the envelope.
    if (widened.mu_cutoff <= 0.0) widened.mu_cutoff = envelope_cutoff(decay, spec.abs_tol / 2.0);
    return fourier_density(characteristic, theta, decay, widened);
}

double bessel_derivative_cross(double lambda, double a, double b, double k) {
    const double xa = lambda * a;
    const double xb = lambda * b;
    return bessel_j_prime(k, xa) * bessel_y_prime(k, xb) - bessel_j_prime(k, xb) * bessel_y_prime(k, xa);
}

double annulus_lead_eigenvalue(double a, double b, double k) {
    if (!(a > 0.0) || !(b > a)) throw ConfigError("eigenvalue requires 0 < a < b");
    if (!(k > 0.0)) throw ConfigError("eigenvalue requires real order k > 0");

    const double h = 4.0 * kPi / (b - a) / kScanSteps;
    std::vector<double> grid;
    grid.reserve(kScanSteps + kScanRefinements);
    for (int j = kScanRefinements; j >= 1; --j) grid.push_back(std::ldexp(h, -j));
    for (int i = 1; i <= kScanSteps; ++i) grid.push_back(h * i);

    auto f = [&](double lambda) { return bessel_derivative_cross(lambda, a, b, k); };
    // Y_k overflows near the origin for large k; such points carry no sign.
    auto sample = [&](double lambda) {
        try {
            return f(lambda);
        } catch (const std::overflow_error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    double lo = grid.front();
    double f_lo = sample(lo);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double hi = grid[i];
        const double f_hi = sample(hi);
        if (f_hi == 0.0) return hi;
        if (std::isfinite(f_lo) && std::isfinite(f_hi) && std::signbit(f_lo) != std::signbit(f_hi)) {
            double left = lo;
            double right = hi;
            double f_left = f_lo;
            while (right - left > 1e-12 * left) {
                const double mid = 0.5 * (left + right);
                const double f_mid = f(mid);
                if (f_mid == 0.0) return mid;
                if (std::signbit(f_mid) == std::signbit(f_left)) {
                    left = mid;
                    f_left = f_mid;
                } else {
                    right = mid;
                }
            }
            return 0.5 * (left + right);
        }
        lo = hi;
        f_lo = f_hi;
    }
    throw BracketNotFound("no sign change of the Bessel cross product on (0, 4 pi / (b - a)]");
}

}  // namespace winding
