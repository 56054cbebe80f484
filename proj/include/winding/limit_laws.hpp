#pragma once

// Asymptotic winding-angle laws and the time-dependent normalizers that map a
// raw winding angle onto the variable converging to each law.
//
//   point vortex   8 theta / (beta L^2)          -> x^{-3/2} e^{-1/(2x)} / sqrt(2 pi)
//   disk vortex    4 theta / (beta M^2)          -> -(pi/2) theta_2'(pi/2, e^{-pi^2 x})
//   annulus        (theta - A beta) / sqrt(2 A)  -> N(0, 1)
//   point, beta=0  2 theta / L                   -> standard Cauchy
//   disk, beta=0   2 theta / L_a                 -> (1/2) sech(pi x / 2)
//
// with L = log(4t / (r0^2 e^g)), M = log(4t / (a^2 e^{2g})), L_a = log(4t / (a^2 e^g)),
// A = 2t log(b/a) / (b^2 - a^2) and g the Euler-Mascheroni constant.

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace winding {

inline constexpr double kEulerGamma = 0.57721566490153286;

struct PointVortex {
    double beta;
    double r0;
};
struct DiskVortex {
    double beta;
    double a;
};
struct AnnulusGauss {
    double beta;
    double a;
    double b;
};
// euler_corrected = false drops the e^g factor inside the logarithm, giving
// the older normalizers log(4t/r0^2) and log(4t/a^2).
struct PointFree {
    double r0;
    bool euler_corrected = true;
};
struct DiskFree {
    double a;
    bool euler_corrected = true;
};

using LimitLaw = std::variant<PointVortex, DiskVortex, AnnulusGauss, PointFree, DiskFree>;

// x = (theta - shift) / scale
struct Normalizer {
    double scale = 1.0;
    double shift = 0.0;

    double operator()(double theta) const { return (theta - shift) / scale; }
};

double pdf_point(double x);
double cdf_point(double x);

// Alternating theta series, truncated once a term drops below 1e-16 of the
// largest partial sum seen; below x = 0.5 its Jacobi dual
// x^{-3/2} pi^{-1/2} sum (-1)^n (2n+1) e^{-(2n+1)^2/(4x)} is summed instead.
// Clamped at zero.
double pdf_disk(double x);
// Same series with an explicit relative truncation threshold.
double pdf_disk_series(double x, double cutoff);
double cdf_disk(double x);

double pdf_std_normal(double z);
double cdf_std_normal(double z);

// A(t) = 2t log(b/a) / (b^2 - a^2); the b -> a limit t/a^2 is used when the
// radii coincide to rounding.
double annulus_A(double t, double a, double b);

double pdf_point_free(double x);  // standard Cauchy
double cdf_point_free(double x);
double pdf_disk_free(double x);   // hyperbolic secant
double cdf_disk_free(double x);

double pdf(const LimitLaw& law, double x);
double cdf(const LimitLaw& law, double x);

// "point", "disk", "annulus", "point-free", "disk-free".
std::string law_name(const LimitLaw& law);

// Histogram window used when validating against the law.
std::pair<double, double> default_range(const LimitLaw& law);

// Throws NormalizerUndefined when t is at or below the law's threshold and
// ConfigError for parameters outside the law's domain.
Normalizer normalizer(const LimitLaw& law, double t);

std::vector<double> normalize_samples(std::span<const double> samples, const LimitLaw& law, double t);

}  // namespace winding
