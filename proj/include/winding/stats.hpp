#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "winding/limit_laws.hpp"

namespace winding {

// Equal-width density histogram. Samples outside [edges.front(), edges.back()]
// are counted in clipped_fraction, so sum(density * width) = 1 - clipped_fraction.
struct Histogram {
    std::vector<double> edges;
    std::vector<double> densities;
    std::size_t n_samples = 0;
    double clipped_fraction = 0.0;

    std::size_t n_bins() const { return densities.size(); }
    double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
    double center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
};

// Throws EmptyInput for no samples, ConfigError for a bad bin count or range.
Histogram make_histogram(std::span<const double> samples, std::size_t n_bins, double low, double high);

// sqrt(sum_i (density_i - pdf(center_i))^2 * width_i)
double l2_error(const Histogram& hist, const std::function<double(double)>& pdf);

// One-sample Kolmogorov-Smirnov statistic. Throws EmptyInput.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);

struct ValidationReport {
    std::string geometry;
    std::string law;
    double beta = 0.0;
    double t = 0.0;
    std::size_t n_samples = 0;
    double normalizer_scale = 1.0;
    double normalizer_shift = 0.0;
    double l2_error = 0.0;
    double ks_distance = 0.0;
    double sample_mean = 0.0;
    double sample_variance = 0.0;
    double sample_median = 0.0;
    double clipped_fraction = 0.0;
    double range_low = 0.0;
    double range_high = 0.0;
    std::size_t bins = 0;
};

// Normalizes raw winding angles for `law` at time t, histograms them over the
// law's default range and compares to its pdf (L2) and cdf (KS). Moments and
// median refer to the normalized values. Propagates NormalizerUndefined.
ValidationReport validate(std::span<const double> samples, const LimitLaw& law, double t,
                          std::size_t bins = 100);

}  // namespace winding
