#include "winding/stats.hpp"

#include <algorithm>
#include <cmath>

#include "winding/errors.hpp"

namespace winding {

Histogram make_histogram(std::span<const double> samples, std::size_t n_bins, double low, double high) {
    if (samples.empty()) throw EmptyInput("histogram of an empty sample");
    if (n_bins < 1) throw ConfigError("histogram needs at least one bin");
    if (!(low < high)) throw ConfigError("histogram range must satisfy low < high");

    Histogram hist;
    hist.n_samples = samples.size();
    hist.edges.resize(n_bins + 1);
    const double step = (high - low) / static_cast<double>(n_bins);
    for (std::size_t i = 0; i <= n_bins; ++i) hist.edges[i] = low + step * static_cast<double>(i);
    hist.edges.back() = high;

    std::vector<std::size_t> counts(n_bins, 0);
    std::size_t clipped = 0;
    for (double x : samples) {
        if (!(x >= low && x <= high)) {
            ++clipped;
            continue;
        }
        auto bin = static_cast<std::size_t>((x - low) / step);
        bin = std::min(bin, n_bins - 1);
        // Edges are computed, not exact multiples; keep the bin consistent with them.
        if (x < hist.edges[bin]) --bin;
        else if (bin + 1 < n_bins && x >= hist.edges[bin + 1]) ++bin;
        ++counts[bin];
    }

    const double n = static_cast<double>(samples.size());
    hist.clipped_fraction = static_cast<double>(clipped) / n;
    hist.densities.resize(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i)
        hist.densities[i] = static_cast<double>(counts[i]) / (n * hist.width(i));
    return hist;
}

double l2_error(const Histogram& hist, const std::function<double(double)>& pdf) {
    double sum = 0.0;
    for (std::size_t i = 0; i < hist.n_bins(); ++i) {
        const double diff = hist.densities[i] - pdf(hist.center(i));
        sum += diff * diff * hist.width(i);
    }
    return std::sqrt(sum);
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw EmptyInput("KS distance of an empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double F = cdf(sorted[i]);
        const double above = static_cast<double>(i + 1) / n - F;
        const double below = F - static_cast<double>(i) / n;
        sup = std::max({sup, std::abs(above), std::abs(below)});
    }
    return std::min(sup, 1.0);
}

ValidationReport validate(std::span<const double> samples, const LimitLaw& law, double t, std::size_t bins) {
    if (samples.empty()) throw EmptyInput("validation of an empty sample");
    const Normalizer map = normalizer(law, t);
    const auto x = normalize_samples(samples, law, t);
    const auto [low, high] = default_range(law);

    ValidationReport rep;
    rep.law = law_name(law);
    rep.geometry = std::visit(
        [](const auto& l) -> std::string {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, PointVortex> || std::is_same_v<L, PointFree>) return "point";
            else if constexpr (std::is_same_v<L, DiskVortex> || std::is_same_v<L, DiskFree>) return "disk";
            else return "annulus";
        },
        law);
    rep.beta = std::visit(
        [](const auto& l) -> double {
            if constexpr (requires { l.beta; }) return l.beta;
            else return 0.0;
        },
        law);
    rep.t = t;
    rep.n_samples = x.size();
    rep.normalizer_scale = map.scale;
    rep.normalizer_shift = map.shift;
    rep.range_low = low;
    rep.range_high = high;
    rep.bins = bins;

    const Histogram hist = make_histogram(x, bins, low, high);
    rep.l2_error = l2_error(hist, [&](double v) { return pdf(law, v); });
    rep.ks_distance = ks_distance(x, [&](double v) { return cdf(law, v); });
    rep.clipped_fraction = hist.clipped_fraction;

    const double n = static_cast<double>(x.size());
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    rep.sample_mean = mean;
    rep.sample_variance = x.size() > 1 ? ss / (n - 1.0) : 0.0;

    std::vector<double> sorted = x;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    rep.sample_median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return rep;
}

}  // namespace winding
