#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration over a finite interval
// split at caller-supplied breakpoints. Works for real and complex integrands.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <span>
#include <sstream>
#include <vector>

#include "winding/errors.hpp"

namespace winding {

struct QuadratureSpec {
    // Upper end of the truncated integration range; 0 selects it from the
    // integrand's decay envelope.
    double mu_cutoff = 0.0;
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::size_t max_subdivisions = 200000;
};

template <class T>
struct QuadratureResult {
    T value{};
    double error = 0.0;
    std::size_t intervals = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Segment {
    double lo;
    double hi;
    T value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class T, class F>
Segment<T> kronrod15(F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const T mid = f(center);
    T kronrod = kKronrodWeights[7] * mid;
    T gauss = kGaussWeights[3] * mid;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const T pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return {lo, hi, half * kronrod, std::abs(half * (kronrod - gauss))};
}

}  // namespace detail

// Integrates f over [breakpoints.front(), breakpoints.back()]. Throws
// QuadratureFailure when max_subdivisions bisections do not reach
// max(abs_tol, rel_tol * |value|).
template <class T, class F>
QuadratureResult<T> integrate_adaptive(F&& f, std::span<const double> breakpoints, double abs_tol,
                                       double rel_tol, std::size_t max_subdivisions) {
    std::priority_queue<detail::Segment<T>> heap;
    T total{};
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] > breakpoints[i])) continue;
        auto seg = detail::kronrod15<T>(f, breakpoints[i], breakpoints[i + 1]);
        total += seg.value;
        total_error += seg.error;
        heap.push(seg);
    }

    std::size_t splits = 0;
    while (!heap.empty() && total_error > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (splits >= max_subdivisions) {
            std::ostringstream msg;
            msg << "quadrature did not converge after " << splits << " subdivisions (error estimate "
                << total_error << ")";
            throw QuadratureFailure(msg.str());
        }
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        auto left = detail::kronrod15<T>(f, worst.lo, mid);
        auto right = detail::kronrod15<T>(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    // Re-sum to shed the drift of the running updates.
    QuadratureResult<T> result;
    result.intervals = heap.size();
    while (!heap.empty()) {
        result.value += heap.top().value;
        result.error += heap.top().error;
        heap.pop();
    }
    return result;
}

template <class T, class F>
QuadratureResult<T> integrate_adaptive(F&& f, double lo, double hi, double abs_tol, double rel_tol,
                                       std::size_t max_subdivisions = 200000) {
    const std::array<double, 2> ends{lo, hi};
    return integrate_adaptive<T>(std::forward<F>(f), std::span<const double>(ends), abs_tol, rel_tol,
                                 max_subdivisions);
}

}  // namespace winding
