#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/distributions/gamma.hpp>

#include "winding/quadrature.hpp"

namespace winding::testing {

// Chi-square(1) density, i.e. Gamma(shape 1/2, scale 2).
inline double gamma_pdf_half_half(double y) {
    return boost::math::pdf(boost::math::gamma_distribution<double>(0.5, 2.0), y);
}

// int_0^inf f(x) dx through x = e^u over u in [-60, 60].
inline double integrate_half_line(const std::function<double(double)>& f, double abs_tol = 1e-12) {
    std::vector<double> breaks;
    for (int u = -60; u <= 60; ++u) breaks.push_back(u);
    auto g = [&](double u) {
        const double x = std::exp(u);
        return f(x) * x;
    };
    return integrate_adaptive<double>(g, std::span<const double>(breaks), abs_tol, 0.0, 100000).value;
}

// int_{-inf}^{inf} f(x) dx as two half lines.
inline double integrate_line(const std::function<double(double)>& f, double abs_tol = 1e-12) {
    return integrate_half_line(f, abs_tol / 2) +
           integrate_half_line([&](double x) { return f(-x); }, abs_tol / 2);
}

}  // namespace winding::testing
