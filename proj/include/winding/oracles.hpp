#pragma once

// Numerical oracles built from the separated Fokker-Planck solution:
// the complex Bessel order k_mu = sqrt(mu^2 + i beta mu), Fourier inversion
// of the large-time winding characteristic functions, and the lowest
// reflecting-annulus eigenvalue on the real-order slice.

#include <complex>

#include "winding/quadrature.hpp"

namespace winding {

// Branch with nonnegative real part; k_{-mu} = conj(k_mu).
std::complex<double> complex_order(double mu, double beta);

// W(theta, t) = (1/2pi) int (r0 e^{g/2} / (2 sqrt t))^{k_mu} e^{i mu theta} dmu.
// Requires t > r0^2 e^g / 4 (ConfigError otherwise); throws QuadratureFailure
// when the subdivision budget runs out.
double point_density_quadrature(double theta, double t, double r0, double beta,
                                const QuadratureSpec& spec = {});

// W(theta, t) = (1/2pi) int cosh(k_mu log(r0/a)) sech(k_mu log(a e^g / (2 sqrt t))) e^{i mu theta} dmu.
// Requires r0 >= a and t large enough that the integrand decays, i.e.
// t > r0^2 e^{2g} / 4 (which implies t > a^2 e^{2g} / 4).
double disk_density_quadrature(double theta, double t, double r0, double a, double beta,
                               const QuadratureSpec& spec = {});

// J'_k(lambda a) Y'_k(lambda b) - J'_k(lambda b) Y'_k(lambda a), with
// J'_k = (J_{k-1} - J_{k+1}) / 2 and likewise for Y.
double bessel_derivative_cross(double lambda, double a, double b, double k);

// Smallest lambda > 0 zeroing bessel_derivative_cross, for real order k > 0.
// Scans (0, 4 pi / (b - a)] on 4096 uniform steps, preceded by a geometric
// refinement below the first step, then bisects to 1e-12 relative.
// Throws BracketNotFound when no sign change is seen.
double annulus_lead_eigenvalue(double a, double b, double k);

}  // namespace winding
