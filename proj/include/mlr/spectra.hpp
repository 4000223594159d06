#pragma once

#include <cmath>
#include <stdexcept>

#include "mlr/ml.hpp"
#include "mlr/quadrature.hpp"

namespace mlr {

enum class SpectralDomain { frequency, relaxation_time };

// Frequency spectrum of e_alpha:
//   K_alpha(r) = (1/pi) r^(a-1) sin(a pi) / (r^(2a) + 2 r^a cos(a pi) + 1).
// Non-negative on (0, inf) and normalized to unit mass; degenerates to a
// Dirac delta at r = 1 for alpha = 1, which is not representable here.
inline double k_alpha(const Order& order, double r) {
    const double a = order.alpha();
    if (!(a < 1.0))
        throw std::domain_error("k_alpha: degenerate Dirac spectrum at alpha = 1");
    if (!(r > 0.0)) throw std::domain_error("k_alpha: r must be > 0");
    const double ra = std::pow(r, a);
    const double den = ra * ra + 2.0 * ra * std::cos(a * M_PI) + 1.0;
    return std::pow(r, a - 1.0) * std::sin(a * M_PI) / (M_PI * den);
}

// Relaxation-time spectrum H_alpha(tau) = tau^(-2) K_alpha(1/tau).
// Numerically identical to the frequency form evaluated at tau.
inline double h_alpha(const Order& order, double tau) {
    if (!(tau > 0.0)) throw std::domain_error("h_alpha: tau must be > 0");
    return k_alpha(order, 1.0 / tau) / (tau * tau);
}

// Laplace integral over the spectrum: e_alpha(t) = int_0^inf e^(-rt)
// K_alpha(r) dr, evaluated by the shared singularity-removing quadrature.
inline double reconstruct_e_alpha(const Order& order, double t, double tol) {
    const double a = order.alpha();
    if (!(a < 1.0))
        throw std::domain_error("reconstruct_e_alpha: requires alpha < 1");
    if (!(t >= 0.0)) throw std::domain_error("reconstruct_e_alpha: t >= 0");
    return detail::branch_cut_integral(a, t, tol).value;
}

// Total spectral mass int_0^inf K_alpha(r) dr; equals 1 since e_alpha(0) = 1.
inline double spectral_mass(const Order& order, double tol) {
    return reconstruct_e_alpha(order, 0.0, tol);
}

}  // namespace mlr
