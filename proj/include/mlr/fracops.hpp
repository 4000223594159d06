#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "mlr/curve.hpp"
#include "mlr/errors.hpp"
#include "mlr/quadrature.hpp"

namespace mlr {

// Fractional differentiation order mu in (0, 1).
class FracOrder {
  public:
    explicit FracOrder(double mu) : mu_(mu) {
        if (!(mu > 0.0) || !(mu < 1.0))
            throw std::domain_error("FracOrder: mu must lie in (0, 1)");
    }
    double mu() const { return mu_; }

  private:
    double mu_;
};

// A real function of t >= 0, given either as a callable or as a sampled
// curve (interpolated piecewise-linearly). Derivative operators integrate
// from 0, so curves must start at t = 0.
class SampledFunction {
  public:
    SampledFunction(std::function<double(double)> f)  // NOLINT(google-explicit-constructor)
        : f_(std::move(f)) {}
    SampledFunction(const Curve& c) {  // NOLINT(google-explicit-constructor)
        if (c.t.front() != 0.0)
            throw std::invalid_argument("SampledFunction: curve must start at t = 0");
        f_ = c;
    }
    double operator()(double t) const { return f_(t); }

  private:
    std::function<double(double)> f_;
};

namespace detail {

// Product-integration (L1) discretization of
//   int_0^t f'(tau) (t - tau)^(-mu) dtau
// on a mesh graded toward 0: the piecewise-linear interpolant of f is
// integrated exactly against the weakly singular weight, so f' never has to
// be evaluated where it may blow up.
inline double l1_weighted_diff(const SampledFunction& f, double mu, double t,
                               int n_panels, double grade) {
    std::vector<double> tau(n_panels + 1), fv(n_panels + 1);
    for (int j = 0; j <= n_panels; ++j) {
        tau[j] = t * std::pow(double(j) / n_panels, grade);
        fv[j] = f(tau[j]);
    }
    double acc = 0.0;
    const double q = 1.0 - mu;
    for (int j = 0; j < n_panels; ++j) {
        const double a = t - tau[j];      // weight argument, decreasing
        const double b = t - tau[j + 1];
        const double moment = (std::pow(a, q) - std::pow(b, q)) / q;
        acc += (fv[j + 1] - fv[j]) / (tau[j + 1] - tau[j]) * moment;
    }
    return acc;
}

}  // namespace detail

// Caputo derivative of order mu at t:
//   (1/Gamma(1-mu)) int_0^t f'(tau) (t - tau)^(-mu) dtau.
// The mesh is refined until two successive levels agree within tol.
inline double caputo_derivative(const SampledFunction& f, const FracOrder& mu,
                                double t, double tol) {
    if (!(t > 0.0)) throw std::domain_error("caputo_derivative: t must be > 0");
    if (!(tol > 0.0)) throw std::domain_error("caputo_derivative: tol > 0");
    constexpr double kGrade = 3.0;
    constexpr int kMaxPanels = 1 << 16;
    double prev = detail::l1_weighted_diff(f, mu.mu(), t, 256, kGrade);
    for (int n = 512; n <= kMaxPanels; n *= 2) {
        const double cur = detail::l1_weighted_diff(f, mu.mu(), t, n, kGrade);
        if (std::abs(cur - prev) <= 0.5 * tol * std::tgamma(1.0 - mu.mu()))
            return cur / std::tgamma(1.0 - mu.mu());
        prev = cur;
    }
    throw GridTooCoarse("caputo_derivative: refinement cap reached before tol");
}

// Riemann-Liouville derivative via the Caputo relationship:
//   D^mu f(t) = *D^mu f(t) + f(0+) t^(-mu) / Gamma(1-mu).
inline double rl_derivative(const SampledFunction& f, const FracOrder& mu,
                            double t, double tol) {
    const double caputo = caputo_derivative(f, mu, t, tol);
    return caputo + f(0.0) * std::pow(t, -mu.mu()) / std::tgamma(1.0 - mu.mu());
}

// Truncated Laplace transform int_0^inf e^(-st) f(t) dt for decaying f.
// The horizon grows until the completely-monotone tail bound
// |f(T)| e^(-sT) / s falls below tol / 2.
inline double laplace_transform(const SampledFunction& f, double s, double tol) {
    if (!(s > 0.0)) throw std::domain_error("laplace_transform: s must be > 0");
    if (!(tol > 0.0)) throw std::domain_error("laplace_transform: tol > 0");
    double T = 8.0 / s;
    const double t_max = 1e7 / s;
    while (true) {
        const double tail = std::abs(f(T)) * std::exp(-s * T) / s;
        if (tail <= 0.5 * tol) break;
        if (std::abs(f(T)) > std::abs(f(0.5 * T)) || T > t_max)
            throw TailUnbounded("laplace_transform: integrand not decaying at T = " +
                                std::to_string(T));
        T *= 2.0;
    }
    auto integrand = [&](double t) {
        const double e = -s * t;
        return e > -700.0 ? std::exp(e) * f(t) : 0.0;
    };
    return integrate_adaptive(integrand, 0.0, T, 0.5 * tol).value;
}

}  // namespace mlr
