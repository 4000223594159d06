#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "mlr/errors.hpp"

namespace mlr {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
};

namespace detail {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1] (QUADPACK values).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
inline QuadResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kGK15Nodes[i]);
        fv[14 - i] = f(c + h * kGK15Nodes[i]);
    }
    fv[7] = f(c);
    double kronrod = 0.0;
    for (int i = 0; i < 7; ++i) kronrod += kGK15WeightsK[i] * (fv[i] + fv[14 - i]);
    kronrod += kGK15WeightsK[7] * fv[7];
    double gauss = kGK15WeightsG[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        gauss += kGK15WeightsG[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    QuadResult r;
    r.value = kronrod * h;
    const double diff = (kronrod - gauss) * h;
    // QUADPACK-style sharpened error estimate
    r.error = std::abs(diff);
    if (r.error > 0.0) r.error = std::pow(200.0 * r.error, 1.5);
    if (r.error > std::abs(diff)) r.error = std::abs(diff);
    if (r.error == 0.0) r.error = std::abs(diff);
    return r;
}

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b]
// to absolute tolerance abs_tol. Throws QuadratureFailure when the interval
// budget is exhausted before the tolerance is met.
template <class F>
inline QuadResult integrate_adaptive(const F& f, double a, double b,
                                     double abs_tol,
                                     std::size_t max_intervals = 20000) {
    if (a == b) return {0.0, 0.0};
    std::priority_queue<detail::Interval> heap;
    auto first = detail::gk15(f, a, b);
    heap.push({a, b, first.value, first.error});
    double total_value = first.value;
    double total_error = first.error;
    while (total_error > abs_tol && heap.size() < max_intervals) {
        detail::Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at machine resolution, keep its estimate
            heap.push(worst);
            break;
        }
        auto left = detail::gk15(f, worst.a, mid);
        auto right = detail::gk15(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push({worst.a, mid, left.value, left.error});
        heap.push({mid, worst.b, right.value, right.error});
    }
    if (total_error > abs_tol && heap.size() >= max_intervals)
        throw QuadratureFailure("adaptive quadrature exhausted its interval budget");
    return {total_value, total_error};
}

}  // namespace mlr
