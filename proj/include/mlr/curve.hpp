#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mlr {

// A sampled function of time: strictly increasing non-negative abscissae
// with one value per node.
struct Curve {
    std::vector<double> t;
    std::vector<double> u;

    Curve() = default;
    Curve(std::vector<double> abscissae, std::vector<double> values)
        : t(std::move(abscissae)), u(std::move(values)) {
        if (t.size() != u.size() || t.size() < 2)
            throw std::invalid_argument("Curve: need matching arrays of size >= 2");
        if (t.front() < 0.0)
            throw std::invalid_argument("Curve: abscissae must be non-negative");
        for (std::size_t i = 1; i < t.size(); ++i)
            if (!(t[i] > t[i - 1]))
                throw std::invalid_argument("Curve: abscissae must be strictly increasing");
    }

    std::size_t size() const { return t.size(); }

    // piecewise-linear interpolation, clamped at the ends
    double operator()(double x) const {
        if (x <= t.front()) return u.front();
        if (x >= t.back()) return u.back();
        std::size_t lo = 0, hi = t.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (t[mid] <= x ? lo : hi) = mid;
        }
        const double w = (x - t[lo]) / (t[lo + 1] - t[lo]);
        return u[lo] + w * (u[lo + 1] - u[lo]);
    }
};

}  // namespace mlr
