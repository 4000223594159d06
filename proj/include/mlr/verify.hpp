#pragma once

#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "mlr/fracops.hpp"
#include "mlr/ml.hpp"
#include "mlr/reports.hpp"
#include "mlr/spectra.hpp"

namespace mlr {

struct PropertyResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;      // worst-case residual or margin
    std::string detail;
};

namespace verify {

// Bound sandwich lower <= e_alpha <= upper over an alpha x log-t grid,
// strict for t > 0. Reports the worst (smallest) margin.
inline PropertyResult bounds_sandwich() {
    PropertyResult r{"bounds-sandwich", true, std::numeric_limits<double>::infinity(), ""};
    for (int ia = 1; ia <= 9; ++ia) {
        const Order order(ia / 10.0);
        for (double t : detail::logspace(1e-3, 1e3, 41)) {
            const double e = e_alpha(order, t, 1e-10).value;
            const auto b = ml_bounds(order, t);
            const double margin = std::min(e - b.lower, b.upper - e);
            if (margin < r.worst) r.worst = margin;
            if (!(margin > 0.0)) r.pass = false;
        }
    }
    r.detail = "worst margin over 9x41 grid";
    return r;
}

// Non-negativity, unit mass, the H/K scaling identity, and Laplace-integral
// reconstruction of e_alpha.
inline std::vector<PropertyResult> spectra_suite() {
    std::vector<PropertyResult> out;
    PropertyResult nonneg{"spectra-nonnegative", true, 0.0, "min density over log grid"};
    nonneg.worst = std::numeric_limits<double>::infinity();
    PropertyResult scaling{"spectra-scaling-identity", true, 0.0,
                           "max |H(tau) - closed form| on log grid"};
    PropertyResult mass{"spectra-unit-mass", true, 0.0, "max |int K - 1|"};
    PropertyResult rec{"spectra-laplace-reconstruction", true, 0.0,
                       "max |reconstruction - e_alpha|"};
    for (int ia = 1; ia <= 9; ++ia) {
        const Order order(ia / 10.0);
        const double a = order.alpha();
        for (double x : detail::logspace(1e-4, 1e4, 33)) {
            const double k = k_alpha(order, x);
            const double h = h_alpha(order, x);
            nonneg.worst = std::min(nonneg.worst, std::min(k, h));
            const double xa = std::pow(x, a);
            const double closed = std::pow(x, a - 1.0) * std::sin(a * M_PI) /
                                  (M_PI * (xa * xa + 2.0 * xa * std::cos(a * M_PI) + 1.0));
            scaling.worst = std::max(scaling.worst, std::abs(h - closed));
        }
        mass.worst = std::max(mass.worst, std::abs(spectral_mass(order, 1e-8) - 1.0));
        for (double t : {0.0, 0.1, 1.0, 10.0}) {
            const double diff = std::abs(reconstruct_e_alpha(order, t, 1e-8) -
                                         e_alpha(order, t, 1e-9).value);
            rec.worst = std::max(rec.worst, diff);
        }
    }
    nonneg.pass = nonneg.worst >= 0.0;
    scaling.pass = scaling.worst < 1e-12;
    mass.pass = mass.worst < 1e-6;
    rec.pass = rec.worst < 1e-6;
    out.push_back(nonneg);
    out.push_back(scaling);
    out.push_back(mass);
    out.push_back(rec);
    return out;
}

// Transform-pair identity L{e_alpha}(s) = s^(alpha-1)/(s^alpha + 1).
inline PropertyResult laplace_pair() {
    PropertyResult r{"laplace-pair", true, 0.0, "max |numeric - closed form|"};
    for (double a : {0.25, 0.5, 0.75}) {
        const Order order(a);
        SampledFunction f([order](double t) { return e_alpha(order, t, 1e-9).value; });
        for (double s : {0.5, 1.0, 2.0}) {
            const double numeric = laplace_transform(f, s, 1e-7);
            const double closed = std::pow(s, a - 1.0) / (std::pow(s, a) + 1.0);
            r.worst = std::max(r.worst, std::abs(numeric - closed));
        }
    }
    r.pass = r.worst < 1e-5;
    return r;
}

// Fractional relaxation residuals, Caputo and Riemann-Liouville forms.
inline std::vector<PropertyResult> fractional_residuals() {
    PropertyResult cap{"caputo-relaxation-residual", true, 0.0,
                       "max |*D^a e_a + e_a|"};
    PropertyResult rl{"rl-relaxation-residual", true, 0.0,
                      "max |d/dt e_a + D^(1-a) e_a|"};
    for (double a : {0.25, 0.5, 0.75}) {
        const Order order(a);
        SampledFunction f([order](double t) { return e_alpha(order, t, 1e-10).value; });
        for (double t : {0.25, 0.5, 1.0, 2.0, 5.0}) {
            const double e = e_alpha(order, t, 1e-10).value;
            const double c = caputo_derivative(f, FracOrder(a), t, 2e-5);
            cap.worst = std::max(cap.worst, std::abs(c + e));
            const double h = 1e-4 * t;
            const double dedt = (e_alpha(order, t + h, 1e-11).value -
                                 e_alpha(order, t - h, 1e-11).value) / (2.0 * h);
            const double d = rl_derivative(f, FracOrder(1.0 - a), t, 2e-5);
            rl.worst = std::max(rl.worst, std::abs(dedt + d));
        }
    }
    cap.pass = cap.worst < 1e-4;
    rl.pass = rl.worst < 1e-3;
    return {cap, rl};
}

inline std::vector<PropertyResult> run_suite(const std::string& suite) {
    std::vector<PropertyResult> out;
    if (suite == "bounds" || suite == "all") out.push_back(bounds_sandwich());
    if (suite == "spectra" || suite == "all") {
        auto s = spectra_suite();
        out.insert(out.end(), s.begin(), s.end());
    }
    if (suite == "laplace" || suite == "all") out.push_back(laplace_pair());
    if (suite == "fracres" || suite == "all") {
        auto s = fractional_residuals();
        out.insert(out.end(), s.begin(), s.end());
    }
    if (out.empty())
        throw std::invalid_argument("unknown verify suite: " + suite);
    return out;
}

inline bool report(const std::vector<PropertyResult>& results, std::ostream& os) {
    bool all = true;
    for (const auto& r : results) {
        os << (r.pass ? "pass" : "FAIL") << "  " << r.name
           << "  worst = " << CsvTable::format_value(r.worst)
           << "  (" << r.detail << ")\n";
        all = all && r.pass;
    }
    return all;
}

}  // namespace verify
}  // namespace mlr
