#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlr/csv.hpp"
#include "mlr/dielectrics.hpp"
#include "mlr/ml.hpp"
#include "mlr/spectra.hpp"

namespace mlr {

inline const double kTable1Abscissae[10] = {0.0, 0.2, 0.4, 0.6, 1.0,
                                            2.0, 4.0, 6.0, 8.0, 10.0};

// Castro's comparison table: E_0.1(-x), the small-order rational
// approximation, and E_0.5(-x) at the ten historical abscissae.
inline CsvTable make_table1(double tol) {
    CsvTable t;
    t.header = {"x", "E_0.1(-x)", "1/(1+x/Gamma(1.1))", "E_0.5(-x)"};
    const Order p01(0.1), p05(0.5);
    for (double x : kTable1Abscissae) {
        t.add_row({x, ml_eval(p01, x, tol).value, rational_approx(p01, x),
                   ml_eval(p05, x, tol).value});
    }
    return t;
}

namespace detail {

inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

inline std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v(n);
    const double la = std::log10(a), lb = std::log10(b);
    for (int i = 0; i < n; ++i) v[i] = std::pow(10.0, la + (lb - la) * i / (n - 1));
    return v;
}

}  // namespace detail

// Data series behind the survey's figures:
//  1     K_alpha(r) on r in [1e-6, 2] for alpha = 0.25, 0.5, 0.75, 0.9
//  2     e_alpha(t) on t in [0, 15] for alpha = 0.25, 0.5, 0.75, 0.9, 1
//  3..7  e_alpha with its short- and long-time branches on a log grid
//        t in [1e-5, 1e5] for alpha = 0.25, 0.5, 0.75, 0.9, 0.99
//  9     Cole potential, non-dimensional (E = 1, R = r = 1, K = 1),
//        for alpha = 0.25, 0.5, 0.75, 1
inline CsvTable make_figure(int id, double tol) {
    CsvTable t;
    switch (id) {
        case 1: {
            const double alphas[] = {0.25, 0.5, 0.75, 0.9};
            t.header = {"r", "K_0.25", "K_0.5", "K_0.75", "K_0.9"};
            // left cutoff at 1e-6: the density is infinite at r = 0
            auto grid = detail::linspace(0.0, 2.0, 401);
            grid[0] = 1e-6;
            for (double r : grid) {
                std::vector<double> row = {r};
                for (double a : alphas) row.push_back(k_alpha(Order(a), r));
                t.add_row(std::move(row));
            }
            return t;
        }
        case 2: {
            const double alphas[] = {0.25, 0.5, 0.75, 0.9, 1.0};
            t.header = {"t", "e_0.25", "e_0.5", "e_0.75", "e_0.9", "e_1"};
            for (double x : detail::linspace(0.0, 15.0, 301)) {
                std::vector<double> row = {x};
                for (double a : alphas)
                    row.push_back(e_alpha(Order(a), x, tol).value);
                t.add_row(std::move(row));
            }
            return t;
        }
        case 3:
        case 4:
        case 5:
        case 6:
        case 7: {
            const double alphas[] = {0.25, 0.5, 0.75, 0.9, 0.99};
            const Order order(alphas[id - 3]);
            t.comments.push_back("alpha = " + CsvTable::format_value(order.alpha()));
            t.header = {"t", "e_alpha", "stretched_exp", "power_law"};
            for (double x : detail::logspace(1e-5, 1e5, 201)) {
                t.add_row({x, e_alpha(order, x, tol).value,
                           stretched_exponential(order, x),
                           power_law_tail(order, x)});
            }
            return t;
        }
        case 9: {
            const double alphas[] = {0.25, 0.5, 0.75, 1.0};
            t.comments.push_back("E = 1, R = r = 1, K = 1 (lambda = 2)");
            t.header = {"t", "eP_0.25", "eP_0.5", "eP_0.75", "eP_1"};
            for (double x : detail::linspace(0.0, 10.0, 401)) {
                std::vector<double> row = {x};
                for (double a : alphas) {
                    ColeCircuit c(1.0, 1.0, 1.0, 1.0, Order(a));
                    row.push_back(cole_potential(c, x, tol));
                }
                t.add_row(std::move(row));
            }
            return t;
        }
        default:
            throw std::invalid_argument("make_figure: unknown figure id " +
                                        std::to_string(id));
    }
}

// (t, U) curve for a capacitor model by the requested method, with the
// derived constants echoed as comments.
inline CsvTable make_capacitor_table(const CapacitorModel& m, SolveMethod method,
                                     double horizon, int steps, double tol) {
    CsvTable t;
    t.comments.push_back("k = " + CsvTable::format_value(m.k()));
    t.comments.push_back("p = " + CsvTable::format_value(m.p()));
    t.comments.push_back("lambda = " + CsvTable::format_value(m.lambda()));
    t.comments.push_back(
        "A = " + CsvTable::format_value(m.afteref_beta / (m.p() * m.capacitance)));
    t.comments.push_back(std::string("method = ") + solve_method_name(method));
    t.header = {"t", "U"};
    switch (method) {
        case SolveMethod::ml_convolution: {
            auto sol = solve_discharge_ml(m, horizon, steps, tol);
            for (std::size_t i = 0; i < sol.curve.size(); ++i)
                t.add_row({sol.curve.t[i], sol.curve.u[i]});
            return t;
        }
        case SolveMethod::closed_form_j: {
            auto sol = solve_discharge_closed_form(m, horizon, steps);
            for (std::size_t i = 0; i < sol.curve.size(); ++i)
                t.add_row({sol.curve.t[i], sol.curve.u[i]});
            return t;
        }
        case SolveMethod::gross_approx: {
            for (int i = 0; i <= steps; ++i) {
                const double x = horizon * i / steps;
                t.add_row({x, gross_approximation(m, x, tol)});
            }
            return t;
        }
        case SolveMethod::volterra_numeric: {
            // R = inf makes k = beta R unrepresentable; a huge proxy
            // resistance keeps lambda k = beta / C and perturbs the kernel
            // by lambda ~ 1e-12 only.
            CapacitorModel vm = m;
            if (std::isinf(vm.resistance)) vm.resistance = 1e12;
            VolterraProblem prob(vm.lambda(), vm.k(), vm.p(),
                                 [&m](double s) { return discharge_forcing(m, s); },
                                 horizon, steps);
            auto sol = solve_volterra(prob, m.u_initial());
            for (std::size_t i = 0; i < sol.u.size(); ++i)
                t.add_row({sol.u.t[i], sol.u.u[i]});
            return t;
        }
    }
    throw std::invalid_argument("make_capacitor_table: bad method");
}

}  // namespace mlr
