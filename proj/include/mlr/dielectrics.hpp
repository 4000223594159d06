#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mlr/curve.hpp"
#include "mlr/errors.hpp"
#include "mlr/fracops.hpp"
#include "mlr/ml.hpp"
#include "mlr/quadrature.hpp"

namespace mlr {

// Cole's nerve-conduction circuit: emf E through series resistance r, shunt
// resistance R, and a polarization element of fractional order alpha with
// operator constant K.
struct ColeCircuit {
    double emf;                 // E, volts
    double series_resistance;   // r, ohms
    double shunt_resistance;    // R, ohms
    double polarization_const;  // K, ohm * s^(-alpha)
    Order order;

    ColeCircuit(double E, double r, double R, double K, Order a)
        : emf(E), series_resistance(r), shunt_resistance(R),
          polarization_const(K), order(a) {
        if (!(E > 0.0 && r > 0.0 && R > 0.0 && K > 0.0))
            throw std::domain_error("ColeCircuit: E, r, R, K must be > 0");
    }

    double rate() const {  // lambda = K (R + r) / (R r)
        return polarization_const * (shunt_resistance + series_resistance) /
               (shunt_resistance * series_resistance);
    }
    double plateau() const {  // E R / (R + r)
        return emf * shunt_resistance / (shunt_resistance + series_resistance);
    }
};

// Potential across the polarization element:
//   e_P(t) = (E R / (R + r)) [1 - E_alpha(-lambda t^alpha)].
inline double cole_potential(const ColeCircuit& c, double t, double tol) {
    if (!(t >= 0.0)) throw std::domain_error("cole_potential: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double x = c.rate() * std::pow(t, c.order.alpha());
    return c.plateau() * (1.0 - ml_eval(c.order, x, tol).value);
}

enum class DischargeMode : int { discharge = +1, recharge = -1 };

// Imperfect capacitor with Schweidler after-effect phi(t) = beta t^(-n):
// geometric capacitance C, terminal resistance R (may be infinite),
// charging / short-circuit duration t0 (infinite = full charge), and mode
// delta = +1 (discharge) or -1 (recharge).
struct CapacitorModel {
    double capacitance;     // C, farads
    double resistance;      // R, ohms; +inf for the isolated capacitor
    double afteref_beta;    // beta > 0 (0 allowed: no after-effect)
    double afteref_n;       // n in [0, 1]
    double u0;              // charging voltage U0
    double t0;              // charging / short-circuit duration, may be +inf
    DischargeMode mode = DischargeMode::discharge;

    CapacitorModel(double C, double R, double beta, double n, double U0,
                   double t0_, DischargeMode m)
        : capacitance(C), resistance(R), afteref_beta(beta), afteref_n(n),
          u0(U0), t0(t0_), mode(m) {
        if (!(C > 0.0)) throw std::domain_error("CapacitorModel: C must be > 0");
        if (!(R > 0.0)) throw std::domain_error("CapacitorModel: R must be > 0");
        if (!(beta >= 0.0)) throw std::domain_error("CapacitorModel: beta >= 0");
        if (!(n >= 0.0 && n <= 1.0))
            throw std::domain_error("CapacitorModel: n must lie in [0, 1]");
        if (!(t0_ >= 0.0)) throw std::domain_error("CapacitorModel: t0 >= 0");
        if (m == DischargeMode::recharge && t0_ == 0.0)
            throw std::domain_error(
                "CapacitorModel: recharge requires t0 > 0 (phi singular at 0)");
    }

    double p() const { return 1.0 - afteref_n; }
    double k() const { return afteref_beta * resistance; }
    double lambda() const {
        return std::isinf(resistance) ? 0.0 : 1.0 / (resistance * capacitance);
    }
    double delta() const { return static_cast<double>(static_cast<int>(mode)); }
    double u_initial() const {
        return mode == DischargeMode::discharge ? u0 : 0.0;
    }
    // recharging current i0(t) = delta U0 beta (t + t0)^(-n)
    double recharging_current(double t) const {
        if (std::isinf(t0)) return 0.0;
        if (!(t + t0 > 0.0))
            throw std::domain_error("recharging_current: t + t0 must be > 0");
        return delta() * u0 * afteref_beta * std::pow(t + t0, -afteref_n);
    }
};

// Right-hand side of the Volterra form. Case a (R infinite):
// f(t) = -i0(t)/C. Case b (finite R, short-time device): the constant
// U(0)/R is folded into the forcing, f(t) = -(U(0)/(RC) + i0(t)/C).
inline double discharge_forcing(const CapacitorModel& m, double t) {
    const double i0_over_c = m.recharging_current(t) / m.capacitance;
    if (std::isinf(m.resistance)) return -i0_over_c;
    return -(m.u_initial() * m.lambda() + i0_over_c);
}

enum class SolveMethod { ml_convolution, closed_form_j, gross_approx, volterra_numeric };

inline const char* solve_method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::ml_convolution: return "ml-convolution";
        case SolveMethod::closed_form_j: return "closed-form-J";
        case SolveMethod::gross_approx: return "gross-approx";
        case SolveMethod::volterra_numeric: return "volterra-numeric";
    }
    return "?";
}

struct DischargeSolution {
    Curve curve;
    SolveMethod method;
};

namespace detail {

// Resolvent g(y) = E_p(-(beta/C) Gamma(p) y) tabulated densely in
// y = u^p and interpolated with cubic Hermite (Catmull-Rom) polynomials.
// E_p(-c y) is analytic in y, so a few thousand nodes reach ~1e-12.
class MlResolvent {
  public:
    MlResolvent(double p, double coeff, double y_max, double tol)
        : p_(p), y_max_(y_max) {
        const Order order(p);
        const int n = 4096;
        h_ = y_max / n;
        g_.resize(n + 1);
        for (int i = 0; i <= n; ++i)
            g_[i] = ml_eval(order, coeff * (h_ * i), tol).value;
    }

    double operator()(double u) const {  // u = elapsed time, evaluates E_p(-c u^p)
        double y = std::pow(u, p_);
        if (y <= 0.0) return 1.0;
        if (y >= y_max_) y = y_max_;
        const int n = static_cast<int>(g_.size()) - 1;
        int i = static_cast<int>(y / h_);
        if (i < 1) {  // linear on the first cell (g is smooth, cell ~1e-3)
            const double w = y / h_;
            return g_[0] + w * (g_[1] - g_[0]);
        }
        if (i > n - 2) i = n - 2;
        const double w = y / h_ - i;
        const double m0 = 0.5 * (g_[i + 1] - g_[i - 1]);
        const double m1 = 0.5 * (g_[i + 2] - g_[i]);
        const double d = g_[i + 1] - g_[i];
        return g_[i] + w * (m0 + w * ((3.0 * d - 2.0 * m0 - m1) +
                                      w * (m0 + m1 - 2.0 * d)));
    }

  private:
    double p_, y_max_, h_;
    std::vector<double> g_;
};

}  // namespace detail

// Mittag-Leffler convolution solution (case a, or case b at short times):
//   U(t) = U(0) + int_0^t E_p[-(beta/C) Gamma(p) (t - s)^p] f(s) ds.
// The convolution is evaluated per grid node with the substitution
// w = (t - s)^p, which removes the resolvent's infinite slope at s = t.
inline DischargeSolution solve_discharge_ml(const CapacitorModel& m,
                                            double horizon, int steps,
                                            double tol) {
    if (!(horizon > 0.0)) throw std::domain_error("solve_discharge_ml: horizon > 0");
    if (steps < 2) throw std::domain_error("solve_discharge_ml: steps >= 2");
    const double p = m.p();
    if (!(p > 0.0)) throw std::domain_error("solve_discharge_ml: requires p > 0");
    const double coeff = m.afteref_beta / m.capacitance * std::tgamma(p);
    const bool trivial_resolvent = (m.afteref_beta == 0.0);
    std::vector<double> ts(steps + 1), us(steps + 1);
    const detail::MlResolvent resolvent(
        trivial_resolvent ? 0.5 : p, trivial_resolvent ? 0.0 : coeff,
        std::pow(horizon, trivial_resolvent ? 0.5 : p), tol * 1e-2);
    for (int i = 0; i <= steps; ++i) {
        const double t = horizon * i / steps;
        ts[i] = t;
        if (i == 0) {
            us[0] = m.u_initial();
            continue;
        }
        const double tp = std::pow(t, p);
        auto integrand = [&](double w) -> double {
            if (w <= 0.0) return 0.0;
            const double u = std::pow(w, 1.0 / p);  // elapsed time t - s
            const double s = t - u;
            return resolvent(u) * discharge_forcing(m, s < 0.0 ? 0.0 : s) *
                   (1.0 / p) * std::pow(w, 1.0 / p - 1.0);
        };
        const double integral = integrate_adaptive(integrand, 0.0, tp, tol).value;
        us[i] = m.u_initial() + integral;
    }
    return {Curve(std::move(ts), std::move(us)), SolveMethod::ml_convolution};
}

// Closed-form primitive J(t) = (1/(p A^m)) int_0^{A t^p} u^(m-1)/(1+u) du
// with A = beta/(p C), valid when 1/p is an even integer:
//   J = (1/(p A^m)) [ A^(m-1) t^(1-p)/(m-1) - A^(m-2) t^(1-2p)/(m-2) + ...
//                     + A t^(1-(m-1)p) - ln(1 + A t^p) ].
inline double closed_form_J(const CapacitorModel& model, double t) {
    if (!(t >= 0.0)) throw std::domain_error("closed_form_J: t must be >= 0");
    const double p = model.p();
    const double m_real = 1.0 / p;
    const long m = std::lround(m_real);
    if (std::abs(m_real - static_cast<double>(m)) > 1e-9 || m % 2 != 0)
        throw UnsupportedOrder("closed_form_J: 1/p must be an even integer, p = " +
                               std::to_string(p));
    if (t == 0.0) return 0.0;
    const double A = model.afteref_beta / (p * model.capacitance);
    const double Atp = A * std::pow(t, p);
    double bracket = -std::log1p(Atp);
    for (long j = 1; j <= m - 1; ++j) {
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        bracket += sign * std::pow(A, static_cast<double>(m - j)) *
                   std::pow(t, 1.0 - j * p) / static_cast<double>(m - j);
    }
    return bracket / (p * std::pow(A, static_cast<double>(m)));
}

// Full-charge discharge voltage from the closed-form primitive:
//   U(t) = U0 - (U0/(RC)) J(t)   (finite R).
inline DischargeSolution solve_discharge_closed_form(const CapacitorModel& m,
                                                     double horizon, int steps) {
    if (std::isinf(m.resistance))
        throw UnsupportedOrder("solve_discharge_closed_form: requires finite R");
    std::vector<double> ts(steps + 1), us(steps + 1);
    const double scale = m.u0 * m.lambda();
    for (int i = 0; i <= steps; ++i) {
        ts[i] = horizon * i / steps;
        us[i] = m.u0 - scale * closed_form_J(m, ts[i]);
    }
    return {Curve(std::move(ts), std::move(us)), SolveMethod::closed_form_j};
}

// Gross's approximate discharge voltage:
//   U(t) = U0 exp{ (1/U0) int_0^t f(s) ds / (1 + (beta/(pC)) s^p) }.
inline double gross_approximation(const CapacitorModel& m, double t, double tol) {
    if (!(t >= 0.0)) throw std::domain_error("gross_approximation: t >= 0");
    if (t == 0.0) return m.u0;
    const double p = m.p();
    const double A = m.afteref_beta / (p * m.capacitance);
    auto integrand = [&](double s) {
        return discharge_forcing(m, s) / (1.0 + A * std::pow(s, p));
    };
    const double integral = integrate_adaptive(integrand, 0.0, t, tol).value;
    return m.u0 * std::exp(integral / m.u0);
}

// Weakly singular Volterra problem psi(t) + int_0^t psi(tau) K(t-tau) dtau
// = f(t) with kernel K(u) = lambda [1 + k u^(p-1)].
struct VolterraProblem {
    double kernel_lambda;  // >= 0
    double kernel_k;       // >= 0
    double kernel_p;       // (0, 1]
    std::function<double(double)> forcing;
    double horizon;        // T > 0
    int steps;             // N >= 2

    VolterraProblem(double lambda, double k, double p,
                    std::function<double(double)> f, double T, int N)
        : kernel_lambda(lambda), kernel_k(k), kernel_p(p),
          forcing(std::move(f)), horizon(T), steps(N) {
        if (!(lambda >= 0.0) || !(k >= 0.0))
            throw std::domain_error("VolterraProblem: lambda, k must be >= 0");
        if (!(p > 0.0 && p <= 1.0))
            throw std::domain_error("VolterraProblem: p must lie in (0, 1]");
        if (!(T > 0.0)) throw std::domain_error("VolterraProblem: horizon > 0");
        if (N < 2) throw std::domain_error("VolterraProblem: steps >= 2");
    }
};

struct VolterraSolution {
    Curve psi;  // dU/dt on the uniform grid
    Curve u;    // U(t) = U(0) + int_0^t psi
};

// Implicit product integration on a uniform grid: piecewise-linear psi is
// integrated exactly against the kernel, whose panel moments
//   m0[l] = int K(u) du,  m1[l] = int u K(u) du  over [l h, (l+1) h]
// are available in closed form. Second order for smooth forcing.
inline VolterraSolution solve_volterra(const VolterraProblem& prob,
                                       double u_initial = 0.0) {
    const int N = prob.steps;
    const double h = prob.horizon / N;
    const double lam = prob.kernel_lambda;
    const double k = prob.kernel_k;
    const double p = prob.kernel_p;

    auto pow_p = [&](double u, double q) { return u > 0.0 ? std::pow(u, q) : 0.0; };
    std::vector<double> m0(N), m1(N);
    for (int l = 0; l < N; ++l) {
        const double a = l * h, b = (l + 1) * h;
        m0[l] = lam * ((b - a) + k * (pow_p(b, p) - pow_p(a, p)) / p);
        m1[l] = lam * (0.5 * (b * b - a * a) +
                       k * (pow_p(b, p + 1.0) - pow_p(a, p + 1.0)) / (p + 1.0));
    }
    // weight of psi_{j} (panel's right node, l = i-j-1): (l+1) m0 - m1/h
    // weight of psi_{j-1} (left node): m1/h - l m0
    std::vector<double> w_right(N), w_left(N);
    for (int l = 0; l < N; ++l) {
        w_right[l] = (l + 1) * m0[l] - m1[l] / h;
        w_left[l] = m1[l] / h - l * m0[l];
    }
    const double diag = 1.0 + w_right[0];
    if (!(diag > 0.0))
        throw SingularSystem("solve_volterra: non-positive implicit weight");

    std::vector<double> psi(N + 1), ts(N + 1);
    for (int i = 0; i <= N; ++i) ts[i] = i * h;
    psi[0] = prob.forcing(0.0);
    for (int i = 1; i <= N; ++i) {
        double conv = 0.0;  // contributions of already-known nodes
        for (int j = 0; j < i; ++j) {
            const int l = i - j - 1;
            conv += psi[j] * w_left[l];
            if (j > 0) conv += psi[j] * w_right[l + 1];
        }
        psi[i] = (prob.forcing(ts[i]) - conv) / diag;
    }
    std::vector<double> u(N + 1);
    u[0] = u_initial;
    for (int i = 1; i <= N; ++i)
        u[i] = u[i - 1] + 0.5 * h * (psi[i - 1] + psi[i]);
    return {Curve(ts, psi), Curve(ts, u)};
}

}  // namespace mlr
