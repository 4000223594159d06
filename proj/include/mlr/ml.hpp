#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlr/errors.hpp"
#include "mlr/quadrature.hpp"

namespace mlr {

// Fractional order alpha, restricted to (0, 1]. alpha = 1 is the
// exponential limit.
class Order {
  public:
    explicit Order(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || !(alpha <= 1.0))
            throw std::domain_error("Order: alpha must lie in (0, 1], got " +
                                    std::to_string(alpha));
    }
    double alpha() const { return alpha_; }

  private:
    double alpha_;
};

enum class Method { series, asymptotic, integral, closed_form };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::asymptotic: return "asymptotic";
        case Method::integral: return "integral";
        case Method::closed_form: return "closed-form";
    }
    return "?";
}

struct EvalResult {
    double value = 0.0;
    Method method = Method::series;
    double err_estimate = 0.0;  // claimed upper bound on |value - true|
};

struct BoundsPair {
    double lower = 0.0;
    double upper = 0.0;
};

namespace detail {

// Scaled complementary error function exp(x^2) erfc(x) for x >= 0.
inline double erfcx(double x) {
    if (x < 25.0) return std::exp(x * x) * std::erfc(x);
    // asymptotic series, relative error below 1e-16 for x >= 25
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 6; ++k) {
        term *= -(2 * k - 1) * inv2x2;
        sum += term;
    }
    return sum / (x * std::sqrt(M_PI));
}

// Branch-cut representation of e_alpha(t) = E_alpha(-t^alpha), 0 < alpha < 1:
//   e_alpha(t) = int_0^inf exp(-r t) K_alpha(r) dr.
// Splitting at r = 1 and substituting r = u^(1/alpha) on the lower half and
// r = u^(-1/alpha) on the tail folds both halves onto [0, 1] with all
// endpoint singularities removed:
//   e_alpha(t) = sin(a pi)/(a pi) *
//                int_0^1 [exp(-t u^(1/a)) + exp(-t u^(-1/a))] /
//                        (u^2 + 2 u cos(a pi) + 1) du.
inline QuadResult branch_cut_integral(double alpha, double t, double abs_tol) {
    const double a = alpha;
    const double s = std::sin(a * M_PI);
    const double c = std::cos(a * M_PI);
    const double scale = s / (a * M_PI);
    auto integrand = [=](double u) -> double {
        if (u <= 0.0) return 0.0;
        const double den = u * u + 2.0 * u * c + 1.0;
        const double lo = -t * std::pow(u, 1.0 / a);
        const double hi = -t * std::pow(u, -1.0 / a);
        double v = 0.0;
        if (lo > -700.0) v += std::exp(lo);
        if (hi > -700.0) v += std::exp(hi);
        return v / den;
    };
    // For large t the first exponential collapses into a boundary layer of
    // width (1/t)^alpha at u = 0 that open quadrature rules never sample;
    // force breakpoints across the layer before refining adaptively.
    std::vector<double> pts{0.0};
    if (t > 2.0) {
        for (int i = -1; i <= 3; ++i) {
            const double u = std::pow(std::pow(10.0, i) / t, a);
            if (u > 0.0 && u < 0.9) pts.push_back(u);
        }
    }
    pts.push_back(1.0);
    const double piece_tol = abs_tol / (scale * static_cast<double>(pts.size() - 1));
    double value = 0.0, error = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto q = integrate_adaptive(integrand, pts[i], pts[i + 1], piece_tol);
        value += q.value;
        error += q.error;
    }
    return {scale * value, scale * error};
}

}  // namespace detail

// Power-series evaluation of E_alpha(-x) = sum (-x)^n / Gamma(alpha n + 1),
// truncated when the next-term bound drops below tol in the alternating
// regime. Throws CatastrophicCancellation when intermediate terms grow so
// large that the rounding error of the partial sums exceeds the budget
// (roughly x^alpha >~ 5 in binary64).
inline EvalResult ml_series(const Order& order, double x, double tol) {
    if (!(x >= 0.0)) throw std::domain_error("ml_series: x must be >= 0");
    if (!(tol > 0.0)) throw std::domain_error("ml_series: tol must be > 0");
    const double a = order.alpha();
    if (x == 0.0) return {1.0, Method::series, 0.0};
    double sum = 1.0;
    double max_abs_term = 1.0;
    double prev_abs = 1.0;
    const double lx = std::log(x);
    constexpr int kMaxTerms = 10000;
    for (int n = 1; n <= kMaxTerms; ++n) {
        const double log_abs = n * lx - std::lgamma(a * n + 1.0);
        if (log_abs > 690.0)
            throw CatastrophicCancellation(
                "ml_series: terms overflow at x = " + std::to_string(x));
        const double abs_term = std::exp(log_abs);
        const double term = (n % 2 == 0) ? abs_term : -abs_term;
        if (abs_term <= tol && abs_term < prev_abs) {
            // alternating remainder bound: first omitted term
            const double cancel = max_abs_term * n *
                                  std::numeric_limits<double>::epsilon();
            if (cancel > tol)
                throw CatastrophicCancellation(
                    "ml_series: cancellation error " + std::to_string(cancel) +
                    " exceeds tol");
            return {sum, Method::series, abs_term};
        }
        sum += term;
        if (abs_term > max_abs_term) max_abs_term = abs_term;
        prev_abs = abs_term;
        if (max_abs_term * std::numeric_limits<double>::epsilon() > 1.0)
            throw CatastrophicCancellation(
                "ml_series: partial sums exceed the precision budget at x = " +
                std::to_string(x));
    }
    throw CatastrophicCancellation("ml_series: no convergence in 10000 terms");
}

// Asymptotic expansion E_alpha(-x) ~ sum_{n>=1} (-1)^(n-1) x^(-n) /
// Gamma(1 - alpha n), valid for x^alpha > 1. Terms where Gamma hits a pole
// contribute exactly zero. Truncation stops at the smallest-term index
// (optimal truncation) or after n_terms, whichever comes first; the error
// estimate is the magnitude of the first omitted term.
inline EvalResult ml_asymptotic(const Order& order, double x, int n_terms) {
    if (n_terms < 1) throw std::domain_error("ml_asymptotic: n_terms must be >= 1");
    const double a = order.alpha();
    const double lx = std::log(x);
    // log-space evaluation: x^(-n) and 1/Gamma both leave the double range
    // long before the optimal truncation index at large x
    auto term_at = [&](int n) -> double {
        const double g_arg = 1.0 - a * n;
        if (g_arg <= 0.0) {
            const double nearest = std::round(g_arg);
            if (std::abs(g_arg - nearest) < 1e-12) return 0.0;  // Gamma pole
        }
        const double log_abs = -n * lx - std::lgamma(g_arg);
        if (log_abs < -745.0) return 0.0;  // below the double underflow floor
        double sign = (n % 2 == 1) ? 1.0 : -1.0;
        if (g_arg < 0.0) {
            // Gamma is negative on (-1,0), (-3,-2), ...
            const long m = static_cast<long>(std::floor(-g_arg));
            if (m % 2 == 0) sign = -sign;
        }
        return sign * std::exp(log_abs);
    };
    const double first = term_at(1);
    if (std::abs(first) > 1.0)
        throw DivergentRegime("ml_asymptotic: leading term exceeds 1 at x = " +
                              std::to_string(x));
    double sum = 0.0, sum_abs = 0.0;
    double smallest_nonzero = std::numeric_limits<double>::infinity();
    int n = 1;
    for (; n <= n_terms; ++n) {
        const double t = term_at(n);
        const double abs_t = std::abs(t);
        if (abs_t > 0.0) {
            if (abs_t > smallest_nonzero) break;  // past the optimal index
            smallest_nonzero = abs_t;
        }
        sum += t;
        sum_abs += abs_t;
    }
    double omitted = (n <= n_terms) ? std::abs(term_at(n)) : std::abs(term_at(n_terms + 1));
    if (omitted == 0.0) omitted = std::abs(term_at(n + 1));
    // rounding floor of the summation itself
    omitted += 8.0 * std::numeric_limits<double>::epsilon() * sum_abs;
    return {sum, Method::asymptotic, omitted};
}

// E_alpha(-x) through the Laplace integral over the branch-cut spectrum,
// with t := x^(1/alpha). Valid for 0 < alpha < 1, x > 0.
inline EvalResult ml_integral(const Order& order, double x, double tol) {
    const double a = order.alpha();
    if (!(a < 1.0)) throw std::domain_error("ml_integral: requires alpha < 1");
    if (!(x > 0.0)) throw std::domain_error("ml_integral: requires x > 0");
    const double t = std::pow(x, 1.0 / a);
    auto q = detail::branch_cut_integral(a, t, tol);
    return {q.value, Method::integral, q.error};
}

// Elementary closed forms: alpha = 1 (exponential) and alpha = 1/2
// (scaled complementary error function). Empty optional otherwise.
inline std::optional<EvalResult> ml_closed_form(const Order& order, double x) {
    const double a = order.alpha();
    const double tiny = 4.0 * std::numeric_limits<double>::epsilon();
    if (a == 1.0) {
        const double v = std::exp(-x);
        return EvalResult{v, Method::closed_form, tiny * std::abs(v)};
    }
    if (a == 0.5 && x >= 0.0) {
        const double v = detail::erfcx(x);
        return EvalResult{v, Method::closed_form, tiny * std::abs(v)};
    }
    return std::nullopt;
}

// Dispatcher: closed form when available, series for x^alpha <= 1,
// optimally truncated asymptotics when they certify tol, and the branch-cut
// integral in the remaining midrange.
inline EvalResult ml_eval(const Order& order, double x, double tol) {
    if (!(x >= 0.0)) throw std::domain_error("ml_eval: x must be >= 0");
    if (!(tol > 0.0)) throw std::domain_error("ml_eval: tol must be > 0");
    if (auto cf = ml_closed_form(order, x)) return *cf;
    if (x == 0.0) return {1.0, Method::series, 0.0};
    const double a = order.alpha();
    if (std::pow(x, a) <= 1.0) {
        try {
            return ml_series(order, x, tol);
        } catch (const CatastrophicCancellation&) {
            // fall through to the integral route
        }
    } else {
        try {
            EvalResult r = ml_asymptotic(order, x, 400);
            if (r.err_estimate <= tol) return r;
        } catch (const DivergentRegime&) {
        }
    }
    try {
        return ml_integral(order, x, tol);
    } catch (const QuadratureFailure&) {
        throw AccuracyUnreachable("ml_eval: no algorithm meets tol at x = " +
                                  std::to_string(x));
    }
}

// The relaxation function e_alpha(t) = E_alpha(-t^alpha).
inline EvalResult e_alpha(const Order& order, double t, double tol) {
    if (!(t >= 0.0)) throw std::domain_error("e_alpha: t must be >= 0");
    if (order.alpha() == 1.0) return *ml_closed_form(order, t);
    return ml_eval(order, std::pow(t, order.alpha()), tol);
}

// Short-time face of e_alpha: exp(-t^alpha / Gamma(1 + alpha)).
inline double stretched_exponential(const Order& order, double t) {
    if (!(t >= 0.0)) throw std::domain_error("stretched_exponential: t >= 0");
    const double a = order.alpha();
    return std::exp(-std::pow(t, a) / std::tgamma(1.0 + a));
}

// Long-time face of e_alpha: t^(-alpha) / Gamma(1 - alpha), alpha < 1.
inline double power_law_tail(const Order& order, double t) {
    const double a = order.alpha();
    if (a == 1.0)
        throw std::domain_error("power_law_tail: undefined at alpha = 1");
    if (!(t > 0.0)) throw std::domain_error("power_law_tail: t must be > 0");
    return std::pow(t, -a) / std::tgamma(1.0 - a);
}

// Small-order rational approximation 1 / (1 + x / Gamma(1 + p)); exact slope
// at the origin, intended for p << 1.
inline double rational_approx(const Order& order, double x) {
    if (!(x >= 0.0)) throw std::domain_error("rational_approx: x must be >= 0");
    return 1.0 / (1.0 + x / std::tgamma(1.0 + order.alpha()));
}

// Two-sided bounds 1/(1 + t^a Gamma(1-a)) <= e_alpha(t) <= 1/(1 + t^a /
// Gamma(1+a)), valid for 0 < alpha < 1 and strict for t > 0.
inline BoundsPair ml_bounds(const Order& order, double t) {
    const double a = order.alpha();
    if (!(a < 1.0)) throw std::domain_error("ml_bounds: requires alpha < 1");
    if (!(t >= 0.0)) throw std::domain_error("ml_bounds: t must be >= 0");
    const double ta = std::pow(t, a);
    BoundsPair b;
    b.lower = 1.0 / (1.0 + ta * std::tgamma(1.0 - a));
    b.upper = 1.0 / (1.0 + ta / std::tgamma(1.0 + a));
    return b;
}

}  // namespace mlr
