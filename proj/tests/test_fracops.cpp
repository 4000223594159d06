#include <doctest.h>

#include <cmath>

#include "mlr/fracops.hpp"
#include "mlr/ml.hpp"

using mlr::FracOrder;
using mlr::Order;
using mlr::SampledFunction;

TEST_CASE("FracOrder domain") {
    CHECK_THROWS_AS(FracOrder(0.0), std::domain_error);
    CHECK_THROWS_AS(FracOrder(1.0), std::domain_error);
    CHECK(FracOrder(0.5).mu() == 0.5);
}

TEST_CASE("Caputo derivative analytic cases") {
    SampledFunction constant([](double) { return 3.7; });
    CHECK(std::abs(mlr::caputo_derivative(constant, FracOrder(0.5), 2.0, 1e-8)) < 1e-8);

    SampledFunction identity([](double t) { return t; });
    // *D^mu t = t^(1-mu) / Gamma(2-mu)
    CHECK(mlr::caputo_derivative(identity, FracOrder(0.5), 1.0, 1e-8) ==
          doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-7));
    CHECK(mlr::caputo_derivative(identity, FracOrder(0.5), 1.0, 1e-8) ==
          doctest::Approx(1.128379).epsilon(1e-5));
    CHECK(mlr::caputo_derivative(identity, FracOrder(0.25), 4.0, 1e-8) ==
          doctest::Approx(std::pow(4.0, 0.75) / std::tgamma(1.75)).epsilon(1e-7));

    // relaxation residual: *D^0.5 e_0.5(t) = -e_0.5(t)
    SampledFunction e_half(
        [](double t) { return mlr::e_alpha(Order(0.5), t, 1e-11).value; });
    CHECK(mlr::caputo_derivative(e_half, FracOrder(0.5), 1.0, 1e-5) ==
          doctest::Approx(-0.427584).epsilon(2.5e-4));
}

TEST_CASE("Caputo derivative accepts sampled curves") {
    // f(t) = t sampled on a uniform grid
    std::vector<double> ts(101), us(101);
    for (int i = 0; i <= 100; ++i) {
        ts[i] = 2.0 * i / 100.0;
        us[i] = ts[i];
    }
    SampledFunction f{mlr::Curve(ts, us)};
    CHECK(mlr::caputo_derivative(f, FracOrder(0.5), 1.0, 1e-6) ==
          doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-6));
}

TEST_CASE("Riemann-Liouville derivative via the Caputo relationship") {
    SampledFunction constant([](double) { return 2.0; });
    // D^0.5 c = c t^(-1/2) / Gamma(1/2)
    CHECK(mlr::rl_derivative(constant, FracOrder(0.5), 1.0, 1e-8) ==
          doctest::Approx(2.0 * 0.564190).epsilon(1e-5));

    // f(0+) = 0 makes both derivatives coincide
    SampledFunction zero_start([](double t) { return std::sin(t); });
    const double rl = mlr::rl_derivative(zero_start, FracOrder(0.3), 1.5, 1e-7);
    const double cap = mlr::caputo_derivative(zero_start, FracOrder(0.3), 1.5, 1e-7);
    CHECK(rl == doctest::Approx(cap).epsilon(1e-9));

    SampledFunction e_half(
        [](double t) { return mlr::e_alpha(Order(0.5), t, 1e-11).value; });
    CHECK(mlr::rl_derivative(e_half, FracOrder(0.5), 1.0, 1e-5) ==
          doctest::Approx(-0.427584 + 0.564190).epsilon(2e-3));
}

TEST_CASE("mu -> 0+ limit: Caputo tends to f(t) - f(0+)") {
    SampledFunction f([](double t) { return std::cos(t) + 2.0 * t; });
    const double t = 1.3;
    const double expected = f(t) - f(0.0);
    const double got = mlr::caputo_derivative(f, FracOrder(1e-3), t, 1e-7);
    CHECK(std::abs(got - expected) < 0.01 * std::abs(expected));
}

TEST_CASE("Laplace transform basics") {
    SampledFunction decay([](double t) { return std::exp(-t); });
    CHECK(mlr::laplace_transform(decay, 1.0, 1e-8) ==
          doctest::Approx(0.5).epsilon(1e-7));
    CHECK(mlr::laplace_transform(decay, 2.0, 1e-8) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-7));

    SampledFunction growing([](double t) { return std::exp(t); });
    CHECK_THROWS_AS(mlr::laplace_transform(growing, 1.0, 1e-8), mlr::TailUnbounded);
}

TEST_CASE("Laplace pair of e_alpha") {
    SampledFunction e_half(
        [](double t) { return mlr::e_alpha(Order(0.5), t, 1e-10).value; });
    CHECK(std::abs(mlr::laplace_transform(e_half, 1.0, 1e-7) - 0.5) < 1e-6);

    SampledFunction e_q(
        [](double t) { return mlr::e_alpha(Order(0.25), t, 1e-10).value; });
    const double expected = std::pow(2.0, -0.75) / (std::pow(2.0, 0.25) + 1.0);
    CHECK(expected == doctest::Approx(0.27162).epsilon(1e-4));
    CHECK(std::abs(mlr::laplace_transform(e_q, 2.0, 1e-7) - expected) < 1e-6);
}

TEST_CASE("Tauberian consistency of the transform at extreme s") {
    // s -> inf: L{e_a}(s) ~ (1/s)(1 - s^(-a)); s -> 0: ~ s^(a-1)(1 - s^a)
    for (double a : {0.25, 0.5, 0.75}) {
        const Order order(a);
        SampledFunction f([order](double t) { return mlr::e_alpha(order, t, 1e-10).value; });
        // the first neglected correction is of relative size s^(-2a) / s^(2a)
        const double s_hi = 1e3;
        const double big = mlr::laplace_transform(f, s_hi, 1e-9);
        const double big_expansion = (1.0 - std::pow(s_hi, -a)) / s_hi;
        CHECK(std::abs(big - big_expansion) / big <
              1.05 * std::pow(s_hi, -2.0 * a) + 1e-5);
        const double s_lo = 1e-3;
        const double small = mlr::laplace_transform(f, s_lo, 1e-4);
        const double small_expansion = std::pow(s_lo, a - 1.0) * (1.0 - std::pow(s_lo, a));
        CHECK(std::abs(small - small_expansion) / small <
              1.05 * std::pow(s_lo, 2.0 * a) + 1e-3);
    }
}

TEST_CASE("property: relaxation residuals across orders and times") {
    for (double a : {0.25, 0.5, 0.75}) {
        const Order order(a);
        SampledFunction f([order](double t) { return mlr::e_alpha(order, t, 1e-10).value; });
        for (double t : {0.25, 0.5, 1.0, 2.0, 5.0}) {
            const double e = mlr::e_alpha(order, t, 1e-10).value;
            // Caputo form
            CHECK(std::abs(mlr::caputo_derivative(f, FracOrder(a), t, 2e-5) + e) < 1e-4);
            // Riemann-Liouville form, d/dt by central difference
            const double h = 1e-4 * t;
            const double dedt = (mlr::e_alpha(order, t + h, 1e-11).value -
                                 mlr::e_alpha(order, t - h, 1e-11).value) / (2.0 * h);
            const double rl = mlr::rl_derivative(f, FracOrder(1.0 - a), t, 2e-5);
            CHECK(std::abs(dedt + rl) < 1e-3);
        }
    }
}
