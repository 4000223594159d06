#pragma once

#include <stdexcept>
#include <string>

namespace mlr {

// Thrown when alternating-series summation loses too many digits to
// cancellation; the caller should switch to another algorithm.
struct CatastrophicCancellation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an asymptotic expansion is requested outside its regime
// (the first term already exceeds 1).
struct DivergentRegime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance within its
// evaluation budget.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No available algorithm can certify the requested tolerance.
struct AccuracyUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Discretization error estimate of a grid-based operator exceeds the
// requested tolerance at the refinement cap.
struct GridTooCoarse : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The integrand of a Laplace transform is not decaying on the probe horizon.
struct TailUnbounded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed form was requested for an order it does not cover.
struct UnsupportedOrder : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Implicit time step produced a non-positive diagonal weight.
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mlr
