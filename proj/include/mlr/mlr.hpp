#pragma once

#include "mlr/csv.hpp"
#include "mlr/curve.hpp"
#include "mlr/dielectrics.hpp"
#include "mlr/errors.hpp"
#include "mlr/fracops.hpp"
#include "mlr/ml.hpp"
#include "mlr/quadrature.hpp"
#include "mlr/reports.hpp"
#include "mlr/spectra.hpp"
#include "mlr/verify.hpp"
