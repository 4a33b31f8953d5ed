#pragma once

#include <span>

#include "uqkit/errors.hpp"

namespace uqkit {

// Ordinary least squares line y = slope * x + intercept.
struct LinearFit {
    double slope = 1.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

// Minimises squared residuals in y only. Needs two points with distinct x;
// identical x values raise SingularFit.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

double apply_calibration(const LinearFit& f, double x);

}  // namespace uqkit
