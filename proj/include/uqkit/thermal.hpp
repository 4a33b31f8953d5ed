#pragma once

#include <span>

#include "uqkit/errors.hpp"

namespace uqkit {

// First-order lag: value(t) = final + (initial - final) * exp(-t / tau).
struct ThermalModel {
    double initial_value = 0.0;  // degC
    double final_value = 0.0;    // degC
    double tau_s = 1.0;          // > 0

    void validate() const;
};

double step_response(const ThermalModel& m, double t_seconds);

// Time constant from a step-response trace: the interpolated time at which
// the trace crosses initial + (final - initial) * (1 - e^-1). The trace must
// start on the initial side of the crossing and bracket it.
double estimate_time_constant(std::span<const double> time_s,
                              std::span<const double> value, double initial,
                              double final);

struct ConstraintCheck {
    bool pass = false;
    double ratio = 0.0;  // tau * fs, dimensionless
    double margin = 0.0;
};

// Oversampling check: the sample period must be at least `margin` times
// shorter than the time constant, i.e. tau * fs >= margin.
ConstraintCheck check_sampling_constraint(double sample_rate_hz, double tau_s,
                                          double margin = 10.0);

}  // namespace uqkit
