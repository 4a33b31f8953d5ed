#include "uqkit/thermal.hpp"

#include <cmath>

namespace uqkit {

void ThermalModel::validate() const {
    if (!(tau_s > 0.0)) throw InvalidParams("tau_s must be positive");
    if (!std::isfinite(initial_value) || !std::isfinite(final_value))
        throw InvalidParams("model values must be finite");
}

double step_response(const ThermalModel& m, double t_seconds) {
    m.validate();
    if (t_seconds < 0.0) throw InvalidTime("time must be non-negative");
    return m.final_value + (m.initial_value - m.final_value) * std::exp(-t_seconds / m.tau_s);
}

double estimate_time_constant(std::span<const double> time_s,
                              std::span<const double> value, double initial,
                              double final) {
    if (time_s.size() != value.size()) throw ShapeError("trace columns differ in length");
    if (time_s.size() < 10) throw EstimationFailed("trace needs at least 10 points");
    if (initial == final) throw InvalidParams("initial and final must differ");
    for (std::size_t i = 1; i < time_s.size(); ++i)
        if (!(time_s[i] > time_s[i - 1]))
            throw InvalidParams("timestamps must increase strictly");

    const double threshold = initial + (final - initial) * (1.0 - std::exp(-1.0));
    const bool rising = final > initial;
    const auto crossed = [&](double y) { return rising ? y >= threshold : y <= threshold; };

    if (crossed(value[0]))
        throw EstimationFailed("trace starts past the 1 - e^-1 crossing");
    for (std::size_t i = 1; i < value.size(); ++i) {
        if (!crossed(value[i])) continue;
        const double y0 = value[i - 1];
        const double y1 = value[i];
        return time_s[i - 1] + (threshold - y0) * (time_s[i] - time_s[i - 1]) / (y1 - y0);
    }
    throw EstimationFailed("trace never crosses the 1 - e^-1 threshold");
}

ConstraintCheck check_sampling_constraint(double sample_rate_hz, double tau_s,
                                          double margin) {
    if (!(sample_rate_hz > 0.0)) throw InvalidParams("sample_rate_hz must be positive");
    if (!(tau_s > 0.0)) throw InvalidParams("tau_s must be positive");
    if (!(margin >= 1.0)) throw InvalidParams("margin must be at least 1");
    ConstraintCheck r;
    r.ratio = tau_s * sample_rate_hz;
    r.margin = margin;
    r.pass = r.ratio >= margin;
    return r;
}

}  // namespace uqkit
