#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uqkit/errors.hpp"

namespace uqkit {

// One window of paired, coherently sampled readings.
struct SampleWindow {
    std::span<const double> t_values;  // degC
    std::span<const double> h_values;  // %RH
    double sample_rate_hz = 1.0;

    // Equal lengths, positive rate, finite values.
    void validate() const;
};

// Rule-of-thumb normality gate: |skew| < max_abs_skew and kurt < max_kurtosis,
// both strict.
struct GateThresholds {
    double max_abs_skew = 2.0;
    double max_kurtosis = 7.0;
};

// Which channel's moments the gate inspects. Correlation always needs both
// channels non-degenerate, so a constant channel fails the gate regardless
// of scope.
enum class GateChannels { both, temperature_only, humidity_only };

enum class GateOutcome {
    not_evaluated,     // baseline pass, no gate
    passed,
    failed_thresholds,
    failed_degenerate  // zero-variance channel
};

struct UqReport {
    double mu_t = 0.0;
    double mu_h = 0.0;
    double sigma_t = 0.0;
    double sigma_h = 0.0;
    std::optional<double> skew_t, skew_h, kurt_t, kurt_h;
    GateOutcome gate = GateOutcome::not_evaluated;
    std::optional<double> rho;        // present iff gate passed
    double sigma_hat_h = 0.0;         // equals sigma_h when the gate fails
    double reduction_fraction = 0.0;  // 0 when the gate fails

    bool gate_passed() const { return gate == GateOutcome::passed; }
};

// Means and standard deviations of both channels, nothing else.
UqReport algorithm1_baseline(const SampleWindow& w);

// Gated conditional reduction: computes both channels' moments, applies the
// normality gate, and on pass shrinks sigma_h by sqrt(1 - rho^2). On failure
// the report falls back to sigma_hat_h = sigma_h.
UqReport algorithm2_conditional(const SampleWindow& w, const GateThresholds& g = {},
                                GateChannels channels = GateChannels::both);

enum class PipelineMode { baseline, conditional };

struct StreamConfig {
    std::size_t window_size = 30;
    GateThresholds thresholds{};
    GateChannels channels = GateChannels::both;
    PipelineMode mode = PipelineMode::conditional;
    double sample_rate_hz = 1.0;
};

// Chunks the series into consecutive non-overlapping windows and evaluates
// each one; the trailing remainder is discarded. Windows are processed in
// parallel; output order equals input order.
std::vector<UqReport> process_stream(std::span<const double> t_series,
                                     std::span<const double> h_series,
                                     const StreamConfig& cfg);

}  // namespace uqkit
