#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uqkit/errors.hpp"
#include "uqkit/noise_model.hpp"
#include "uqkit/thermal.hpp"

namespace uqkit {

enum class SynthMode { constant, step_response, trimodal };

// Symmetric three-mode contamination: offsets {-d, 0, +d} in units of each
// channel's sigma, side modes carrying side_weight each. side_weight = 1/3
// gives equal weights; small side weights give rare outlier modes.
struct TrimodalSpec {
    double separation = 5.0;
    double side_weight = 1.0 / 3.0;

    void validate() const;
};

struct SynthConfig {
    NoiseModelParams model;
    double sample_rate_hz = 1.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
    SynthMode mode = SynthMode::constant;
    ThermalModel step{};      // step_response mode: the temperature measurand
                              // follows this lag curve; model.mu_t is ignored
    TrimodalSpec trimodal{};  // trimodal mode only

    void validate() const;
};

struct PairedSeries {
    std::vector<double> timestamp_s;
    std::vector<double> t_values;
    std::vector<double> h_values;
};

// Deterministic per (config, seed); byte-identical for any thread count.
// Constant mode draws iid pairs from the bivariate Gaussian of `model` via
// the Cholesky construction; timestamps are exact multiples of 1/fs.
PairedSeries generate(const SynthConfig& cfg);

// Closed-form raw kurtosis of the three-mode mixture (independent of the
// channel sigma, since the separation is expressed in sigma units).
double trimodal_mixture_kurtosis(const TrimodalSpec& spec);

}  // namespace uqkit
