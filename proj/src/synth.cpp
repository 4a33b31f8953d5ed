#include "uqkit/synth.hpp"

#include <cmath>

#include "uqkit/rng.hpp"

namespace uqkit {

namespace {

// Stream ids within a seed.
constexpr std::uint64_t kNoiseStream = 0;
constexpr std::uint64_t kTModeStream = 1;
constexpr std::uint64_t kHModeStream = 2;

double mode_offset(double u, const TrimodalSpec& spec) {
    if (u < spec.side_weight) return -spec.separation;
    if (u < 2.0 * spec.side_weight) return spec.separation;
    return 0.0;
}

}  // namespace

void TrimodalSpec::validate() const {
    if (!(separation >= 0.0)) throw InvalidParams("separation must be non-negative");
    if (!(side_weight >= 0.0) || !(side_weight <= 0.5))
        throw InvalidParams("side_weight must lie in [0, 0.5]");
}

void SynthConfig::validate() const {
    model.validate();
    if (!(sample_rate_hz > 0.0)) throw InvalidParams("sample_rate_hz must be positive");
    if (n_samples == 0) throw InvalidParams("n_samples must be positive");
    if (mode == SynthMode::step_response) step.validate();
    if (mode == SynthMode::trimodal) trimodal.validate();
}

PairedSeries generate(const SynthConfig& cfg) {
    cfg.validate();

    const std::uint64_t noise_key = rng::stream_key(cfg.seed, kNoiseStream);
    const std::uint64_t t_mode_key = rng::stream_key(cfg.seed, kTModeStream);
    const std::uint64_t h_mode_key = rng::stream_key(cfg.seed, kHModeStream);

    const NoiseModelParams& m = cfg.model;
    const double chol = std::sqrt((1.0 - m.rho) * (1.0 + m.rho));

    PairedSeries out;
    out.timestamp_s.resize(cfg.n_samples);
    out.t_values.resize(cfg.n_samples);
    out.h_values.resize(cfg.n_samples);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t is = 0; is < static_cast<std::ptrdiff_t>(cfg.n_samples); ++is) {
        const std::uint64_t i = static_cast<std::uint64_t>(is);
        const auto [z1, z2] = rng::normal_pair(noise_key, i);
        double t = m.sigma_t * z1;
        double h = m.sigma_h * (m.rho * z1 + chol * z2);

        switch (cfg.mode) {
            case SynthMode::constant:
                t += m.mu_t;
                h += m.mu_h;
                break;
            case SynthMode::step_response:
                t += step_response(cfg.step, static_cast<double>(i) / cfg.sample_rate_hz);
                h += m.mu_h;
                break;
            case SynthMode::trimodal:
                t += m.mu_t +
                     m.sigma_t * mode_offset(rng::uniform_pos(t_mode_key, i), cfg.trimodal);
                h += m.mu_h +
                     m.sigma_h * mode_offset(rng::uniform_pos(h_mode_key, i), cfg.trimodal);
                break;
        }

        out.timestamp_s[is] = static_cast<double>(i) / cfg.sample_rate_hz;
        out.t_values[is] = t;
        out.h_values[is] = h;
    }
    return out;
}

double trimodal_mixture_kurtosis(const TrimodalSpec& spec) {
    spec.validate();
    const double w = spec.side_weight;
    const double d2 = spec.separation * spec.separation;
    const double m2 = 1.0 + 2.0 * w * d2;
    const double m4 = 3.0 + 2.0 * w * (d2 * d2 + 6.0 * d2);
    return m4 / (m2 * m2);
}

}  // namespace uqkit
