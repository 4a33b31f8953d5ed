#include "uqkit/pipeline.hpp"

#include <cmath>

#include "uqkit/noise_model.hpp"
#include "uqkit/stats.hpp"

namespace uqkit {

void SampleWindow::validate() const {
    if (t_values.size() != h_values.size())
        throw ShapeError("t and h channels differ in length");
    if (t_values.empty()) throw InvalidWindow("empty window");
    if (!(sample_rate_hz > 0.0)) throw InvalidParams("sample_rate_hz must be positive");
    for (double v : t_values)
        if (!std::isfinite(v)) throw InvalidWindow("non-finite value in t channel");
    for (double v : h_values)
        if (!std::isfinite(v)) throw InvalidWindow("non-finite value in h channel");
}

UqReport algorithm1_baseline(const SampleWindow& w) {
    w.validate();
    const Moments mt = compute_moments(w.t_values);
    const Moments mh = compute_moments(w.h_values);
    UqReport r;
    r.mu_t = mt.mean;
    r.mu_h = mh.mean;
    r.sigma_t = sample_std(mt);
    r.sigma_h = sample_std(mh);
    r.sigma_hat_h = r.sigma_h;
    r.reduction_fraction = 0.0;
    return r;
}

UqReport algorithm2_conditional(const SampleWindow& w, const GateThresholds& g,
                                GateChannels channels) {
    w.validate();
    if (w.t_values.size() < 4)
        throw InvalidWindow("conditional pass needs at least 4 samples");

    const Moments mt = compute_moments(w.t_values);
    const Moments mh = compute_moments(w.h_values);
    UqReport r;
    r.mu_t = mt.mean;
    r.mu_h = mh.mean;
    r.sigma_t = sample_std(mt);
    r.sigma_h = sample_std(mh);

    // A constant channel makes the correlation (and the scaled moments)
    // undefined: report a degenerate gate failure, not an error.
    if (mt.m2 == 0.0 || mh.m2 == 0.0) {
        r.gate = GateOutcome::failed_degenerate;
        if (mt.m2 != 0.0) {
            r.skew_t = skewness(mt);
            r.kurt_t = kurtosis(mt);
        }
        if (mh.m2 != 0.0) {
            r.skew_h = skewness(mh);
            r.kurt_h = kurtosis(mh);
        }
        r.sigma_hat_h = r.sigma_h;
        r.reduction_fraction = 0.0;
        return r;
    }

    r.skew_t = skewness(mt);
    r.kurt_t = kurtosis(mt);
    r.skew_h = skewness(mh);
    r.kurt_h = kurtosis(mh);

    const auto within = [&g](double skew, double kurt) {
        return std::abs(skew) < g.max_abs_skew && kurt < g.max_kurtosis;
    };
    bool pass = true;
    if (channels != GateChannels::humidity_only) pass = pass && within(*r.skew_t, *r.kurt_t);
    if (channels != GateChannels::temperature_only) pass = pass && within(*r.skew_h, *r.kurt_h);

    if (!pass) {
        r.gate = GateOutcome::failed_thresholds;
        r.sigma_hat_h = r.sigma_h;
        r.reduction_fraction = 0.0;
        return r;
    }

    r.gate = GateOutcome::passed;
    r.rho = pearson_correlation(compute_comoments(w.h_values, w.t_values));
    const ConditionalResult cond = conditional_sigma(r.sigma_h, *r.rho);
    r.sigma_hat_h = cond.sigma_hat;
    r.reduction_fraction = cond.reduction_fraction;
    return r;
}

std::vector<UqReport> process_stream(std::span<const double> t_series,
                                     std::span<const double> h_series,
                                     const StreamConfig& cfg) {
    if (t_series.size() != h_series.size())
        throw ShapeError("t and h series differ in length");
    if (cfg.window_size == 0) throw InvalidParams("window_size must be positive");
    if (t_series.size() < cfg.window_size)
        throw InsufficientData("series shorter than one window");

    const std::size_t n_windows = t_series.size() / cfg.window_size;
    std::vector<UqReport> reports(n_windows);

    // Exceptions may not escape the parallel region; keep the first one.
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_windows); ++i) {
        try {
            const std::size_t lo = static_cast<std::size_t>(i) * cfg.window_size;
            const SampleWindow w{t_series.subspan(lo, cfg.window_size),
                                 h_series.subspan(lo, cfg.window_size), cfg.sample_rate_hz};
            reports[static_cast<std::size_t>(i)] =
                cfg.mode == PipelineMode::baseline
                    ? algorithm1_baseline(w)
                    : algorithm2_conditional(w, cfg.thresholds, cfg.channels);
        } catch (...) {
#pragma omp critical
            if (failure == nullptr) failure = std::current_exception();
        }
    }
    if (failure != nullptr) std::rethrow_exception(failure);
    return reports;
}

}  // namespace uqkit
