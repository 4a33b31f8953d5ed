// Times the OpenMP kernels against the serial reference implementations and
// prints the speedups. Build target only; not part of the test suite.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "uqkit/pipeline.hpp"
#include "uqkit/reference.hpp"
#include "uqkit/stats.hpp"
#include "uqkit/synth.hpp"

using namespace uqkit;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

template <class F>
double time_best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

}  // namespace

int main() {
    const int threads = max_threads();
    std::printf("threads available: %d\n\n", threads);

    SynthConfig cfg;
    cfg.model = {.mu_h = 50.0, .mu_t = 25.0, .sigma_h = 0.5, .sigma_t = 0.1, .rho = 0.4423};
    cfg.sample_rate_hz = 128.3;
    cfg.n_samples = 20'000'000;
    cfg.seed = 1;

    std::printf("generate %zu samples\n", cfg.n_samples);
    set_threads(1);
    const double gen_serial = time_best_of(2, [&] { (void)generate(cfg); });
    set_threads(threads);
    double gen_parallel = 0.0;
    PairedSeries series;
    gen_parallel = time_best_of(2, [&] { series = generate(cfg); });
    std::printf("  serial   %8.3f s\n", gen_serial);
    std::printf("  parallel %8.3f s   speedup %.2fx\n\n", gen_parallel,
                gen_serial / gen_parallel);

    const std::span<const double> t(series.t_values);
    const std::span<const double> h(series.h_values);

    std::printf("moment accumulation over the full series\n");
    const double ref_time = time_best_of(3, [&] {
        volatile double sink = reference::skewness(t) + reference::kurtosis(h) +
                               reference::pearson_correlation(t, h);
        (void)sink;
    });
    set_threads(1);
    const double kernel_serial = time_best_of(3, [&] {
        volatile double sink =
            skewness(t) + kurtosis(h) + pearson_correlation(t, h);
        (void)sink;
    });
    set_threads(threads);
    const double kernel_parallel = time_best_of(3, [&] {
        volatile double sink =
            skewness(t) + kurtosis(h) + pearson_correlation(t, h);
        (void)sink;
    });
    std::printf("  reference (serial two-pass) %8.3f s\n", ref_time);
    std::printf("  kernel, 1 thread            %8.3f s   vs reference %.2fx\n",
                kernel_serial, ref_time / kernel_serial);
    std::printf("  kernel, %d threads           %8.3f s   vs reference %.2fx\n\n",
                threads, kernel_parallel, ref_time / kernel_parallel);

    std::printf("windowed conditional pass, N = 30 (%zu windows)\n",
                series.t_values.size() / 30);
    StreamConfig sc;
    set_threads(1);
    const double stream_serial =
        time_best_of(3, [&] { (void)process_stream(t, h, sc); });
    set_threads(threads);
    const double stream_parallel =
        time_best_of(3, [&] { (void)process_stream(t, h, sc); });
    std::printf("  1 thread  %8.3f s\n", stream_serial);
    std::printf("  %d threads %8.3f s   speedup %.2fx\n", threads, stream_parallel,
                stream_serial / stream_parallel);
    return 0;
}
