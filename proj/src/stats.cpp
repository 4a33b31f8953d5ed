#include "uqkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace uqkit {

namespace {

constexpr std::size_t kBlock = 16384;
// Below this size the blocked loop runs on one thread anyway.
constexpr std::size_t kParallelThreshold = 4 * kBlock;

Moments block_moments(const double* p, std::size_t n) {
    bool all_equal = true;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += p[i];
        all_equal = all_equal && (p[i] == p[0]);
    }
    Moments m;
    m.n = static_cast<double>(n);
    if (all_equal) {
        // Exact mean and exactly-zero central sums for constant data; the
        // divided sum may differ from p[0] by rounding.
        m.mean = p[0];
        return m;
    }
    m.mean = sum / m.n;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = p[i] - m.mean;
        const double d2 = d * d;
        m.m2 += d2;
        m.m3 += d2 * d;
        m.m4 += d2 * d2;
    }
    return m;
}

CoMoments block_comoments(const double* x, const double* y, std::size_t n) {
    bool x_equal = true;
    bool y_equal = true;
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        x_equal = x_equal && (x[i] == x[0]);
        y_equal = y_equal && (y[i] == y[0]);
    }
    CoMoments c;
    c.n = static_cast<double>(n);
    c.mean_x = x_equal ? x[0] : sx / c.n;
    c.mean_y = y_equal ? y[0] : sy / c.n;
    if (x_equal && y_equal) return c;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - c.mean_x;
        const double dy = y[i] - c.mean_y;
        c.sxx += dx * dx;
        c.syy += dy * dy;
        c.sxy += dx * dy;
    }
    return c;
}

}  // namespace

Moments merge(const Moments& a, const Moments& b) {
    if (a.n == 0.0) return b;
    if (b.n == 0.0) return a;
    const double n = a.n + b.n;
    const double d = b.mean - a.mean;
    const double d2 = d * d;
    Moments r;
    r.n = n;
    r.mean = a.mean + d * (b.n / n);
    r.m2 = a.m2 + b.m2 + d2 * a.n * b.n / n;
    r.m3 = a.m3 + b.m3 + d * d2 * a.n * b.n * (a.n - b.n) / (n * n) +
           3.0 * d * (a.n * b.m2 - b.n * a.m2) / n;
    r.m4 = a.m4 + b.m4 +
           d2 * d2 * a.n * b.n * (a.n * a.n - a.n * b.n + b.n * b.n) / (n * n * n) +
           6.0 * d2 * (a.n * a.n * b.m2 + b.n * b.n * a.m2) / (n * n) +
           4.0 * d * (a.n * b.m3 - b.n * a.m3) / n;
    return r;
}

CoMoments merge(const CoMoments& a, const CoMoments& b) {
    if (a.n == 0.0) return b;
    if (b.n == 0.0) return a;
    const double n = a.n + b.n;
    const double dx = b.mean_x - a.mean_x;
    const double dy = b.mean_y - a.mean_y;
    const double w = a.n * b.n / n;
    CoMoments r;
    r.n = n;
    r.mean_x = a.mean_x + dx * (b.n / n);
    r.mean_y = a.mean_y + dy * (b.n / n);
    r.sxx = a.sxx + b.sxx + dx * dx * w;
    r.syy = a.syy + b.syy + dy * dy * w;
    r.sxy = a.sxy + b.sxy + dx * dy * w;
    return r;
}

Moments compute_moments(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) throw InvalidWindow("empty window");
    if (n <= kBlock) return block_moments(values.data(), n);

    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<Moments> parts(nblocks);
    const double* p = values.data();
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t len = std::min(kBlock, n - lo);
        parts[static_cast<std::size_t>(b)] = block_moments(p + lo, len);
    }
    Moments acc = parts[0];
    for (std::size_t b = 1; b < nblocks; ++b) acc = merge(acc, parts[b]);
    return acc;
}

CoMoments compute_comoments(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ShapeError("paired windows differ in length");
    const std::size_t n = x.size();
    if (n == 0) throw InvalidWindow("empty window");
    if (n <= kBlock) return block_comoments(x.data(), y.data(), n);

    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<CoMoments> parts(nblocks);
    const double* px = x.data();
    const double* py = y.data();
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t len = std::min(kBlock, n - lo);
        parts[static_cast<std::size_t>(b)] = block_comoments(px + lo, py + lo, len);
    }
    CoMoments acc = parts[0];
    for (std::size_t b = 1; b < nblocks; ++b) acc = merge(acc, parts[b]);
    return acc;
}

double mean(const Moments& m) { return m.mean; }

double sample_std(const Moments& m) {
    if (m.n < 2.0) throw InvalidWindow("sample_std needs at least 2 values");
    return std::sqrt(m.m2 / (m.n - 1.0));
}

double skewness(const Moments& m) {
    if (m.n < 3.0) throw InvalidWindow("skewness needs at least 3 values");
    if (m.m2 == 0.0) throw DegenerateWindow("skewness undefined for zero variance");
    return std::sqrt(m.n) * m.m3 / std::pow(m.m2, 1.5);
}

double kurtosis(const Moments& m) {
    if (m.n < 4.0) throw InvalidWindow("kurtosis needs at least 4 values");
    if (m.m2 == 0.0) throw DegenerateWindow("kurtosis undefined for zero variance");
    return m.n * m.m4 / (m.m2 * m.m2);
}

double pearson_correlation(const CoMoments& c) {
    if (c.n < 2.0) throw InvalidWindow("correlation needs at least 2 values");
    if (c.sxx == 0.0 || c.syy == 0.0)
        throw DegenerateWindow("correlation undefined for zero variance");
    const double r = c.sxy / std::sqrt(c.sxx * c.syy);
    return std::clamp(r, -1.0, 1.0);
}

double mean(std::span<const double> w) { return compute_moments(w).mean; }

double sample_std(std::span<const double> w) { return sample_std(compute_moments(w)); }

double skewness(std::span<const double> w) { return skewness(compute_moments(w)); }

double kurtosis(std::span<const double> w) { return kurtosis(compute_moments(w)); }

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
    return pearson_correlation(compute_comoments(a, b));
}

}  // namespace uqkit
