#pragma once

#include <cmath>
#include <span>

#include "uqkit/errors.hpp"

// Plain serial two-pass implementations. They are the comparison baseline
// for the blocked kernels in stats.cpp, the benchmark reference, and --
// being templated on the scalar -- the substrate for operation counting.

namespace uqkit::reference {

template <class Real>
Real mean(std::span<const Real> w) {
    if (w.empty()) throw InvalidWindow("empty window");
    Real s{0.0};
    for (const Real& x : w) s = s + x;
    return s / Real{static_cast<double>(w.size())};
}

template <class Real>
Real sample_std(std::span<const Real> w) {
    using std::sqrt;
    if (w.size() < 2) throw InvalidWindow("sample_std needs at least 2 values");
    const Real mu = mean(w);
    Real m2{0.0};
    for (const Real& x : w) {
        const Real d = x - mu;
        m2 = m2 + d * d;
    }
    return sqrt(m2 / Real{static_cast<double>(w.size() - 1)});
}

template <class Real>
Real skewness(std::span<const Real> w) {
    using std::pow;
    if (w.size() < 3) throw InvalidWindow("skewness needs at least 3 values");
    const Real n{static_cast<double>(w.size())};
    const Real mu = mean(w);
    Real m2{0.0};
    Real m3{0.0};
    for (const Real& x : w) {
        const Real d = x - mu;
        const Real d2 = d * d;
        m2 = m2 + d2;
        m3 = m3 + d2 * d;
    }
    m2 = m2 / n;
    m3 = m3 / n;
    if (!(m2 > Real{0.0})) throw DegenerateWindow("skewness undefined for zero variance");
    return m3 / pow(m2, Real{1.5});
}

template <class Real>
Real kurtosis(std::span<const Real> w) {
    if (w.size() < 4) throw InvalidWindow("kurtosis needs at least 4 values");
    const Real n{static_cast<double>(w.size())};
    const Real mu = mean(w);
    Real m2{0.0};
    Real m4{0.0};
    for (const Real& x : w) {
        const Real d = x - mu;
        const Real d2 = d * d;
        m2 = m2 + d2;
        m4 = m4 + d2 * d2;
    }
    m2 = m2 / n;
    m4 = m4 / n;
    if (!(m2 > Real{0.0})) throw DegenerateWindow("kurtosis undefined for zero variance");
    return m4 / (m2 * m2);
}

template <class Real>
Real pearson_correlation(std::span<const Real> a, std::span<const Real> b) {
    using std::sqrt;
    if (a.size() != b.size()) throw ShapeError("paired windows differ in length");
    if (a.size() < 2) throw InvalidWindow("correlation needs at least 2 values");
    const Real ma = mean(a);
    const Real mb = mean(b);
    Real sxx{0.0};
    Real syy{0.0};
    Real sxy{0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Real dx = a[i] - ma;
        const Real dy = b[i] - mb;
        sxx = sxx + dx * dx;
        syy = syy + dy * dy;
        sxy = sxy + dx * dy;
    }
    if (!(sxx > Real{0.0}) || !(syy > Real{0.0}))
        throw DegenerateWindow("correlation undefined for zero variance");
    Real r = sxy / sqrt(sxx * syy);
    if (r > Real{1.0}) r = Real{1.0};
    if (r < Real{-1.0}) r = Real{-1.0};
    return r;
}

template <class Real>
struct WindowReport {
    Real mu_t{0.0}, mu_h{0.0};
    Real sigma_t{0.0}, sigma_h{0.0};
    Real skew_t{0.0}, skew_h{0.0};
    Real kurt_t{0.0}, kurt_h{0.0};
    bool gate_passed = false;
    Real rho{0.0};
    Real sigma_hat_h{0.0};
    Real reduction_fraction{0.0};
};

// Serial reference of the gated conditional-reduction pass over one window
// (both channels gated). Mirrors algorithm2_conditional step for step.
template <class Real>
WindowReport<Real> conditional_window(std::span<const Real> t, std::span<const Real> h,
                                      Real max_abs_skew, Real max_kurtosis) {
    using std::abs;
    using std::sqrt;
    WindowReport<Real> r;
    r.mu_t = mean(t);
    r.mu_h = mean(h);
    r.sigma_t = sample_std(t);
    r.sigma_h = sample_std(h);
    r.skew_t = skewness(t);
    r.skew_h = skewness(h);
    r.kurt_t = kurtosis(t);
    r.kurt_h = kurtosis(h);
    r.gate_passed = abs(r.skew_t) < max_abs_skew && r.kurt_t < max_kurtosis &&
                    abs(r.skew_h) < max_abs_skew && r.kurt_h < max_kurtosis;
    if (r.gate_passed) {
        r.rho = pearson_correlation(h, t);
        r.sigma_hat_h = r.sigma_h * sqrt((Real{1.0} - r.rho) * (Real{1.0} + r.rho));
        r.reduction_fraction = Real{1.0} - sqrt((Real{1.0} - r.rho) * (Real{1.0} + r.rho));
    } else {
        r.sigma_hat_h = r.sigma_h;
        r.reduction_fraction = Real{0.0};
    }
    return r;
}

}  // namespace uqkit::reference
