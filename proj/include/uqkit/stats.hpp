#pragma once

#include <span>

#include "uqkit/errors.hpp"

namespace uqkit {

// Centered power sums of a sample: mean plus Mk = sum (x - mean)^k.
// Accumulated per fixed-size block and merged in index order, so results do
// not depend on the number of threads.
struct Moments {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
};

// Pairwise merge of centered sums (Chan / Pebay update).
Moments merge(const Moments& a, const Moments& b);

Moments compute_moments(std::span<const double> values);

// Paired-channel sums for correlation: means plus centered cross products.
struct CoMoments {
    double n = 0.0;
    double mean_x = 0.0;
    double mean_y = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
};

CoMoments merge(const CoMoments& a, const CoMoments& b);

CoMoments compute_comoments(std::span<const double> x, std::span<const double> y);

// Window statistics. Windows must hold finite values; sizes below each
// statistic's minimum raise InvalidWindow, zero-variance windows raise
// DegenerateWindow where scale normalisation is involved.

double mean(std::span<const double> w);

// Unbiased (N-1 denominator) sample standard deviation; zero iff all values
// are equal.
double sample_std(std::span<const double> w);

// Standardised third moment g1 = m3 / m2^1.5 with 1/N central moments.
double skewness(std::span<const double> w);

// Raw (Pearson) standardised fourth moment b2 = m4 / m2^2; Gaussian = 3.
double kurtosis(std::span<const double> w);

// Sample Pearson coefficient, clamped to [-1, 1] after computation.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

// Same statistics derived from already-accumulated sums.
double mean(const Moments& m);
double sample_std(const Moments& m);
double skewness(const Moments& m);
double kurtosis(const Moments& m);
double pearson_correlation(const CoMoments& c);

}  // namespace uqkit
