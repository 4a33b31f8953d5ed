#pragma once

#include "uqkit/errors.hpp"

namespace uqkit {

// Parameters of the bivariate Gaussian noise model for a paired
// (humidity, temperature) channel.
struct NoiseModelParams {
    double mu_h = 0.0;     // %RH
    double mu_t = 0.0;     // degC
    double sigma_h = 1.0;  // > 0
    double sigma_t = 1.0;  // > 0
    double rho = 0.0;      // in [-1, 1]

    void validate() const;
};

struct ConditionalResult {
    double sigma_hat = 0.0;           // <= sigma_h always
    double reduction_fraction = 0.0;  // 1 - sigma_hat / sigma_h, in [0, 1]
};

// Joint density at (h, t). Rejects |rho| = 1 (DegenerateModel); evaluated in
// log space internally, returned in linear space.
double joint_pdf(const NoiseModelParams& p, double h, double t);

// Density of the humidity channel conditioned on t = mu_t: a Gaussian with
// mean mu_h and standard deviation sigma_h * sqrt(1 - rho^2).
double conditional_pdf_at_mean_t(const NoiseModelParams& p, double h);

// Conditional standard deviation and its reduction fraction. Unlike the
// densities, rho = +/-1 is a valid input here (sigma_hat = 0).
ConditionalResult conditional_sigma(double sigma_h, double rho);

}  // namespace uqkit
