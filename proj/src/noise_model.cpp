#include "uqkit/noise_model.hpp"

#include <cmath>
#include <numbers>

namespace uqkit {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;  // log(2*pi)

// (1 - rho)(1 + rho) keeps precision near |rho| = 1 where rho*rho rounds.
double one_minus_rho_sq(double rho) { return (1.0 - rho) * (1.0 + rho); }

}  // namespace

void NoiseModelParams::validate() const {
    if (!(sigma_h > 0.0) || !(sigma_t > 0.0))
        throw InvalidParams("sigma_h and sigma_t must be positive");
    if (!(std::abs(rho) <= 1.0)) throw InvalidParams("rho must lie in [-1, 1]");
    if (!std::isfinite(mu_h) || !std::isfinite(mu_t))
        throw InvalidParams("means must be finite");
}

double joint_pdf(const NoiseModelParams& p, double h, double t) {
    p.validate();
    if (std::abs(p.rho) == 1.0)
        throw DegenerateModel("joint density undefined at |rho| = 1");
    const double r2c = one_minus_rho_sq(p.rho);
    const double zh = (h - p.mu_h) / p.sigma_h;
    const double zt = (t - p.mu_t) / p.sigma_t;
    const double z = (zh * zh + zt * zt - 2.0 * p.rho * zh * zt) / (2.0 * r2c);
    const double log_norm =
        -(kLog2Pi + std::log(p.sigma_h) + std::log(p.sigma_t) + 0.5 * std::log(r2c));
    return std::exp(log_norm - z);
}

double conditional_pdf_at_mean_t(const NoiseModelParams& p, double h) {
    p.validate();
    if (std::abs(p.rho) == 1.0)
        throw DegenerateModel("conditional density undefined at |rho| = 1");
    const double sigma_hat = p.sigma_h * std::sqrt(one_minus_rho_sq(p.rho));
    const double z = (h - p.mu_h) / sigma_hat;
    const double log_pdf = -0.5 * z * z - std::log(sigma_hat) - 0.5 * kLog2Pi;
    return std::exp(log_pdf);
}

ConditionalResult conditional_sigma(double sigma_h, double rho) {
    if (!(sigma_h > 0.0)) throw InvalidParams("sigma_h must be positive");
    if (!(std::abs(rho) <= 1.0)) throw InvalidParams("rho must lie in [-1, 1]");
    const double shrink = std::sqrt(one_minus_rho_sq(rho));
    ConditionalResult r;
    r.sigma_hat = sigma_h * shrink;
    r.reduction_fraction = 1.0 - shrink;
    return r;
}

}  // namespace uqkit
