#include "uqkit/calibration.hpp"

#include <cmath>

namespace uqkit {

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ShapeError("point columns differ in length");
    if (x.size() < 2) throw InvalidParams("fit needs at least 2 points");

    const double n = static_cast<double>(x.size());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n;
    const double my = sy / n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
    }
    if (sxx == 0.0) throw SingularFit("all x values identical");

    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;

    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss += r * r;
    }
    f.rms_residual = std::sqrt(ss / n);
    return f;
}

double apply_calibration(const LinearFit& f, double x) { return f.slope * x + f.intercept; }

}  // namespace uqkit
