#pragma once

#include <array>

namespace aic {

// Surrogate instantaneous fuel-rate polynomial, mL/s:
//   rate(v,a) = max(0, b0 + b1*v + b2*v^2 + b3*v^3 + b4*a*v + b5*a^2*v)
// Default coefficients are calibrated so that idle burns ~0.8 L/h and a
// steady 13.9 m/s cruise comes out near 6 L/100 km.
struct FuelModel {
    std::array<double, 6> b{0.22, 0.021, 0.0, 0.00012, 0.05, 0.006};

    double rate(double v, double a) const {
        double r = b[0] + b[1] * v + b[2] * v * v + b[3] * v * v * v + b[4] * a * v +
                   b[5] * a * a * v;
        return r > 0.0 ? r : 0.0;
    }
};

}  // namespace aic
