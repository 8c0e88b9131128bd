#pragma once

// Riemann-Siegel theta: theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
//
// The main evaluator is the classical asymptotic series
//   theta(t) = (t/2) log(t/2pi) - t/2 - pi/8
//            + 1/(48t) + 7/(5760 t^3) + 31/(80640 t^5) + 127/(430080 t^7)
// whose truncation error is below 5e-13 for t >= 10. The log-gamma route is
// kept as the independent oracle and as the small-t evaluator.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zetalab/log_gamma.hpp"

namespace zetalab {

// Below this the asymptotic series is not trusted; callers needing small t
// use the oracle path.
inline constexpr double kThetaMinT = 10.0;

inline double theta(double t) {
    if (t < kThetaMinT) throw std::domain_error("theta: asymptotic series requires t >= 10");
    const double log_term = std::log(t / (2.0 * std::numbers::pi));
    const double inv_t = 1.0 / t;
    const double inv_t2 = inv_t * inv_t;
    double corr = 127.0 / 430080.0;
    corr = corr * inv_t2 + 31.0 / 80640.0;
    corr = corr * inv_t2 + 7.0 / 5760.0;
    corr = corr * inv_t2 + 1.0 / 48.0;
    return 0.5 * t * log_term - 0.5 * t - std::numbers::pi / 8.0 + corr * inv_t;
}

// Same function through complex log-gamma (Stirling after argument shift).
// Valid for any t > 0; used as the theta oracle and on [0, 10).
inline double theta_oracle(double t) {
    return log_gamma({0.25, 0.5 * t}).imag() - 0.5 * t * std::log(std::numbers::pi);
}

// theta'(t) = (1/2) log(t/2pi) - 1/(48 t^2) + O(t^-4)
inline double theta_derivative(double t) {
    return 0.5 * std::log(t / (2.0 * std::numbers::pi)) - 1.0 / (48.0 * t * t);
}

}  // namespace zetalab
