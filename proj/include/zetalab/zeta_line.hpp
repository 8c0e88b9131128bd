#pragma once

// Critical-line assembly: Z(t), theta(t) and zeta(1/2+it) bundled as one
// sample, the chi factor by two routes, uniform grids, and a zero counter.
// Public evaluators require t >= kThetaMinT; the quadrature layer integrates
// [1, 10) through the Euler-Maclaurin oracle via line_point_any.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zetalab/euler_maclaurin.hpp"
#include "zetalab/riemann_siegel.hpp"
#include "zetalab/theta.hpp"

namespace zetalab {

struct CriticalSample {
    double t = 0.0;
    double z_value = 0.0;
    double theta_value = 0.0;
    std::complex<double> zeta_value;
};

struct ChiFactor {
    double t = 0.0;
    std::complex<double> value;
};

// chi(1/2 + it) = e^(-2 i theta(t))
inline ChiFactor chi_line(double t) {
    const double th = theta(t);
    return {t, {std::cos(2.0 * th), -std::sin(2.0 * th)}};
}

// chi(1/2 + it) through the gamma-factor formula: with s = 1/2 - it,
// chi(1 - s) = 2 (2pi)^(-s) Gamma(s) cos(pi s / 2). Evaluated in log space;
// log cos(z) = iz - log 2 + log1p(e^(-2iz)) keeps it stable for large t.
inline std::complex<double> chi_gamma_route(double t) {
    const std::complex<double> s{0.5, -t};
    const std::complex<double> z = 0.5 * std::numbers::pi * s;
    const std::complex<double> log_cos =
        std::complex<double>(0.0, 1.0) * z - std::log(2.0) +
        std::log(1.0 + std::exp(std::complex<double>(0.0, -2.0) * z));
    const std::complex<double> log_chi =
        std::log(2.0) - s * std::log(2.0 * std::numbers::pi) + log_gamma(s) + log_cos;
    return std::exp(log_chi);
}

inline CriticalSample zeta_line(double t) {
    const double z = z_function(t);
    const double th = theta(t);
    return {t, z, th, std::complex<double>(std::cos(th) * z, -std::sin(th) * z)};
}

// Full-range variants used by the integration layer: Euler-Maclaurin plus the
// log-gamma theta below kThetaMinT, the regular evaluators above.
inline double theta_any(double t) { return t < kThetaMinT ? theta_oracle(t) : theta(t); }

inline CriticalSample line_point_any(double t) {
    if (t >= kThetaMinT) return zeta_line(t);
    const std::complex<double> zeta = zeta_em_auto({0.5, t}).value;
    const double th = theta_oracle(t);
    const double z = std::cos(th) * zeta.real() - std::sin(th) * zeta.imag();
    return {t, z, th, zeta};
}

inline std::vector<CriticalSample> sample_uniform_grid(double t0, double t1, double dt) {
    if (!(t0 >= kThetaMinT)) throw std::invalid_argument("sample_uniform_grid: t0 must be >= 10");
    if (!(t1 > t0)) throw std::invalid_argument("sample_uniform_grid: need t0 < t1");
    if (!(dt > 0.0)) throw std::invalid_argument("sample_uniform_grid: dt must be positive");
    const double dt_max = 2.0 * std::numbers::pi / std::log(t1 / (2.0 * std::numbers::pi));
    if (dt > dt_max)
        throw std::invalid_argument(
            "sample_uniform_grid: dt exceeds the oscillation bound 2pi/log(t1/2pi); "
            "Z oscillates roughly once per 2pi/log(t/2pi), so coarser grids alias");

    std::vector<CriticalSample> samples;
    samples.reserve(static_cast<std::size_t>((t1 - t0) / dt) + 2);
    for (std::uint64_t i = 0;; ++i) {
        const double t = t0 + static_cast<double>(i) * dt;
        if (t > t1) break;
        samples.push_back(zeta_line(t));
    }
    return samples;
}

// Sign changes of Z on [t_lo, t_hi] by scanning at `step` and bisecting each
// bracket. Also returns the Riemann-von Mangoldt estimate theta(t)/pi + 1.
struct ZeroCount {
    std::uint64_t sign_changes = 0;
    double von_mangoldt_estimate = 0.0;
    std::vector<double> zeros;
};

inline ZeroCount count_zeros(double t_lo, double t_hi, double step = 0.02) {
    ZeroCount out;
    double prev_t = t_lo;
    double prev_z = line_point_any(prev_t).z_value;
    for (double t = t_lo + step; t < t_hi + step; t += step) {
        const double tc = std::min(t, t_hi);
        const double z = line_point_any(tc).z_value;
        if ((prev_z < 0.0) != (z < 0.0)) {
            double lo = prev_t, hi = tc, zlo = prev_z;
            for (int i = 0; i < 50; ++i) {
                const double mid = 0.5 * (lo + hi);
                const double zm = line_point_any(mid).z_value;
                if ((zlo < 0.0) != (zm < 0.0)) hi = mid;
                else lo = mid, zlo = zm;
            }
            out.zeros.push_back(0.5 * (lo + hi));
            ++out.sign_changes;
        }
        prev_t = tc;
        prev_z = z;
        if (tc >= t_hi) break;
    }
    out.von_mangoldt_estimate = theta_any(t_hi) / std::numbers::pi + 1.0;
    return out;
}

}  // namespace zetalab
