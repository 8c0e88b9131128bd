#pragma once

// The Riemann-Siegel formula:
//
//   Z(t) = 2 sum_{n<=m} n^(-1/2) cos(theta(t) - t log n)
//        + (-1)^(m-1) a^(-1/2) [ C0(p) + C1(p)/a + C2(p)/a^2 + C3(p)/a^3 ] + R
//
// with a = sqrt(t/2pi), m = floor(a), p = a - m. The correction functions are
// combinations of derivatives of
//
//   Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
//
// (entire; the cosine poles cancel). Rather than hardcoding the classical
// Taylor tables, the Psi Taylor coefficients around p = 1/2 are generated
// once at startup by Cauchy integration over a circle of radius 1, which
// gives machine precision and lets each C_k come out of one Horner pass.
//
// With four correction terms the remainder is ~ t^(-9/4), i.e. below 1e-6
// only for t >~ 130. z_function therefore dispatches: accelerated alternating
// series below kRiemannSiegelMinT, Riemann-Siegel proper above it.

#include <array>
#include <cmath>
#include <cstdint>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zetalab/alternating_zeta.hpp"
#include "zetalab/fast_trig.hpp"
#include "zetalab/theta.hpp"

namespace zetalab {

namespace detail {

inline constexpr int kPsiTaylorLen = 56;

inline std::complex<double> psi_entire(std::complex<double> z) {
    const double two_pi = 2.0 * std::numbers::pi;
    return std::cos(two_pi * (z * z - z - 0.0625)) / std::cos(two_pi * z);
}

// Taylor coefficients of Psi around 1/2, psi[j] = Psi^(j)(1/2)/j!.
inline const std::array<double, kPsiTaylorLen>& psi_taylor() {
    static const std::array<double, kPsiTaylorLen> coeffs = [] {
        constexpr int n_nodes = 512;
        constexpr double radius = 1.0;
        std::array<std::complex<double>, n_nodes> samples;
        for (int k = 0; k < n_nodes; ++k) {
            const double phi = 2.0 * std::numbers::pi * k / n_nodes;
            samples[k] = psi_entire({0.5 + radius * std::cos(phi), radius * std::sin(phi)});
        }
        std::array<double, kPsiTaylorLen> out{};
        for (int j = 0; j < kPsiTaylorLen; ++j) {
            std::complex<double> acc{0.0, 0.0};
            for (int k = 0; k < n_nodes; ++k) {
                const double phi = 2.0 * std::numbers::pi * k * j / n_nodes;
                acc += samples[k] * std::complex<double>(std::cos(phi), -std::sin(phi));
            }
            out[j] = acc.real() / n_nodes;  // radius = 1, so no r^-j rescale
        }
        return out;
    }();
    return coeffs;
}

// Taylor coefficients (around 1/2) of Psi^(order) scaled by `scale`.
inline std::vector<double> psi_derivative_taylor(int order, double scale) {
    const auto& psi = psi_taylor();
    std::vector<double> out(kPsiTaylorLen - order, 0.0);
    for (int j = 0; j + order < kPsiTaylorLen; ++j) {
        double binom_fall = 1.0;  // (j+order)! / j!
        for (int i = 1; i <= order; ++i) binom_fall *= j + i;
        out[j] = psi[j + order] * binom_fall * scale;
    }
    return out;
}

struct RsCorrectionTables {
    std::array<std::vector<double>, 4> c;  // Taylor of C0..C3 around p = 1/2

    RsCorrectionTables() {
        const double pi2 = std::numbers::pi * std::numbers::pi;
        const double pi4 = pi2 * pi2;
        const double pi6 = pi4 * pi2;

        auto add = [](std::vector<double>& dst, const std::vector<double>& src) {
            if (dst.size() < src.size()) dst.resize(src.size(), 0.0);
            for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
        };

        c[0] = psi_derivative_taylor(0, 1.0);
        c[1] = psi_derivative_taylor(3, -1.0 / (96.0 * pi2));
        c[2] = psi_derivative_taylor(2, 1.0 / (64.0 * pi2));
        add(c[2], psi_derivative_taylor(6, 1.0 / (18432.0 * pi4)));
        c[3] = psi_derivative_taylor(1, -1.0 / (64.0 * pi2));
        add(c[3], psi_derivative_taylor(5, -1.0 / (3840.0 * pi4)));
        add(c[3], psi_derivative_taylor(9, -1.0 / (5308416.0 * pi6)));
    }

    double eval(int k, double p) const {
        const double x = p - 0.5;
        const auto& taylor = c[k];
        double acc = 0.0;
        for (std::size_t j = taylor.size(); j-- > 0;) acc = acc * x + taylor[j];
        return acc;
    }
};

inline const RsCorrectionTables& rs_tables() {
    static const RsCorrectionTables tables;
    return tables;
}

}  // namespace detail

// Correction function C_k(p), exposed for tests.
inline double rs_correction(int k, double p) {
    if (k < 0 || k > 3) throw std::invalid_argument("rs_correction: k in 0..3");
    return detail::rs_tables().eval(k, p);
}

namespace detail {

// Per-thread log n / n^(-1/2) tables for the main sum; the term count is
// only sqrt(t/2pi), so duplication across threads is trivial.
struct RsTermTable {
    std::vector<double> log_n;
    std::vector<double> inv_sqrt_n;
    void ensure(std::uint64_t m) {
        while (log_n.size() < m) {
            const auto n = static_cast<double>(log_n.size() + 1);
            log_n.push_back(std::log(n));
            inv_sqrt_n.push_back(1.0 / std::sqrt(n));
        }
    }
};

inline RsTermTable& rs_term_table() {
    thread_local RsTermTable table;
    return table;
}

}  // namespace detail

// Riemann-Siegel main formula, with theta(t) supplied by the caller (the
// integrators reuse one theta evaluation per node). Accuracy ~0.03 t^(-9/4)
// absolute, so 1e-6 needs t >= kRiemannSiegelMinT; use z_function for the
// dispatching wrapper.
inline double z_riemann_siegel_with_theta(double t, double th) {
    const double a = std::sqrt(t / (2.0 * std::numbers::pi));
    const auto m = static_cast<std::uint64_t>(a);
    const double p = a - static_cast<double>(m);

    auto& table = detail::rs_term_table();
    table.ensure(m);
    double sum = 0.0;
    for (std::uint64_t n = 0; n < m; ++n)
        sum += fast_cos(th - t * table.log_n[n]) * table.inv_sqrt_n[n];
    sum *= 2.0;

    const auto& tables = detail::rs_tables();
    const double inv_a = 1.0 / a;
    double corr = tables.eval(3, p);
    corr = corr * inv_a + tables.eval(2, p);
    corr = corr * inv_a + tables.eval(1, p);
    corr = corr * inv_a + tables.eval(0, p);
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^(m-1)
    return sum + sign * corr / std::sqrt(a);
}

inline double z_riemann_siegel(double t) { return z_riemann_siegel_with_theta(t, theta(t)); }

// Below this the four-term Riemann-Siegel tail is worse than 1e-6.
inline constexpr double kRiemannSiegelMinT = 130.0;

inline double z_function_with_theta(double t, double th) {
    if (t >= kRiemannSiegelMinT) return z_riemann_siegel_with_theta(t, th);
    const std::complex<double> zeta = zeta_alternating({0.5, t});
    return std::cos(th) * zeta.real() - std::sin(th) * zeta.imag();  // Re(e^{i theta} zeta)
}

// Z(t) for t >= kThetaMinT: Riemann-Siegel above kRiemannSiegelMinT, the
// accelerated alternating series (rotated by theta) below it.
inline double z_function(double t) {
    if (t < kThetaMinT) throw std::domain_error("z_function: requires t >= 10; use the Euler-Maclaurin oracle below");
    return z_function_with_theta(t, theta(t));
}

}  // namespace zetalab
