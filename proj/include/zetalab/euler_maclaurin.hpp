#pragma once

// Euler-Maclaurin evaluation of zeta(s). This is the validation oracle for
// the Riemann-Siegel path and the zeta(real > 1) workhorse for the prime
// zeta function. Deliberately straightforward: direct sum to N, integral and
// Bernoulli corrections, and a computed remainder bound.
//
//   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//           + sum_{k=1..K} B_{2k}/(2k)! * (s)_{2k-1} * N^(-s-2k+1) + R
//
//   |R| <= |B_{2K+2}/(2K+2)! * (s)_{2K+1} * N^(-s-2K-1)| * |s+2K+1|/(sigma+2K+1)
//
// valid for sigma = Re(s) > -(2K+1).

#include <cmath>
#include <complex>
#include <stdexcept>

#include "zetalab/log_gamma.hpp"

namespace zetalab {

struct EmZeta {
    std::complex<double> value;
    double error_bound;
};

inline EmZeta zeta_euler_maclaurin(std::complex<double> s, int n_terms, int n_bernoulli) {
    if (s == std::complex<double>(1.0, 0.0))
        throw std::domain_error("zeta_euler_maclaurin: pole at s = 1");
    if (s.real() <= -1.0)
        throw std::domain_error("zeta_euler_maclaurin: requires Re(s) > -1");
    if (n_terms < 1 || n_bernoulli < 1 || n_bernoulli > 11)
        throw std::invalid_argument("zeta_euler_maclaurin: need n_terms >= 1 and 1 <= n_bernoulli <= 11");

    const double N = static_cast<double>(n_terms);
    std::complex<double> sum{0.0, 0.0};
    for (int n = 1; n < n_terms; ++n)
        sum += std::exp(-s * std::log(static_cast<double>(n)));

    const std::complex<double> n_pow_minus_s = std::exp(-s * std::log(N));
    sum += n_pow_minus_s * N / (s - 1.0);  // N^(1-s)/(s-1)
    sum += 0.5 * n_pow_minus_s;

    // Bernoulli tail: term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    std::complex<double> rising = s;                        // (s)_1
    std::complex<double> n_pow = n_pow_minus_s / N;         // N^(-s-1)
    double factorial = 2.0;                                 // (2k)!
    const double inv_n2 = 1.0 / (N * N);
    std::complex<double> term{0.0, 0.0};
    for (int k = 1; k <= n_bernoulli; ++k) {
        term = kBernoulli2n[k - 1] / factorial * rising * n_pow;
        sum += term;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        n_pow *= inv_n2;
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }

    // remainder bound from the first omitted term
    const int K = n_bernoulli;
    const std::complex<double> next = kBernoulli2n[K] / factorial * rising * n_pow;
    const double bound = std::abs(next) * std::abs(s + static_cast<double>(2 * K + 1)) /
                         (s.real() + 2.0 * K + 1.0);
    return {sum, bound};
}

// Parameter-free wrapper: picks N ~ max(24, 1.6|t|) so ten Bernoulli terms
// leave a remainder near machine precision for |t| up to a few thousand.
inline EmZeta zeta_em_auto(std::complex<double> s) {
    const int n_terms = static_cast<int>(std::ceil(std::max(24.0, 1.6 * std::abs(s.imag())))) + 1;
    return zeta_euler_maclaurin(s, n_terms, 10);
}

// zeta(x) - 1 for real x > 1, carrying full relative precision even where
// 2^-x underflows the 1 + ... representation (needed by prime_zeta at large
// arguments, where log zeta(x) ~ 2^-x).
inline double zeta_real_minus_one(double x) {
    if (x <= 1.0) throw std::domain_error("zeta_real_minus_one: requires x > 1");
    constexpr int N = 24;
    double sum = 0.0;
    for (int n = N - 1; n >= 2; --n) sum += std::pow(static_cast<double>(n), -x);

    const double n_pow_minus_x = std::pow(static_cast<double>(N), -x);
    sum += n_pow_minus_x * N / (x - 1.0) + 0.5 * n_pow_minus_x;
    double rising = x;
    double n_pow = n_pow_minus_x / N;
    double factorial = 2.0;
    for (int k = 1; k <= 6; ++k) {
        sum += kBernoulli2n[k - 1] / factorial * rising * n_pow;
        rising *= (x + 2.0 * k - 1.0) * (x + 2.0 * k);
        n_pow /= static_cast<double>(N) * N;
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum;
}

// zeta on the real axis, x > 1. Used by the prime zeta function.
inline double zeta_real(double x) {
    return 1.0 + zeta_real_minus_one(x);
}

}  // namespace zetalab
