#pragma once

// The Euler product
//
//   a3 = prod_p (1 - 1/p)^4 (1 + 4/p + 1/p^2)
//
// by two routes. The direct route multiplies local factors (in log space,
// compensated summation) up to a prime limit. The accelerated route expands
//
//   log[(1-x)^4 (1+4x+x^2)] = sum_{k>=2} c_k x^k,   x = 1/p,
//
// and sums over all primes at once with the prime zeta function. Since
// (1-x)^4 (1+4x+x^2) = 1 - 9x^2 + 16x^3 - 9x^4 + x^6 factors through
// 1 + 4x + x^2 = (1 - r1 x)(1 - r2 x) with r1,2 = -2 -+ sqrt(3), the
// coefficients have the closed form
//
//   c_k = -(4 + (-1)^k L_k) / k,   L_k = (2+sqrt 3)^k + (2-sqrt 3)^k,
//
// so c_1 = 0 (that cancellation is why the product converges at all) and
// |c_k| grows like (2+sqrt 3)^k: the series converges geometrically once the
// primes below ~4 are handled directly.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zetalab/primes.hpp"
#include "zetalab/prime_zeta.hpp"

namespace zetalab {

struct EulerProductValue {
    double value = 0.0;
    std::uint64_t prime_limit = 0;
    double tail_bound = 0.0;  // rigorous bound on |log| of the omitted tail
};

// Coefficient c_k of the log-factor expansion.
inline double a3_log_series_coeff(int k) {
    if (k < 1) throw std::invalid_argument("a3_log_series_coeff: k >= 1");
    const double r = 2.0 + std::sqrt(3.0);
    const double lucas = std::pow(r, k) + std::pow(1.0 / r, k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return -(4.0 + sign * lucas) / k;
}

namespace detail {

inline double a3_log_factor(double inv_p) {
    // 4 log(1-x) + log(1 + x(4+x)), stable for small x
    return 4.0 * std::log1p(-inv_p) + std::log1p(inv_p * (4.0 + inv_p));
}

// sum_{p <= limit} log factor(p), Kahan-compensated, plus sum_{p<=limit} p^-k
// for the requested k values (used to subtract the finite part from P(k)).
struct PartialProduct {
    double log_sum = 0.0;
    std::vector<double> prime_power_sums;  // indexed by k - 2
};

inline PartialProduct a3_partial(std::uint64_t prime_limit, int k_max) {
    PartialProduct out;
    out.prime_power_sums.assign(k_max >= 2 ? k_max - 1 : 0, 0.0);
    double comp = 0.0;
    for_each_prime(prime_limit, [&](std::uint64_t p) {
        const double inv_p = 1.0 / static_cast<double>(p);
        const double term = a3_log_factor(inv_p) - comp;
        const double next = out.log_sum + term;
        comp = (next - out.log_sum) - term;
        out.log_sum = next;
        double x = inv_p;
        for (int k = 2; k <= k_max; ++k) {
            x *= inv_p;
            out.prime_power_sums[k - 2] += x;
        }
    });
    return out;
}

// Bound on |sum_{k > k_from} c_k sum_{p > y} p^-k| using
// sum_{p>y} p^-k <= integral bound y^(1-k)/(k-1). Finite only for y >= 5.
inline double a3_series_tail_bound(std::uint64_t y, int k_from) {
    const double yd = static_cast<double>(y);
    double bound = 0.0;
    for (int k = k_from;; ++k) {
        const double term = std::abs(a3_log_series_coeff(k)) * std::pow(yd, 1.0 - k) / (k - 1.0);
        bound += term;
        if (term < 1e-30 * (1.0 + bound) || k > 700) break;
    }
    return bound;
}

// Past this k the true term |c_k| P_{>y}(k) is below 1e-15 while the
// cancellation P(k) - sum_{p<=y} p^-k amplifies double noise by |c_k|, so
// summing further only degrades the result.
inline int a3_series_noise_cut(std::uint64_t y) {
    for (int k = 2;; ++k) {
        const double term =
            std::abs(a3_log_series_coeff(k + 1)) * std::pow(static_cast<double>(y), -k) / k;
        if (term < 1e-15 || k > 200) return k;
    }
}

}  // namespace detail

// Truncated Euler product over p <= prime_limit. tail_bound covers the whole
// omitted log tail: the c_k integral bound where it converges (prime_limit
// >= 5), else the coarse |log factor| <= 18.75/p^2 bound.
inline EulerProductValue a3_direct(std::uint64_t prime_limit) {
    if (prime_limit < 2) throw std::invalid_argument("a3_direct: prime_limit must be >= 2");
    const auto partial = detail::a3_partial(prime_limit, 0);
    double tail;
    if (prime_limit >= 5) {
        tail = detail::a3_series_tail_bound(prime_limit, 2);
    } else {
        // |log factor(x)| <= 9 x^2 / f(1/3) <= 18.75 x^2 for p >= 3, and the
        // p = 2..3 factors are inside the product already.
        double zeta2_tail = 0.0;
        for (std::uint64_t n = prime_limit + 1; n < 10000; ++n) zeta2_tail += 1.0 / (static_cast<double>(n) * n);
        zeta2_tail += 1.0 / 9999.0;
        tail = 18.75 * zeta2_tail;
    }
    return {std::exp(partial.log_sum), prime_limit, tail};
}

// Rigorous estimate of the log tail beyond prime_limit, with a remainder
// bound: sum_{k=2..depth} c_k (P(k) - sum_{p<=limit} p^-k) plus the bound on
// everything past depth. Lets the direct product be promoted to a full-a3
// estimate without re-sieving.
struct A3TailCorrection {
    double log_correction = 0.0;
    double remainder_bound = 0.0;
};

inline A3TailCorrection a3_tail_correction(std::uint64_t prime_limit, int series_depth) {
    if (prime_limit < 5) throw std::invalid_argument("a3_tail_correction: prime_limit must be >= 5");
    if (series_depth < 2) throw std::invalid_argument("a3_tail_correction: series_depth must be >= 2");
    const int depth = std::min(series_depth, detail::a3_series_noise_cut(prime_limit));
    const auto partial = detail::a3_partial(prime_limit, depth);
    A3TailCorrection out;
    for (int k = 2; k <= depth; ++k) {
        const double p_tail = prime_zeta(k) - partial.prime_power_sums[k - 2];
        out.log_correction += a3_log_series_coeff(k) * p_tail;
    }
    out.remainder_bound = detail::a3_series_tail_bound(prime_limit, depth + 1) +
                          depth * 1e-14;  // prime_zeta evaluation slack
    return out;
}

// Series-accelerated evaluation: primes below prime_limit directly, the rest
// through the c_k / prime-zeta expansion to the given depth.
inline EulerProductValue a3_accelerated(int series_depth, std::uint64_t prime_limit = 1000) {
    if (series_depth < 2) throw std::invalid_argument("a3_accelerated: series_depth must be >= 2");
    if (prime_limit < 5) throw std::invalid_argument("a3_accelerated: prime_limit must be >= 5");
    const int depth = std::min(series_depth, detail::a3_series_noise_cut(prime_limit));
    const auto partial = detail::a3_partial(prime_limit, depth);
    double log_a3 = partial.log_sum;
    for (int k = 2; k <= depth; ++k) {
        const double p_tail = prime_zeta(k) - partial.prime_power_sums[k - 2];
        log_a3 += a3_log_series_coeff(k) * p_tail;
    }
    const double tail = detail::a3_series_tail_bound(prime_limit, depth + 1) + depth * 1e-14;
    return {std::exp(log_a3), prime_limit, tail};
}

// Best available value, cached: accelerated with generous depth.
inline double a3_reference() {
    static const double value = a3_accelerated(24, 1000).value;
    return value;
}

}  // namespace zetalab
