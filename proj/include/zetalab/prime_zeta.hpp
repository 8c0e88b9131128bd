#pragma once

// Prime zeta function P(k) = sum_p p^-k through Moebius inversion:
//
//   P(k) = sum_{m>=1} mu(m)/m * log zeta(k m)
//
// truncated once log zeta(km) ~ 2^-km drops below the requested precision.

#include <cmath>
#include <stdexcept>

#include "zetalab/euler_maclaurin.hpp"

namespace zetalab {

namespace detail {

inline int moebius_small(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace detail

inline double prime_zeta(int k, double precision = 1e-14) {
    if (k < 2) throw std::invalid_argument("prime_zeta: diverges for k < 2");
    if (!(precision > 0.0)) throw std::invalid_argument("prime_zeta: precision must be positive");

    double sum = 0.0;
    for (int m = 1; m <= 64; ++m) {
        const double km = static_cast<double>(k) * m;
        const double term_scale = std::exp2(-km) / m;  // ~ |mu(m)/m * log zeta(km)|
        if (term_scale < 0.02 * precision && m > 2) break;
        const int mu = detail::moebius_small(m);
        if (mu == 0) continue;
        sum += mu * std::log1p(zeta_real_minus_one(km)) / m;
    }
    return sum;
}

}  // namespace zetalab
