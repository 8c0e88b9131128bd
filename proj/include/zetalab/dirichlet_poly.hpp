#pragma once

// Truncated divisor sums and weighted Dirichlet polynomials on the critical
// line, plus the approximate-functional-equation reconstruction
//
//   zeta(s)^2 ~ D(s) + chi(s)^2 D(1-s),
//   D(s) = sum_{n <= |t|/2pi} d(n) n^-s   (error term dropped)
//
// and the normalized residual |zeta^2 - reconstruction| / log(2 + |t|).
//
// The evaluators precompute log n and the real weights once, so a single
// call is one fused pass of sincos accumulation; this is the inner loop of
// every D-involving integrand.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "zetalab/divisor_tables.hpp"
#include "zetalab/fast_trig.hpp"
#include "zetalab/weight_polynomial.hpp"
#include "zetalab/zeta_line.hpp"

namespace zetalab {

// Cutoff index m = floor(|t|/2pi); the sum jumps at t = 2 pi m.
inline std::uint64_t dirichlet_cutoff(double t) {
    return static_cast<std::uint64_t>(std::abs(t) / (2.0 * std::numbers::pi));
}

// Fixed-coefficient Dirichlet evaluator: sum_n w_n e^(-i t log n) for
// 1 <= n <= n_terms(t). Used with w_n = d(n)/sqrt(n) (truncated divisor sum,
// t-dependent cutoff), w_n = d(n) P(..)/sqrt(n) (D_N), or w_n = 1 (plain
// polynomial sum_n n^{it}, conjugated sign).
class DirichletEvaluator {
public:
    DirichletEvaluator() = default;
    DirichletEvaluator(std::vector<double> weights, bool t_dependent_cutoff)
        : weights_(std::move(weights)), t_cutoff_(t_dependent_cutoff) {
        log_n_.resize(weights_.size());
        for (std::size_t i = 0; i < weights_.size(); ++i)
            log_n_[i] = std::log(static_cast<double>(i + 1));
    }

    std::uint64_t max_terms() const { return weights_.size(); }

    // sum over n <= cutoff of w_n * e^(-i t log n)
    std::complex<double> eval(double t) const {
        std::uint64_t m = t_cutoff_ ? dirichlet_cutoff(t) : weights_.size();
        if (m > weights_.size())
            throw std::out_of_range("DirichletEvaluator: cutoff exceeds precomputed range");
        double re = 0.0, im = 0.0;
        for (std::uint64_t i = 0; i < m; ++i) {
            const SinCos sc = fast_sincos(t * log_n_[i]);
            re += weights_[i] * sc.cos;
            im -= weights_[i] * sc.sin;
        }
        return {re, im};
    }

private:
    std::vector<double> weights_;  // index i corresponds to n = i + 1
    std::vector<double> log_n_;
    bool t_cutoff_ = false;
};

// Weights d(n)/sqrt(n) for n <= max_n, read from the sieve table.
inline DirichletEvaluator make_divisor_sum_evaluator(const DivisorTable& table, std::uint64_t max_n,
                                                     bool t_dependent_cutoff = true) {
    if (max_n > table.limit)
        throw std::invalid_argument("divisor sum: requested range exceeds sieve table limit");
    std::vector<double> w(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n)
        w[n - 1] = table.d[n] / std::sqrt(static_cast<double>(n));
    return DirichletEvaluator(std::move(w), t_dependent_cutoff);
}

// Weights d(n) P(log n / log N)/sqrt(n) for n <= N.
inline DirichletEvaluator make_weighted_evaluator(const DivisorTable& table, double N,
                                                  const WeightPolynomial& P) {
    if (!(N >= 1.0)) throw std::invalid_argument("D_N: N must be >= 1");
    const auto n_max = static_cast<std::uint64_t>(N);
    if (n_max > table.limit) throw std::invalid_argument("D_N: N exceeds sieve table limit");
    const double log_N = std::log(N);
    std::vector<double> w(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        // N = 1 degenerate: single term d(1) P(0)
        const double arg = log_N > 0.0 ? std::log(static_cast<double>(n)) / log_N : 0.0;
        w[n - 1] = table.d[n] * P(arg) / std::sqrt(static_cast<double>(n));
    }
    return DirichletEvaluator(std::move(w), false);
}

// Unit Dirichlet coefficients on the half-line: sum_{n<=N} n^(-1/2-it).
// (The a_n sit in front of a critical-line Dirichlet monomial; with a_n = 1
// and N = sqrt(T) this is one AFE half of zeta, which is what makes the
// half-of-the-sixth-moment target meaningful.)
inline DirichletEvaluator make_unit_evaluator(double N) {
    if (!(N >= 1.0)) throw std::invalid_argument("unit polynomial: N must be >= 1");
    const auto n_max = static_cast<std::uint64_t>(N);
    std::vector<double> w(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) w[n - 1] = 1.0 / std::sqrt(static_cast<double>(n));
    return DirichletEvaluator(std::move(w), false);
}

// D(1/2 + it) truncated at |t|/2pi (one-shot convenience; integrators keep
// their own evaluator).
inline std::complex<double> d_truncated(double t, const DivisorTable& table) {
    const std::uint64_t m = dirichlet_cutoff(t);
    if (m > table.limit) throw std::invalid_argument("d_truncated: sieve table too small for this t");
    double re = 0.0, im = 0.0;
    for (std::uint64_t n = 1; n <= m; ++n) {
        const double w = table.d[n] / std::sqrt(static_cast<double>(n));
        const double phase = t * std::log(static_cast<double>(n));
        re += w * std::cos(phase);
        im -= w * std::sin(phase);
    }
    return {re, im};
}

// Reflected value D(1/2 - it) = conj(D(1/2 + it)) for real t.
inline std::complex<double> d_truncated_reflected(double t, const DivisorTable& table) {
    return std::conj(d_truncated(t, table));
}

// D_N(1/2 + it, P) = sum_{n<=N} d(n) n^(-1/2-it) P(log n / log N)
inline std::complex<double> d_n_weighted(double t, double N, const WeightPolynomial& P,
                                         const DivisorTable& table) {
    return make_weighted_evaluator(table, N, P).eval(t);
}

// D(s) + chi(s)^2 D(1-s) at s = 1/2 + it, with chi = e^(-2 i theta).
inline std::complex<double> afe_reconstruct(double t, const DivisorTable& table,
                                            const ChiFactor& chi) {
    if (chi.t != t) throw std::invalid_argument("afe_reconstruct: chi factor computed at a different t");
    const std::complex<double> d = d_truncated(t, table);
    return d + chi.value * chi.value * std::conj(d);
}

// |zeta(1/2+it)^2 - reconstruction| / log(2 + |t|): the E-term, normalized
// by its known order of growth.
inline double afe_residual(double t, const DivisorTable& table) {
    const CriticalSample sample = zeta_line(t);
    const std::complex<double> zeta2 = sample.zeta_value * sample.zeta_value;
    const ChiFactor chi{t, {std::cos(2.0 * sample.theta_value), -std::sin(2.0 * sample.theta_value)}};
    return std::abs(zeta2 - afe_reconstruct(t, table, chi)) / std::log(2.0 + std::abs(t));
}

}  // namespace zetalab
