#pragma once

// The empirical integrals: moments M_k(T) = int_1^T |zeta(1/2+it)|^2k dt,
// the I1/I2 pair, the mixed moments K_N and J_N, the cross and chi^3 terms
// of the second decomposition, and the Jara-type integral. Everything is one
// panel quadrature with kind-specific integrands on s = 1/2 + it:
//
//   zeta = e^(-i theta) Z,  chi(1/2+it) = e^(-2 i theta),
//   M_k: Z^2k                         I1: Z^4 e^(-2 i theta) conj(Dt)
//   I2:  Z^4 e^(+2 i theta) Dt        K_N: Z^4 e^(-2 i theta) conj(D_N)
//   J_N: Z^2 |D_N|^2                  cross: 2 Re int e^(2 i theta) conj(Dt) Dt^2
//   chi3: 2 Re int e^(6 i theta) Dt^3 jara: Z^4 |sum_{n<=N} n^it|^2
//
// where Dt is the divisor sum truncated at |t|/2pi (its cutoff jumps at
// t = 2 pi m are mandatory panel boundaries) and N = T^theta. The segment
// [1, 10) runs on the Euler-Maclaurin evaluator; the sixth-moment integrand
// is Z^6 in real arithmetic, never |complex|^6.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetalab/dirichlet_poly.hpp"
#include "zetalab/main_terms.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/zeta_line.hpp"

namespace zetalab {

enum class MomentKind { m1, m2, m3, i1, i2, kn, jn, cross, chi3, jara };

inline const char* moment_kind_name(MomentKind kind) {
    switch (kind) {
        case MomentKind::m1: return "M1";
        case MomentKind::m2: return "M2";
        case MomentKind::m3: return "M3";
        case MomentKind::i1: return "I1";
        case MomentKind::i2: return "I2";
        case MomentKind::kn: return "KN";
        case MomentKind::jn: return "JN";
        case MomentKind::cross: return "cross";
        case MomentKind::chi3: return "chi3";
        case MomentKind::jara: return "jara";
    }
    return "?";
}

struct MomentEstimate {
    MomentKind kind = MomentKind::m1;
    double T = 0.0;
    std::optional<double> theta;
    std::complex<double> value{0.0, 0.0};
    std::optional<double> main_term;
    std::optional<double> ratio;
    double quad_error = 0.0;
    std::uint64_t evaluations = 0;
};

namespace detail {

struct LinePoint {
    double z;
    double theta;
};

inline LinePoint line_zt(double t) {
    if (t >= kThetaMinT) {
        const double th = theta(t);
        return {z_function_with_theta(t, th), th};
    }
    const CriticalSample s = line_point_any(t);
    return {s.z_value, s.theta_value};
}

inline void require_T(double T) {
    if (!(T > kThetaMinT))
        throw std::invalid_argument("moment integral: T must exceed t_min = 10");
}

// Mandatory breakpoints: the EM handoff at t = 10 and, when with_jumps, the
// divisor-sum cutoff jumps at t = 2 pi m.
inline std::vector<double> breakpoints(double t_lo, double T, bool with_jumps) {
    std::vector<double> breaks{kThetaMinT};
    if (with_jumps) {
        const double two_pi = 2.0 * std::numbers::pi;
        for (std::uint64_t m = 1; two_pi * static_cast<double>(m) < T; ++m) {
            const double t = two_pi * static_cast<double>(m);
            if (t > t_lo) breaks.push_back(t);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    return breaks;
}

template <typename F>
MomentEstimate run_integral(MomentKind kind, double t_lo, double T, bool with_jumps,
                            const QuadratureConfig& cfg, const F& f) {
    require_T(T);
    if (!(t_lo >= 1.0) || !(t_lo < T))
        throw std::invalid_argument("moment integral: need 1 <= t_lo < T");
    const std::vector<double> breaks = breakpoints(t_lo, T, with_jumps);
    const PanelIntegral integral = integrate_panels(f, t_lo, T, breaks, cfg);
    MomentEstimate est;
    est.kind = kind;
    est.T = T;
    est.value = integral.value;
    est.quad_error = integral.error_estimate;
    est.evaluations = integral.evaluations;
    return est;
}

inline void attach_main_term(MomentEstimate& est, double main_term) {
    est.main_term = main_term;
    if (main_term != 0.0) est.ratio = est.value.real() / main_term;
}

}  // namespace detail

// leading-order main terms: T log T, T log^4 T / (2 pi^2), (42 a3/9!) T log^9 T
inline double moment_main_term(int k, double T) {
    const double L = std::log(T);
    switch (k) {
        case 1: return T * L;
        case 2: return T * std::pow(L, 4) / (2.0 * std::numbers::pi * std::numbers::pi);
        case 3: return 42.0 / 362880.0 * a3_reference() * T * std::pow(L, 9);
        default: throw std::invalid_argument("moment_main_term: k must be 1, 2 or 3");
    }
}

inline MomentEstimate integrate_moment(int k, double T, const QuadratureConfig& cfg = {},
                                       double t_lo = 1.0) {
    if (k < 1 || k > 3) throw std::invalid_argument("integrate_moment: k must be 1, 2 or 3");
    const MomentKind kind = k == 1 ? MomentKind::m1 : (k == 2 ? MomentKind::m2 : MomentKind::m3);
    auto f = [k](double t) -> std::complex<double> {
        const double z2 = [&] {
            const auto pt = detail::line_zt(t);
            return pt.z * pt.z;
        }();
        const double v = k == 1 ? z2 : (k == 2 ? z2 * z2 : z2 * z2 * z2);
        return {v, 0.0};
    };
    MomentEstimate est = detail::run_integral(kind, t_lo, T, false, cfg, f);
    detail::attach_main_term(est, moment_main_term(k, T));
    return est;
}

namespace detail {

inline DirichletEvaluator truncated_sum_for(double T, const DivisorTable& table) {
    const std::uint64_t m = dirichlet_cutoff(T);
    if (m > table.limit)
        throw std::invalid_argument("moment integral: sieve table covers " + std::to_string(table.limit) +
                                    " but T/2pi needs " + std::to_string(m));
    return make_divisor_sum_evaluator(table, m, true);
}

}  // namespace detail

// I1 = int chi(1/2-it) zeta(1/2+it)^4 D(1/2-it) dt
inline MomentEstimate integrate_I1(double T, const DivisorTable& table,
                                   const QuadratureConfig& cfg = {}, double t_lo = 1.0) {
    const DirichletEvaluator dsum = detail::truncated_sum_for(T, table);
    auto f = [&dsum](double t) {
        const auto pt = detail::line_zt(t);
        const double z4 = pt.z * pt.z * pt.z * pt.z;
        const std::complex<double> rot{std::cos(2.0 * pt.theta), -std::sin(2.0 * pt.theta)};
        return z4 * rot * std::conj(dsum.eval(t));
    };
    return detail::run_integral(MomentKind::i1, t_lo, T, true, cfg, f);
}

// I2 = int chi(1/2-it)^3 zeta(1/2+it)^4 D(1/2+it) dt, computed directly
inline MomentEstimate integrate_I2(double T, const DivisorTable& table,
                                   const QuadratureConfig& cfg = {}, double t_lo = 1.0) {
    const DirichletEvaluator dsum = detail::truncated_sum_for(T, table);
    auto f = [&dsum](double t) {
        const auto pt = detail::line_zt(t);
        const double z4 = pt.z * pt.z * pt.z * pt.z;
        // chi(1/2-it)^3 zeta^4 = e^(6 i theta) e^(-4 i theta) Z^4 = Z^4 e^(2 i theta)
        const std::complex<double> rot{std::cos(2.0 * pt.theta), std::sin(2.0 * pt.theta)};
        return z4 * rot * dsum.eval(t);
    };
    return detail::run_integral(MomentKind::i2, t_lo, T, true, cfg, f);
}

// K_N(T) = int |zeta|^2 zeta^2 D_N(1/2-it, P) dt with N = T^theta
inline MomentEstimate integrate_KN(double T, double theta_exp, const WeightPolynomial& P,
                                   const DivisorTable& table, const QuadratureConfig& cfg = {},
                                   double t_lo = 1.0) {
    validate_theta(theta_exp);
    const double N = std::pow(T, theta_exp);
    const DirichletEvaluator dn = make_weighted_evaluator(table, N, P);
    auto f = [&dn](double t) {
        const auto pt = detail::line_zt(t);
        const double z4 = pt.z * pt.z * pt.z * pt.z;
        const std::complex<double> rot{std::cos(2.0 * pt.theta), -std::sin(2.0 * pt.theta)};
        return z4 * rot * std::conj(dn.eval(t));
    };
    MomentEstimate est = detail::run_integral(MomentKind::kn, t_lo, T, false, cfg, f);
    est.theta = theta_exp;
    detail::attach_main_term(
        est, k_main_term({MainTermKind::k_theorem, theta_exp, {a3_reference(), 0, 0.0}, P}, T));
    return est;
}

// J_N(T) = int |zeta|^2 |D_N(1/2+it, P)|^2 dt
inline MomentEstimate integrate_JN(double T, double theta_exp, const WeightPolynomial& P,
                                   const DivisorTable& table, const QuadratureConfig& cfg = {},
                                   double t_lo = 1.0) {
    validate_theta(theta_exp);
    const double N = std::pow(T, theta_exp);
    const DirichletEvaluator dn = make_weighted_evaluator(table, N, P);
    auto f = [&dn](double t) -> std::complex<double> {
        const auto pt = detail::line_zt(t);
        const std::complex<double> d = dn.eval(t);
        return {pt.z * pt.z * std::norm(d), 0.0};
    };
    MomentEstimate est = detail::run_integral(MomentKind::jn, t_lo, T, false, cfg, f);
    est.theta = theta_exp;
    detail::attach_main_term(
        est, j_main_term({MainTermKind::j_theorem, theta_exp, {a3_reference(), 0, 0.0}, P}, T));
    return est;
}

// 2 Re int chi(1/2-it) D(1/2-it) D(1/2+it)^2 dt, predicted 14 a3/9! T log^9 T
inline MomentEstimate integrate_cross(double T, const DivisorTable& table,
                                      const QuadratureConfig& cfg = {}, double t_lo = 1.0) {
    const DirichletEvaluator dsum = detail::truncated_sum_for(T, table);
    auto f = [&dsum](double t) {
        const auto pt = detail::line_zt(t);
        const std::complex<double> d = dsum.eval(t);
        const std::complex<double> rot{std::cos(2.0 * pt.theta), std::sin(2.0 * pt.theta)};
        return rot * std::conj(d) * d * d;
    };
    MomentEstimate est = detail::run_integral(MomentKind::cross, t_lo, T, true, cfg, f);
    est.value = {2.0 * est.value.real(), 0.0};
    est.quad_error *= 2.0;
    detail::attach_main_term(est, 14.0 / 362880.0 * a3_reference() * T * std::pow(std::log(T), 9));
    return est;
}

// 2 Re int chi(1/2-it)^3 D(1/2+it)^3 dt; diagnostic only (the phase spins too
// fast for a main term), so ratio records |value| / (T log^9 T).
inline MomentEstimate integrate_chi3(double T, const DivisorTable& table,
                                     const QuadratureConfig& cfg = {}, double t_lo = 1.0) {
    const DirichletEvaluator dsum = detail::truncated_sum_for(T, table);
    auto f = [&dsum](double t) {
        const auto pt = detail::line_zt(t);
        const std::complex<double> d = dsum.eval(t);
        const std::complex<double> rot{std::cos(6.0 * pt.theta), std::sin(6.0 * pt.theta)};
        return rot * d * d * d;
    };
    MomentEstimate est = detail::run_integral(MomentKind::chi3, t_lo, T, true, cfg, f);
    est.value = {2.0 * est.value.real(), 0.0};
    est.quad_error *= 2.0;
    est.ratio = std::abs(est.value) / (T * std::pow(std::log(T), 9));
    return est;
}

// int |zeta|^4 |sum_{n<=N} n^(-1/2+it)|^2 dt with N = T^theta, unit Dirichlet
// coefficients (theta = 0 collapses to the fourth moment; at theta = 1/2 the
// polynomial is one AFE half of zeta, targeting half the sixth moment).
inline MomentEstimate integrate_jara(double T, double theta_exp, const QuadratureConfig& cfg = {},
                                     double t_lo = 1.0) {
    if (theta_exp < 0.0 || theta_exp > 1.0)
        throw std::invalid_argument("integrate_jara: theta must lie in [0, 1]");
    const double N = std::pow(T, theta_exp);
    const DirichletEvaluator poly = make_unit_evaluator(N);
    auto f = [&poly](double t) -> std::complex<double> {
        const auto pt = detail::line_zt(t);
        const double z2 = pt.z * pt.z;
        return {z2 * z2 * std::norm(poly.eval(t)), 0.0};
    };
    MomentEstimate est = detail::run_integral(MomentKind::jara, t_lo, T, false, cfg, f);
    est.theta = theta_exp;
    return est;
}

// int |zeta|^2 |D(1/2+it)|^2 dt with the t-dependent cutoff: the diagonal
// piece of the second-method decomposition
//   M3 = 2 * diagonal + cross + chi3 + (E-term effects).
inline MomentEstimate integrate_diagonal(double T, const DivisorTable& table,
                                         const QuadratureConfig& cfg = {}, double t_lo = 1.0) {
    const DirichletEvaluator dsum = detail::truncated_sum_for(T, table);
    auto f = [&dsum](double t) -> std::complex<double> {
        const auto pt = detail::line_zt(t);
        return {pt.z * pt.z * std::norm(dsum.eval(t)), 0.0};
    };
    return detail::run_integral(MomentKind::jn, t_lo, T, true, cfg, f);
}

// ---------------------------------------------------------------------------
// Trend report: per-T rows plus least-squares log-log slopes.

struct TrendRow {
    double T = 0.0;
    MomentEstimate estimate;
};

struct TrendReport {
    MomentKind kind = MomentKind::m1;
    std::vector<TrendRow> rows;
    double value_slope = 0.0;      // d log|value| / d log T, fitted
    double main_term_slope = 0.0;  // same fit on the main terms (0 if none)
};

namespace detail {

inline double fit_slope(const std::vector<double>& log_x, const std::vector<double>& log_y) {
    const auto n = static_cast<double>(log_x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_x.size(); ++i) {
        sx += log_x[i];
        sy += log_y[i];
        sxx += log_x[i] * log_x[i];
        sxy += log_x[i] * log_y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace detail

inline TrendReport trend_from_runner(MomentKind kind, const std::vector<double>& T_list,
                                     const std::function<MomentEstimate(double)>& runner) {
    if (T_list.size() < 2) throw std::invalid_argument("trend_report: need at least two T values");
    for (std::size_t i = 1; i < T_list.size(); ++i)
        if (!(T_list[i] > T_list[i - 1]))
            throw std::invalid_argument("trend_report: T values must be strictly increasing");

    TrendReport report;
    report.kind = kind;
    std::vector<double> log_T, log_value, log_main;
    bool has_main = true;
    for (double T : T_list) {
        TrendRow row;
        row.T = T;
        row.estimate = runner(T);
        report.rows.push_back(row);
        log_T.push_back(std::log(T));
        const double magnitude = std::abs(row.estimate.value);
        log_value.push_back(std::log(std::max(magnitude, 1e-300)));
        if (row.estimate.main_term && *row.estimate.main_term > 0.0)
            log_main.push_back(std::log(*row.estimate.main_term));
        else
            has_main = false;
    }
    report.value_slope = detail::fit_slope(log_T, log_value);
    if (has_main) report.main_term_slope = detail::fit_slope(log_T, log_main);
    return report;
}

struct TrendParams {
    double theta = 0.25;
    WeightPolynomial weight = WeightPolynomial::one();
};

inline TrendReport trend_report(MomentKind kind, const std::vector<double>& T_list,
                                const DivisorTable& table, const QuadratureConfig& cfg = {},
                                const TrendParams& params = {}) {
    auto runner = [&](double T) -> MomentEstimate {
        switch (kind) {
            case MomentKind::m1: return integrate_moment(1, T, cfg);
            case MomentKind::m2: return integrate_moment(2, T, cfg);
            case MomentKind::m3: return integrate_moment(3, T, cfg);
            case MomentKind::i1: return integrate_I1(T, table, cfg);
            case MomentKind::i2: return integrate_I2(T, table, cfg);
            case MomentKind::kn: return integrate_KN(T, params.theta, params.weight, table, cfg);
            case MomentKind::jn: return integrate_JN(T, params.theta, params.weight, table, cfg);
            case MomentKind::cross: return integrate_cross(T, table, cfg);
            case MomentKind::chi3: return integrate_chi3(T, table, cfg);
            case MomentKind::jara: return integrate_jara(T, params.theta, cfg);
        }
        throw std::invalid_argument("trend_report: unknown kind");
    };
    return trend_from_runner(kind, T_list, runner);
}

}  // namespace zetalab
