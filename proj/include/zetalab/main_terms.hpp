#pragma once

// Closed-form main terms and constants:
//
//   K_N(T) ~ T (log N)^9 a3/(720 theta^3)
//              * int_0^1 P(a) a^5 2F1(-2,-3,6,-a theta) da
//   J_N(T) ~ T (log N)^9 (a3/24)
//              * int_0^1 a^3 [ (1/theta) h'(a)^2 + 4 h(a) h'(a) ] da,
//       h(a) = int_a^1 (b-a)^2 P(b) db
//
// with N = T^theta. The alpha-integrals are done exactly by polynomial
// coefficient arithmetic; the hypergeometric factor is the terminating
// series, identically 1 + z + z^2/7. At theta = 1, P = 1 these reproduce the
// sixth-moment constants: 2K -> 42/9!, 2J -> 28/9!, and the cross term
// carries the remaining 14/9! (28 + 14 = 42 is asserted in exact integer
// arithmetic).

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zetalab/euler_product.hpp"
#include "zetalab/weight_polynomial.hpp"

namespace zetalab {

enum class MainTermKind { k_theorem, j_theorem, sixth_moment, cross_term, half_moment };

struct MainTermSpec {
    MainTermKind kind = MainTermKind::k_theorem;
    double theta = 1.0;
    EulerProductValue a3;
    WeightPolynomial weight = WeightPolynomial::one();

    // the theorems are proven for theta < 1/2 and conjectured up to 1
    bool proven() const { return theta < 0.5; }
};

inline void validate_theta(double theta) {
    if (!(theta > 0.0) || theta > 1.0)
        throw std::invalid_argument("main term: theta must lie in (0, 1]");
}

// Terminating 2F1(-2,-3,6; z) as a Pochhammer series; equals 1 + z + z^2/7.
inline double hyp2f1_case(double z) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 2; ++k) {
        const double dk = static_cast<double>(k);
        term *= (dk - 2.0) * (dk - 3.0) / ((6.0 + dk) * (dk + 1.0)) * z;
        sum += term;
    }
    return sum;
}

// h(a) = int_a^1 (b-a)^2 P(b) db, exact in coefficients; degree deg(P) + 3.
inline WeightPolynomial h_transform(const WeightPolynomial& P) {
    // (b-a)^2 = b^2 - 2ab + a^2; with Q_k(a) = int_a^1 b^k P(b) db,
    // h(a) = Q_2(a) - 2a Q_1(a) + a^2 Q_0(a).
    WeightPolynomial h = WeightPolynomial::zero();
    const double binom[3] = {1.0, -2.0, 1.0};
    for (int k = 0; k < 3; ++k) {
        const WeightPolynomial integrand = P.shifted_up(static_cast<std::size_t>(2 - k));
        const WeightPolynomial A = integrand.antiderivative();  // int_0^a
        // Q_{2-k}(a) = A(1) - A(a)
        WeightPolynomial Q = A.scaled(-1.0);
        Q = Q + WeightPolynomial({A(1.0)});
        h = h + Q.shifted_up(static_cast<std::size_t>(k)).scaled(binom[k]);
    }
    return h;
}

// K_N main term at T with N = T^theta (so log N = theta log T).
inline double k_main_term(const MainTermSpec& spec, double T) {
    if (!(T > std::exp(1.0))) throw std::invalid_argument("k_main_term: requires T > e");
    validate_theta(spec.theta);
    // integrand P(a) * a^5 * (1 - a theta + (a theta)^2 / 7)
    const WeightPolynomial hyp({1.0, -spec.theta, spec.theta * spec.theta / 7.0});
    const double integral = (spec.weight * hyp).shifted_up(5).integral_01();
    const double log_n = spec.theta * std::log(T);
    const double log_n9 = std::pow(log_n, 9);
    return T * log_n9 * spec.a3.value / (720.0 * std::pow(spec.theta, 3)) * integral;
}

// J_N main term at T with N = T^theta.
inline double j_main_term(const MainTermSpec& spec, double T) {
    if (!(T > std::exp(1.0))) throw std::invalid_argument("j_main_term: requires T > e");
    validate_theta(spec.theta);
    const WeightPolynomial h = h_transform(spec.weight);
    const WeightPolynomial hp = h.derivative();
    const WeightPolynomial integrand =
        (hp * hp).scaled(1.0 / spec.theta) + (h * hp).scaled(4.0);
    const double integral = integrand.shifted_up(3).integral_01();
    const double log_n = spec.theta * std::log(T);
    return T * std::pow(log_n, 9) * spec.a3.value / 24.0 * integral;
}

// The conjecture constants c = m * a3 / 9! for m = 42 (sixth moment),
// 28 (diagonal), 14 (cross), with the integer identity 28 + 14 = 42 and the
// reduced fraction checked in exact arithmetic.
struct ConjectureConstants {
    double c_sixth = 0.0;
    double c_diagonal = 0.0;
    double c_cross = 0.0;
    std::int64_t numerator = 42;        // of c_sixth / a3, before reduction
    std::int64_t denominator = 362880;  // 9!
};

inline ConjectureConstants conjecture_constants(const EulerProductValue& a3) {
    constexpr std::int64_t nine_factorial = 362880;
    constexpr std::int64_t diagonal = 28, cross = 14, sixth = 42;
    static_assert(diagonal + cross == sixth);
    ConjectureConstants out;
    const std::int64_t g = std::gcd(sixth, nine_factorial);
    out.numerator = sixth / g;
    out.denominator = nine_factorial / g;  // 42/9! = 1/8640
    out.c_sixth = static_cast<double>(sixth) / nine_factorial * a3.value;
    out.c_diagonal = static_cast<double>(diagonal) / nine_factorial * a3.value;
    out.c_cross = static_cast<double>(cross) / nine_factorial * a3.value;
    return out;
}

}  // namespace zetalab
