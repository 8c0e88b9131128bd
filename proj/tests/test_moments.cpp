#include <catch2/catch.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "zetalab/moments.hpp"

using namespace zetalab;
using cplx = std::complex<double>;

namespace {

// midpoint Riemann-sum oracle over [lo, hi]
template <typename F>
cplx riemann_sum(const F& f, double lo, double hi, double dt) {
    cplx sum{0.0, 0.0};
    const auto n = static_cast<std::uint64_t>(std::llround((hi - lo) / dt));
    for (std::uint64_t i = 0; i < n; ++i) sum += f(lo + (static_cast<double>(i) + 0.5) * dt);
    return sum * dt;
}

const DivisorTable& shared_table() {
    static const DivisorTable table = sieve_divisor_tables(200);
    return table;
}

}  // namespace

TEST_CASE("moment validation errors") {
    QuadratureConfig cfg;
    CHECK_THROWS_AS(integrate_moment(4, 100.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(integrate_moment(0, 100.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(integrate_moment(1, 5.0, cfg), std::invalid_argument);
    const auto tiny = sieve_divisor_tables(3);
    CHECK_THROWS_AS(integrate_I1(300.0, tiny, cfg), std::invalid_argument);
}

TEST_CASE("degenerate interval: quadrature equals midpoint on a sliver") {
    QuadratureConfig cfg;
    // |zeta(1/2 + it)|^2 over [1, 1.01] via the panel engine against the
    // midpoint value; the integrand is smooth at this scale
    auto f = [](double t) {
        const auto s = line_point_any(t);
        return cplx(s.z_value * s.z_value, 0.0);
    };
    const auto quad = integrate_panels(f, 1.0, 1.01, {}, cfg);
    const auto mid = f(1.005) * 0.01;
    CHECK(quad.value.real() == Approx(mid.real()).epsilon(5e-5));
}

TEST_CASE("every integral kind matches the riemann oracle at T = 300") {
    const double T = 300.0, dt = 2e-3;
    const auto& table = shared_table();
    QuadratureConfig cfg;
    const auto dsum = detail::truncated_sum_for(T, table);
    const auto P = WeightPolynomial::one();
    const double theta_exp = 0.25;
    const auto dn = make_weighted_evaluator(table, std::pow(T, theta_exp), P);
    const auto unit = make_unit_evaluator(std::pow(T, 0.5));

    SECTION("moments") {
        for (int k : {1, 2, 3}) {
            const auto est = integrate_moment(k, T, cfg);
            const auto oracle = riemann_sum(
                [&](double t) {
                    const auto pt = detail::line_zt(t);
                    const double z2 = pt.z * pt.z;
                    return cplx(k == 1 ? z2 : (k == 2 ? z2 * z2 : z2 * z2 * z2), 0.0);
                },
                1.0, T, dt);
            CHECK(est.value.real() == Approx(oracle.real()).epsilon(1e-4));
            CHECK(est.value.real() >= -est.quad_error);  // nonnegative up to noise
        }
    }

    SECTION("I1 and I2") {
        const auto i1 = integrate_I1(T, table, cfg);
        const auto oracle = riemann_sum(
            [&](double t) {
                const auto pt = detail::line_zt(t);
                const double z4 = pt.z * pt.z * pt.z * pt.z;
                const cplx rot{std::cos(2.0 * pt.theta), -std::sin(2.0 * pt.theta)};
                return z4 * rot * std::conj(dsum.eval(t));
            },
            1.0, T, dt);
        CHECK(std::abs(i1.value - oracle) / std::abs(oracle) < 1e-4);

        const auto i2 = integrate_I2(T, table, cfg);
        CHECK(std::abs(i2.value - std::conj(i1.value)) / std::abs(i1.value) < 1e-9);
        CHECK(std::abs(i2.value) == Approx(std::abs(i1.value)).epsilon(1e-12));
        // Im(I1 + conj(I1)) = 0 identically
        CHECK((i1.value + std::conj(i1.value)).imag() == 0.0);
    }

    SECTION("K_N and J_N") {
        const auto kn = integrate_KN(T, theta_exp, P, table, cfg);
        const auto kn_oracle = riemann_sum(
            [&](double t) {
                const auto pt = detail::line_zt(t);
                const double z4 = pt.z * pt.z * pt.z * pt.z;
                const cplx rot{std::cos(2.0 * pt.theta), -std::sin(2.0 * pt.theta)};
                return z4 * rot * std::conj(dn.eval(t));
            },
            1.0, T, dt);
        CHECK(std::abs(kn.value - kn_oracle) / std::abs(kn_oracle) < 1e-4);
        CHECK(kn.value.real() > 0.0);
        REQUIRE(kn.main_term.has_value());
        REQUIRE(kn.ratio.has_value());

        const auto jn = integrate_JN(T, theta_exp, P, table, cfg);
        const auto jn_oracle = riemann_sum(
            [&](double t) {
                const auto pt = detail::line_zt(t);
                return cplx(pt.z * pt.z * std::norm(dn.eval(t)), 0.0);
            },
            1.0, T, dt);
        CHECK(jn.value.real() == Approx(jn_oracle.real()).epsilon(1e-4));
        CHECK(jn.value.real() >= -jn.quad_error);
    }

    SECTION("cross and chi3") {
        const auto cross = integrate_cross(T, table, cfg);
        const auto cross_oracle = riemann_sum(
            [&](double t) {
                const auto pt = detail::line_zt(t);
                const cplx d = dsum.eval(t);
                const cplx rot{std::cos(2.0 * pt.theta), std::sin(2.0 * pt.theta)};
                return rot * std::conj(d) * d * d;
            },
            1.0, T, dt);
        CHECK(cross.value.real() == Approx(2.0 * cross_oracle.real()).epsilon(1e-4));
        CHECK(cross.value.imag() == 0.0);  // 2 Re by construction

        const auto chi3 = integrate_chi3(T, table, cfg);
        const auto chi3_oracle = riemann_sum(
            [&](double t) {
                const auto pt = detail::line_zt(t);
                const cplx d = dsum.eval(t);
                const cplx rot{std::cos(6.0 * pt.theta), std::sin(6.0 * pt.theta)};
                return rot * d * d * d;
            },
            1.0, T, dt);
        CHECK(chi3.value.real() == Approx(2.0 * chi3_oracle.real()).epsilon(2e-4));
        CHECK(chi3.value.imag() == 0.0);
        REQUIRE(chi3.ratio.has_value());  // |value| / (T log^9 T) diagnostic
    }

    SECTION("jara") {
        const auto jara = integrate_jara(T, 0.5, cfg);
        const auto oracle = riemann_sum(
            [&](double t) {
                const auto pt = detail::line_zt(t);
                const double z2 = pt.z * pt.z;
                return cplx(z2 * z2 * std::norm(unit.eval(t)), 0.0);
            },
            1.0, T, dt);
        CHECK(jara.value.real() == Approx(oracle.real()).epsilon(1e-4));
        CHECK(jara.value.real() >= -jara.quad_error);
    }
}

TEST_CASE("jara at theta = 0 collapses to the fourth moment") {
    QuadratureConfig cfg;
    const double T = 300.0;
    const auto jara = integrate_jara(T, 0.0, cfg);
    const auto m2 = integrate_moment(2, T, cfg);
    CHECK(std::abs(jara.value.real() - m2.value.real()) / m2.value.real() < 1e-12);
}

TEST_CASE("additivity: [1,T1] + [T1,T2] = [1,T2] within quadrature tolerance") {
    QuadratureConfig cfg;
    const double T1 = 150.0, T2 = 300.0;
    const auto& table = shared_table();

    auto check_kind = [&](const MomentEstimate& a, const MomentEstimate& b,
                          const MomentEstimate& c) {
        const double tol =
            10.0 * (a.quad_error + b.quad_error + c.quad_error) + 1e-9 * std::abs(c.value);
        CHECK(std::abs(a.value + b.value - c.value) <= tol);
    };

    check_kind(integrate_moment(1, T1, cfg), integrate_moment(1, T2, cfg, T1),
               integrate_moment(1, T2, cfg));
    check_kind(integrate_moment(3, T1, cfg), integrate_moment(3, T2, cfg, T1),
               integrate_moment(3, T2, cfg));
    check_kind(integrate_I1(T1, table, cfg), integrate_I1(T2, table, cfg, T1),
               integrate_I1(T2, table, cfg));
    check_kind(integrate_cross(T1, table, cfg), integrate_cross(T2, table, cfg, T1),
               integrate_cross(T2, table, cfg));
    // jara and K_N/J_N are excluded: their polynomial length N = T^theta is
    // retuned with T, so the [1,T1] piece integrates a different function
}

TEST_CASE("halving panel widths stays inside 3x the reported error") {
    const double T = 300.0;
    const auto& table = shared_table();
    QuadratureConfig base;
    QuadratureConfig halved;
    halved.panel_width_scale = base.panel_width_scale / 2.0;

    const auto kinds = {
        std::pair{integrate_moment(3, T, base), integrate_moment(3, T, halved)},
        std::pair{integrate_cross(T, table, base), integrate_cross(T, table, halved)},
        std::pair{integrate_jara(T, 0.5, base), integrate_jara(T, 0.5, halved)},
    };
    for (const auto& [coarse, fine] : kinds) {
        CHECK(std::abs(coarse.value - fine.value) <=
              3.0 * (coarse.quad_error + fine.quad_error) + 1e-10 * std::abs(coarse.value));
    }
}

TEST_CASE("second-method decomposition approximately recovers the sixth moment") {
    // M3 = 2 * int Z^2 |D|^2 + cross + chi3 up to E-term effects
    const double T = 300.0;
    const auto& table = shared_table();
    QuadratureConfig cfg;
    const double m3 = integrate_moment(3, T, cfg).value.real();
    const double diag = integrate_diagonal(T, table, cfg).value.real();
    const double cross = integrate_cross(T, table, cfg).value.real();
    const double chi3 = integrate_chi3(T, table, cfg).value.real();
    const double residual = std::abs(m3 - (2.0 * diag + cross + chi3)) / m3;
    INFO("decomposition residual (E-term effects): " << residual);
    CHECK(residual < 0.25);
}

TEST_CASE("first-method identity 2 Re I1 tracks M3 up to the omitted E-term") {
    const double T = 300.0;
    QuadratureConfig cfg;
    const double m3 = integrate_moment(3, T, cfg).value.real();
    const double i1_re = integrate_I1(T, shared_table(), cfg).value.real();
    const double gap = std::abs(2.0 * i1_re - m3) / m3;
    INFO("E-term defect of the truncated identity: " << gap);
    CHECK(gap < 0.05);
}

TEST_CASE("trend report: stub runner has slope one") {
    auto runner = [](double T) {
        MomentEstimate est;
        est.kind = MomentKind::m1;
        est.T = T;
        est.value = {2.5 * T, 0.0};  // integral of a constant
        est.main_term = 2.5 * T;
        est.ratio = 1.0;
        return est;
    };
    const auto report = trend_from_runner(MomentKind::m1, {100.0, 1000.0, 10000.0}, runner);
    CHECK(report.value_slope == Approx(1.0).epsilon(1e-12));
    CHECK(report.main_term_slope == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trend report rejects non-increasing T lists") {
    const auto& table = shared_table();
    QuadratureConfig cfg;
    CHECK_THROWS_AS(trend_report(MomentKind::m1, {100.0, 100.0}, table, cfg),
                    std::invalid_argument);
    CHECK_THROWS_AS(trend_report(MomentKind::m1, {100.0}, table, cfg), std::invalid_argument);
}

TEST_CASE("trend report: M1 slope tracks T log T at small scale") {
    const auto& table = shared_table();
    QuadratureConfig cfg;
    const auto report = trend_report(MomentKind::m1, {50.0, 100.0, 200.0, 400.0}, table, cfg);
    CHECK(std::abs(report.value_slope / report.main_term_slope - 1.0) < 0.10);
    // the ratio sequence climbs toward 1 from below
    double prev = 0.0;
    for (const auto& row : report.rows) {
        REQUIRE(row.estimate.ratio.has_value());
        CHECK(*row.estimate.ratio > prev);
        CHECK(*row.estimate.ratio < 1.0);
        prev = *row.estimate.ratio;
    }
}

TEST_CASE("M1 at T = 1e4 matches the fine riemann oracle") {
    QuadratureConfig cfg;
    const auto est = integrate_moment(1, 1e4, cfg);
    const auto oracle = riemann_sum(
        [](double t) {
            const auto pt = detail::line_zt(t);
            return cplx(pt.z * pt.z, 0.0);
        },
        1.0, 1e4, 1e-3);
    CHECK(est.value.real() == Approx(oracle.real()).epsilon(1e-4));
}

TEST_CASE("single-term region: I1/I2 integrands over [1, 2pi+1] vs riemann") {
    // below 4pi the truncated divisor sum has at most one term; the public
    // integrators require T > 10, so this drives the same integrands through
    // the panel engine directly (the [1,10) leg runs on the oracle evaluator)
    const auto table = sieve_divisor_tables(10);
    const auto dsum = make_divisor_sum_evaluator(table, 2, true);
    QuadratureConfig cfg;
    auto f1 = [&](double t) {
        const auto pt = detail::line_zt(t);
        const double z4 = pt.z * pt.z * pt.z * pt.z;
        return z4 * cplx(std::cos(2.0 * pt.theta), -std::sin(2.0 * pt.theta)) *
               std::conj(dsum.eval(t));
    };
    auto f2 = [&](double t) {
        const auto pt = detail::line_zt(t);
        const double z4 = pt.z * pt.z * pt.z * pt.z;
        return z4 * cplx(std::cos(2.0 * pt.theta), std::sin(2.0 * pt.theta)) * dsum.eval(t);
    };
    const double hi = 2.0 * std::numbers::pi + 1.0;
    const std::vector<double> jump{2.0 * std::numbers::pi};
    const auto i1 = integrate_panels(f1, 1.0, hi, jump, cfg);
    const auto i2 = integrate_panels(f2, 1.0, hi, jump, cfg);
    const auto oracle1 = riemann_sum(f1, 1.0, hi, 1e-4);
    CHECK(std::abs(i1.value - oracle1) / std::abs(oracle1) < 1e-4);
    CHECK(std::abs(i2.value - std::conj(i1.value)) / std::abs(i1.value) < 1e-12);
}
