#include <catch2/catch.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "zetalab/quadrature.hpp"

using namespace zetalab;
using cplx = std::complex<double>;

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
    const auto& rule = detail::cached_rule(16);
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        odd += rule.weights[i] * std::pow(rule.nodes[i], 17);
        even += rule.weights[i] * std::pow(rule.nodes[i], 30);
    }
    CHECK(std::abs(odd) < 1e-16);
    CHECK(even == Approx(2.0 / 31.0).epsilon(1e-13));

    double total_weight = 0.0;
    for (double w : rule.weights) total_weight += w;
    CHECK(total_weight == Approx(2.0).epsilon(1e-15));
}

TEST_CASE("adaptive panels: smooth and oscillatory closed forms") {
    QuadratureConfig cfg;
    const auto sine = integrate_panels([](double t) { return cplx(std::sin(t), 0.0); }, 0.0,
                                       std::numbers::pi, {}, cfg);
    CHECK(sine.value.real() == Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(sine.value.imag()) == 0.0);

    const auto osc = integrate_panels([](double t) { return cplx(std::cos(40.0 * t), 0.0); }, 0.0,
                                      10.0, {}, cfg);
    CHECK(osc.value.real() == Approx(std::sin(400.0) / 40.0).margin(1e-12));
}

TEST_CASE("panel boundaries contain every mandatory break") {
    QuadratureConfig cfg;
    std::vector<double> jumps;
    for (int m = 1; m <= 30; ++m) jumps.push_back(2.0 * std::numbers::pi * m);
    const auto bounds = build_panel_boundaries(1.0, 200.0, jumps, cfg);
    REQUIRE(bounds.front() == 1.0);
    REQUIRE(bounds.back() == 200.0);
    for (double j : jumps) {
        if (j <= 1.0 || j >= 200.0) continue;
        bool found = false;
        for (double b : bounds) found = found || std::abs(b - j) < 1e-12;
        CHECK(found);
    }
    // no interior jump: every jump inside (a, b) would violate the above
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) REQUIRE(bounds[i] < bounds[i + 1]);
}

TEST_CASE("panel widths respect the oscillation rule") {
    QuadratureConfig cfg;
    const auto bounds = build_panel_boundaries(10.0, 5000.0, {}, cfg);
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const double width = bounds[i + 1] - bounds[i];
        const double freq = std::max(1.0, std::log(bounds[i + 1] / (2.0 * std::numbers::pi)));
        CHECK(width <= cfg.panel_width_scale / freq + 1e-9);
    }
}

TEST_CASE("worker count does not change the bits") {
    auto f = [](double t) { return cplx(std::cos(3.0 * t) / (1.0 + t), std::sin(t) * 0.1); };
    QuadratureConfig solo;
    solo.workers = 1;
    QuadratureConfig quad;
    quad.workers = 4;
    const auto a = integrate_panels(f, 1.0, 300.0, {}, solo);
    const auto b = integrate_panels(f, 1.0, 300.0, {}, quad);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("refinement responds to the tolerance knob") {
    auto nasty = [](double t) { return cplx(std::cos(55.0 * t * t) * std::exp(-0.1 * t), 0.0); };
    QuadratureConfig loose;
    loose.refinement_tolerance = 1e-4;
    QuadratureConfig tight;
    tight.refinement_tolerance = 1e-10;
    const auto coarse = integrate_panels(nasty, 0.0, 6.0, {}, loose);
    const auto fine = integrate_panels(nasty, 0.0, 6.0, {}, tight);
    CHECK(fine.evaluations > coarse.evaluations);
    CHECK(std::abs(fine.value - coarse.value) < 3.0 * (coarse.error_estimate + fine.error_estimate));
}

TEST_CASE("boundary validation") {
    QuadratureConfig cfg;
    CHECK_THROWS_AS(build_panel_boundaries(5.0, 5.0, {}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(build_panel_boundaries(9.0, 2.0, {}, cfg), std::invalid_argument);
}
