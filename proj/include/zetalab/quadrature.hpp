#pragma once

// Panel quadrature for oscillatory critical-line integrands.
//
// Panels shrink like c_w / log(t/2pi) to track the local oscillation
// frequency (the chi and zeta phases turn at ~log(t/2pi)/2pi cycles per unit
// t), so a fixed Gauss-Legendre rule sees a bounded number of periods per
// panel. Mandatory breakpoints (the integrand's cutoff jumps at t = 2 pi m,
// the Euler-Maclaurin handoff at t = 10) are panel boundaries, never
// interior points. Each panel is estimated with the n-point rule, checked
// against the embedded n/2 rule, and bisected on disagreement.
//
// Top-level panels are independent work units: they are evaluated by a small
// thread pool and merged by a fixed pairwise tree reduction in panel order,
// so the result is bit-identical for any worker count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

namespace zetalab {

struct QuadratureConfig {
    int panel_rule = 16;                // Gauss-Legendre nodes per panel
    double refinement_tolerance = 1e-8; // relative, per panel
    int max_depth = 12;
    double panel_width_scale = 2.0 * std::numbers::pi;  // c_w
    int workers = 0;                    // 0: ZETALAB_WORKERS env, else hardware
};

namespace detail {

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
inline GaussRule gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

inline const GaussRule& cached_rule(int n) {
    static GaussRule r8 = gauss_legendre(8);
    static GaussRule r16 = gauss_legendre(16);
    static GaussRule r24 = gauss_legendre(24);
    static GaussRule r32 = gauss_legendre(32);
    switch (n) {
        case 8: return r8;
        case 16: return r16;
        case 24: return r24;
        case 32: return r32;
        default: {
            thread_local GaussRule custom;
            thread_local int custom_n = 0;
            if (custom_n != n) {
                custom = gauss_legendre(n);
                custom_n = n;
            }
            return custom;
        }
    }
}

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ZETALAB_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace detail

struct PanelIntegral {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    std::uint64_t evaluations = 0;
    std::uint64_t panels = 0;
};

// Panel boundaries over [lo, hi]: every mandatory break inside the range,
// then each gap subdivided to satisfy width <= c_w / max(1, log(t/2pi)).
// `breaks` must be sorted.
inline std::vector<double> build_panel_boundaries(double lo, double hi,
                                                  std::span<const double> breaks,
                                                  const QuadratureConfig& cfg) {
    if (!(lo < hi)) throw std::invalid_argument("build_panel_boundaries: need lo < hi");
    std::vector<double> anchors{lo};
    for (double b : breaks)
        if (b > lo && b < hi && b > anchors.back()) anchors.push_back(b);
    anchors.push_back(hi);

    std::vector<double> bounds;
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
        const double a = anchors[i], b = anchors[i + 1];
        // width rule at the right end (the oscillation is fastest there)
        const double freq = std::max(1.0, std::log(b / (2.0 * std::numbers::pi)));
        const double max_width = cfg.panel_width_scale / freq;
        const auto pieces = static_cast<std::size_t>(std::ceil((b - a) / max_width));
        for (std::size_t j = 0; j < pieces; ++j)
            bounds.push_back(a + (b - a) * static_cast<double>(j) / static_cast<double>(pieces));
    }
    bounds.push_back(hi);
    return bounds;
}

namespace detail {

template <typename F>
std::complex<double> gauss_panel(const F& f, double a, double b, const GaussRule& rule,
                                 std::uint64_t& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    evals += rule.nodes.size();
    return half * acc;
}

template <typename F>
void adaptive_panel(const F& f, double a, double b, const GaussRule& full, const GaussRule& half_rule,
                    const QuadratureConfig& cfg, int depth, PanelIntegral& out) {
    const std::complex<double> fine = gauss_panel(f, a, b, full, out.evaluations);
    const std::complex<double> coarse = gauss_panel(f, a, b, half_rule, out.evaluations);
    const double disagreement = std::abs(fine - coarse);
    const double scale = std::max(std::abs(fine), 1e-300);
    if (disagreement <= cfg.refinement_tolerance * scale || depth >= cfg.max_depth) {
        out.value += fine;
        out.error_estimate += disagreement;
        out.panels += 1;
        return;
    }
    const double mid = 0.5 * (a + b);
    adaptive_panel(f, a, mid, full, half_rule, cfg, depth + 1, out);
    adaptive_panel(f, mid, b, full, half_rule, cfg, depth + 1, out);
}

inline std::complex<double> tree_sum(std::span<const std::complex<double>> values) {
    if (values.size() == 1) return values[0];
    if (values.empty()) return {0.0, 0.0};
    const std::size_t mid = values.size() / 2;
    return tree_sum(values.subspan(0, mid)) + tree_sum(values.subspan(mid));
}

}  // namespace detail

// Adaptive integral of f over [lo, hi] with the given mandatory breakpoints.
template <typename F>
PanelIntegral integrate_panels(const F& f, double lo, double hi, std::span<const double> breaks,
                               const QuadratureConfig& cfg) {
    const std::vector<double> bounds = build_panel_boundaries(lo, hi, breaks, cfg);
    const std::size_t n_panels = bounds.size() - 1;
    const auto& full = detail::cached_rule(cfg.panel_rule);
    const auto& half = detail::cached_rule(std::max(2, cfg.panel_rule / 2));

    const int workers = std::min<int>(detail::resolve_workers(cfg.workers),
                                      static_cast<int>(n_panels));
    std::vector<PanelIntegral> results(n_panels);

    auto run = [&](std::atomic<std::size_t>& next) {
        for (std::size_t i = next.fetch_add(1); i < n_panels; i = next.fetch_add(1))
            detail::adaptive_panel(f, bounds[i], bounds[i + 1], full, half, cfg, 0, results[i]);
    };

    if (workers <= 1) {
        std::atomic<std::size_t> next{0};
        run(next);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back([&] { run(next); });
        for (auto& th : pool) th.join();
    }

    PanelIntegral total;
    std::vector<std::complex<double>> values(n_panels);
    for (std::size_t i = 0; i < n_panels; ++i) {
        values[i] = results[i].value;
        total.error_estimate += results[i].error_estimate;
        total.evaluations += results[i].evaluations;
        total.panels += results[i].panels;
    }
    total.value = detail::tree_sum(values);
    return total;
}

}  // namespace zetalab
