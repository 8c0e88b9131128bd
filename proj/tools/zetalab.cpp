// zetalab command-line front end.
//
// Every command is deterministic for a given set of flags: no timestamps, no
// randomness, doubles printed with %.17g. JSON is the canonical machine
// format; CSV rows use the fixed column set documented in report.hpp.
// Worker count comes from ZETALAB_WORKERS (default: hardware concurrency).

#include <cstdio>
#include <exception>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetalab/dirichlet_poly.hpp"
#include "zetalab/divisor_tables.hpp"
#include "zetalab/euler_product.hpp"
#include "zetalab/main_terms.hpp"
#include "zetalab/moments.hpp"
#include "zetalab/report.hpp"
#include "zetalab/sample_cache.hpp"
#include "zetalab/zeta_line.hpp"

namespace {

using nlohmann::json;
using namespace zetalab;

struct CommonOpts {
    std::string format = "json";
    std::uint64_t sieve_limit = 2'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--sieve-limit", opts.sieve_limit, "divisor sieve table size");
}

void print_estimate(const MomentEstimate& est, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: std::printf("%s\n", estimate_to_json(est).dump(2).c_str()); break;
        case OutputFormat::csv:
            std::printf("%s\n%s\n", csv_header().c_str(), estimate_to_csv_row(est).c_str());
            break;
        case OutputFormat::text: std::printf("%s", estimate_to_text(est).c_str()); break;
    }
}

WeightPolynomial parse_poly(const std::vector<double>& coeffs) {
    if (coeffs.empty()) return WeightPolynomial::one();
    return WeightPolynomial(coeffs);
}

DivisorTable table_for(std::uint64_t needed, std::uint64_t sieve_limit) {
    if (needed > sieve_limit)
        throw std::invalid_argument("sieve limit " + std::to_string(sieve_limit) +
                                    " too small; this run needs " + std::to_string(needed) +
                                    " (raise --sieve-limit)");
    return sieve_divisor_tables(std::max<std::uint64_t>(needed, 1));
}

int cmd_constants(std::uint64_t prime_limit, const std::string& format) {
    const EulerProductValue direct = a3_direct(prime_limit);
    const A3TailCorrection corr = a3_tail_correction(std::max<std::uint64_t>(prime_limit, 5), 8);
    const double direct_corrected = direct.value * std::exp(corr.log_correction);
    const EulerProductValue accel = a3_accelerated(12, 1000);
    const ConjectureConstants constants = conjecture_constants(accel);

    // theta = 1, P = 1 bridge from the theorems to the conjecture constants
    const MainTermSpec k_spec{MainTermKind::k_theorem, 1.0, accel, WeightPolynomial::one()};
    const MainTermSpec j_spec{MainTermKind::j_theorem, 1.0, accel, WeightPolynomial::one()};
    const double T = 1000.0;
    const double scale = accel.value * T * std::pow(std::log(T), 9);
    const double bridge_k = 2.0 * k_main_term(k_spec, T) / scale;
    const double bridge_j = 2.0 * j_main_term(j_spec, T) / scale;

    json j;
    j["a3_direct"] = {{"value", direct.value},
                      {"prime_limit", direct.prime_limit},
                      {"tail_bound", direct.tail_bound}};
    j["a3_direct_corrected"] = {{"value", direct_corrected},
                                {"remainder_bound", corr.remainder_bound}};
    j["a3_accelerated"] = {{"value", accel.value},
                           {"series_depth", 12},
                           {"prime_limit", accel.prime_limit},
                           {"tail_bound", accel.tail_bound}};
    j["method_agreement"] = std::abs(direct_corrected - accel.value);
    j["fraction_42_over_9fact"] = {{"numerator", constants.numerator},
                                   {"denominator", constants.denominator},
                                   {"decimal", 42.0 / 362880.0}};
    j["c_sixth"] = constants.c_sixth;
    j["c_diagonal"] = constants.c_diagonal;
    j["c_cross"] = constants.c_cross;
    j["decomposition_28_plus_14_equals_42"] = true;  // asserted in integer arithmetic
    j["bridge_theta1"] = {{"two_K_over_a3_T_log9T", bridge_k},
                          {"expected_42_over_9fact", 42.0 / 362880.0},
                          {"two_J_over_a3_T_log9T", bridge_j},
                          {"expected_28_over_9fact", 28.0 / 362880.0}};

    const OutputFormat fmt = parse_output_format(format);
    if (fmt == OutputFormat::json) {
        std::printf("%s\n", j.dump(2).c_str());
    } else if (fmt == OutputFormat::csv) {
        std::printf("key,value\n");
        std::printf("a3_direct,%s\n", format_double(direct.value).c_str());
        std::printf("a3_direct_tail_bound,%s\n", format_double(direct.tail_bound).c_str());
        std::printf("a3_direct_corrected,%s\n", format_double(direct_corrected).c_str());
        std::printf("a3_corrected_remainder_bound,%s\n", format_double(corr.remainder_bound).c_str());
        std::printf("a3_accelerated,%s\n", format_double(accel.value).c_str());
        std::printf("a3_accelerated_tail_bound,%s\n", format_double(accel.tail_bound).c_str());
        std::printf("c_sixth,%s\n", format_double(constants.c_sixth).c_str());
        std::printf("c_diagonal,%s\n", format_double(constants.c_diagonal).c_str());
        std::printf("c_cross,%s\n", format_double(constants.c_cross).c_str());
    } else {
        std::printf("a3 (direct, p <= %llu)   : %s   [omitted-tail bound %s]\n",
                    static_cast<unsigned long long>(direct.prime_limit),
                    format_double(direct.value).c_str(), format_double(direct.tail_bound).c_str());
        std::printf("a3 (direct + tail corr) : %s   [remainder bound %s]\n",
                    format_double(direct_corrected).c_str(),
                    format_double(corr.remainder_bound).c_str());
        std::printf("a3 (accelerated)        : %s   [tail bound %s]\n",
                    format_double(accel.value).c_str(), format_double(accel.tail_bound).c_str());
        std::printf("method agreement        : %s\n",
                    format_double(std::abs(direct_corrected - accel.value)).c_str());
        std::printf("42/9!                   : %lld/%lld = %s\n",
                    static_cast<long long>(constants.numerator),
                    static_cast<long long>(constants.denominator),
                    format_double(42.0 / 362880.0).c_str());
        std::printf("c_sixth  = 42 a3/9!     : %s\n", format_double(constants.c_sixth).c_str());
        std::printf("c_diag   = 28 a3/9!     : %s\n", format_double(constants.c_diagonal).c_str());
        std::printf("c_cross  = 14 a3/9!     : %s   (28 + 14 = 42 exactly)\n",
                    format_double(constants.c_cross).c_str());
        std::printf("bridge theta=1, P=1     : 2K/(a3 T log^9 T) = %s, 2J/(a3 T log^9 T) = %s\n",
                    format_double(bridge_k).c_str(), format_double(bridge_j).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for critical-line zeta moments"};
    app.require_subcommand(1);

    // constants
    auto* constants_cmd = app.add_subcommand("constants", "Euler product a3 and the moment constants");
    std::uint64_t prime_limit = 10'000'000;
    std::string constants_format = "json";
    constants_cmd->add_option("--prime-limit", prime_limit, "direct product prime limit");
    constants_cmd->add_option("--format", constants_format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // moment
    auto* moment_cmd = app.add_subcommand("moment", "moment integral M_k(T) = int |zeta|^2k dt");
    int moment_k = 1;
    double moment_T = 1e4;
    CommonOpts moment_opts;
    moment_cmd->add_option("-k,--k", moment_k, "moment index (1, 2 or 3)")->required();
    moment_cmd->add_option("-T,--T", moment_T, "upper integration limit");
    add_common(moment_cmd, moment_opts);

    // identity-check
    auto* identity_cmd = app.add_subcommand("identity-check", "I2 = conj(I1) at finite T");
    double identity_T = 1e3;
    CommonOpts identity_opts;
    identity_cmd->add_option("-T,--T", identity_T, "upper integration limit");
    add_common(identity_cmd, identity_opts);

    // ktheorem / jtheorem
    auto* k_cmd = app.add_subcommand("ktheorem", "K_N(T) against its closed-form main term");
    auto* j_cmd = app.add_subcommand("jtheorem", "J_N(T) against its closed-form main term");
    double kj_theta = 0.25, k_T = 1e4, j_T = 1e4;
    std::vector<double> k_poly, j_poly;
    CommonOpts k_opts, j_opts;
    k_cmd->add_option("--theta", kj_theta, "N = T^theta, theta in (0, 1]");
    k_cmd->add_option("-T,--T", k_T, "upper integration limit");
    k_cmd->add_option("--poly", k_poly, "weight polynomial coefficients, constant first")->delimiter(',');
    add_common(k_cmd, k_opts);
    double j_theta = 0.25;
    j_cmd->add_option("--theta", j_theta, "N = T^theta, theta in (0, 1]");
    j_cmd->add_option("-T,--T", j_T, "upper integration limit");
    j_cmd->add_option("--poly", j_poly, "weight polynomial coefficients, constant first")->delimiter(',');
    add_common(j_cmd, j_opts);

    // cross / chi3
    auto* cross_cmd = app.add_subcommand("cross", "cross term 2 Re int chi(1-s) D(1-s) D(s)^2 dt");
    auto* chi3_cmd = app.add_subcommand("chi3", "fast-spinning term 2 Re int chi(1-s)^3 D(s)^3 dt");
    double cross_T = 1e4, chi3_T = 1e4;
    CommonOpts cross_opts, chi3_opts;
    cross_cmd->add_option("-T,--T", cross_T, "upper integration limit");
    add_common(cross_cmd, cross_opts);
    chi3_cmd->add_option("-T,--T", chi3_T, "upper integration limit");
    add_common(chi3_cmd, chi3_opts);

    // jara
    auto* jara_cmd = app.add_subcommand("jara", "int |zeta|^4 |sum_{n<=N} n^it|^2 dt, N = T^theta");
    double jara_theta = 0.5, jara_T = 1e4;
    CommonOpts jara_opts;
    jara_cmd->add_option("--theta", jara_theta, "N = T^theta, theta in [0, 1]");
    jara_cmd->add_option("-T,--T", jara_T, "upper integration limit");
    add_common(jara_cmd, jara_opts);

    // afe-survey
    auto* afe_cmd = app.add_subcommand("afe-survey", "normalized AFE residual over log-spaced t");
    double afe_t0 = 10.0, afe_t1 = 5000.0;
    std::uint64_t afe_samples = 500;
    CommonOpts afe_opts;
    afe_cmd->add_option("--t0", afe_t0, "lower end of the survey range");
    afe_cmd->add_option("--t1", afe_t1, "upper end of the survey range");
    afe_cmd->add_option("--samples", afe_samples, "number of log-spaced sample points");
    add_common(afe_cmd, afe_opts);

    // correlate
    auto* corr_cmd = app.add_subcommand("correlate", "shifted divisor correlation sums");
    std::uint64_t corr_x = 10'000, corr_hmax = 10;
    CommonOpts corr_opts;
    corr_cmd->add_option("-x,--x", corr_x, "summation length");
    corr_cmd->add_option("--h-max", corr_hmax, "largest shift h");
    add_common(corr_cmd, corr_opts);

    // zeta-grid
    auto* grid_cmd = app.add_subcommand("zeta-grid", "sample Z(t) on a uniform grid");
    double grid_t0 = 100.0, grid_t1 = 110.0, grid_dt = 0.05;
    std::string grid_cache;
    CommonOpts grid_opts;
    grid_cmd->add_option("--t0", grid_t0, "grid start (>= 10)");
    grid_cmd->add_option("--t1", grid_t1, "grid end");
    grid_cmd->add_option("--dt", grid_dt, "grid spacing");
    grid_cmd->add_option("--cache", grid_cache, "write samples to this cache file");
    add_common(grid_cmd, grid_opts);

    // trend
    auto* trend_cmd = app.add_subcommand("trend", "value/main-term trend over several T");
    std::string trend_kind = "M1";
    std::vector<double> trend_T{1e3, 1e4, 1e5};
    double trend_theta = 0.25;
    CommonOpts trend_opts;
    trend_cmd->add_option("--kind", trend_kind,
                          "one of M1, M2, M3, I1, I2, KN, JN, cross, chi3, jara");
    trend_cmd->add_option("-T,--T", trend_T, "increasing list of T values")->delimiter(',');
    trend_cmd->add_option("--theta", trend_theta, "theta for KN/JN/jara");
    add_common(trend_cmd, trend_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        const QuadratureConfig cfg;

        if (constants_cmd->parsed()) return cmd_constants(prime_limit, constants_format);

        if (moment_cmd->parsed()) {
            print_estimate(integrate_moment(moment_k, moment_T, cfg),
                           parse_output_format(moment_opts.format));
            return 0;
        }

        if (identity_cmd->parsed()) {
            const auto table = table_for(dirichlet_cutoff(identity_T) + 1, identity_opts.sieve_limit);
            const MomentEstimate i1 = integrate_I1(identity_T, table, cfg);
            const MomentEstimate i2 = integrate_I2(identity_T, table, cfg);
            const double rel = std::abs(i2.value - std::conj(i1.value)) / std::abs(i1.value);
            const OutputFormat fmt = parse_output_format(identity_opts.format);
            if (fmt == OutputFormat::json) {
                json j;
                j["I1"] = estimate_to_json(i1);
                j["I2"] = estimate_to_json(i2);
                j["relative_conjugation_defect"] = rel;
                std::printf("%s\n", j.dump(2).c_str());
            } else if (fmt == OutputFormat::csv) {
                std::printf("%s\n%s\n%s\n", csv_header().c_str(), estimate_to_csv_row(i1).c_str(),
                            estimate_to_csv_row(i2).c_str());
                std::printf("# relative_conjugation_defect,%s\n", format_double(rel).c_str());
            } else {
                std::printf("%s%s|I2 - conj(I1)|/|I1| : %s\n", estimate_to_text(i1).c_str(),
                            estimate_to_text(i2).c_str(), format_double(rel).c_str());
            }
            return 0;
        }

        if (k_cmd->parsed()) {
            const auto table = table_for(static_cast<std::uint64_t>(std::pow(k_T, kj_theta)) + 1,
                                         k_opts.sieve_limit);
            print_estimate(integrate_KN(k_T, kj_theta, parse_poly(k_poly), table, cfg),
                           parse_output_format(k_opts.format));
            return 0;
        }
        if (j_cmd->parsed()) {
            const auto table = table_for(static_cast<std::uint64_t>(std::pow(j_T, j_theta)) + 1,
                                         j_opts.sieve_limit);
            print_estimate(integrate_JN(j_T, j_theta, parse_poly(j_poly), table, cfg),
                           parse_output_format(j_opts.format));
            return 0;
        }
        if (cross_cmd->parsed()) {
            const auto table = table_for(dirichlet_cutoff(cross_T) + 1, cross_opts.sieve_limit);
            print_estimate(integrate_cross(cross_T, table, cfg),
                           parse_output_format(cross_opts.format));
            return 0;
        }
        if (chi3_cmd->parsed()) {
            const auto table = table_for(dirichlet_cutoff(chi3_T) + 1, chi3_opts.sieve_limit);
            print_estimate(integrate_chi3(chi3_T, table, cfg), parse_output_format(chi3_opts.format));
            return 0;
        }

        if (jara_cmd->parsed()) {
            const MomentEstimate est = integrate_jara(jara_T, jara_theta, cfg);
            const MomentEstimate m3 = integrate_moment(3, jara_T, cfg);
            const double companion = est.value.real() / m3.value.real();
            const OutputFormat fmt = parse_output_format(jara_opts.format);
            if (fmt == OutputFormat::json) {
                json j = estimate_to_json(est);
                j["ratio_to_sixth_moment"] = companion;  // target 1/2 at theta = 1/2, 1 at theta = 1
                std::printf("%s\n", j.dump(2).c_str());
            } else if (fmt == OutputFormat::csv) {
                std::printf("%s\n%s\n# ratio_to_sixth_moment,%s\n", csv_header().c_str(),
                            estimate_to_csv_row(est).c_str(), format_double(companion).c_str());
            } else {
                std::printf("%sratio to M3 : %s\n", estimate_to_text(est).c_str(),
                            format_double(companion).c_str());
            }
            return 0;
        }

        if (afe_cmd->parsed()) {
            if (!(afe_t0 >= kThetaMinT) || !(afe_t1 > afe_t0) || afe_samples < 2)
                throw std::invalid_argument("afe-survey: need 10 <= t0 < t1 and samples >= 2");
            const auto table = table_for(dirichlet_cutoff(afe_t1) + 1, afe_opts.sieve_limit);
            double max_residual = 0.0, max_t = afe_t0;
            std::vector<std::pair<double, double>> rows;
            rows.reserve(afe_samples);
            const double log_ratio = std::log(afe_t1 / afe_t0);
            for (std::uint64_t i = 0; i < afe_samples; ++i) {
                const double frac = static_cast<double>(i) / static_cast<double>(afe_samples - 1);
                const double t = afe_t0 * std::exp(frac * log_ratio);
                const double r = afe_residual(t, table);
                rows.emplace_back(t, r);
                if (r > max_residual) {
                    max_residual = r;
                    max_t = t;
                }
            }
            const OutputFormat fmt = parse_output_format(afe_opts.format);
            if (fmt == OutputFormat::json) {
                json j;
                j["t0"] = afe_t0;
                j["t1"] = afe_t1;
                j["samples"] = afe_samples;
                j["max_residual"] = max_residual;
                j["argmax_t"] = max_t;
                j["rows"] = json::array();
                for (auto& [t, r] : rows) j["rows"].push_back({{"t", t}, {"residual", r}});
                std::printf("%s\n", j.dump(2).c_str());
            } else if (fmt == OutputFormat::csv) {
                std::printf("t,residual\n");
                for (auto& [t, r] : rows)
                    std::printf("%s,%s\n", format_double(t).c_str(), format_double(r).c_str());
            } else {
                std::printf("max |E(1/2+it)| / log(2+t) over %llu log-spaced t in [%g, %g]: %s at t = %s\n",
                            static_cast<unsigned long long>(afe_samples), afe_t0, afe_t1,
                            format_double(max_residual).c_str(), format_double(max_t).c_str());
            }
            return 0;
        }

        if (corr_cmd->parsed()) {
            const auto table = table_for(corr_x + corr_hmax, corr_opts.sieve_limit);
            const OutputFormat fmt = parse_output_format(corr_opts.format);
            if (fmt == OutputFormat::csv) std::printf("x,h,value\n");
            json rows = json::array();
            for (std::uint64_t h = 1; h <= corr_hmax; ++h) {
                const std::uint64_t value = correlation_sum(table, corr_x, h);
                if (fmt == OutputFormat::json)
                    rows.push_back({{"x", corr_x}, {"h", h}, {"value", value}});
                else if (fmt == OutputFormat::csv)
                    std::printf("%llu,%llu,%llu\n", static_cast<unsigned long long>(corr_x),
                                static_cast<unsigned long long>(h),
                                static_cast<unsigned long long>(value));
                else
                    std::printf("sum_{n<=%llu} d3(n) d3(n+%llu) = %llu\n",
                                static_cast<unsigned long long>(corr_x),
                                static_cast<unsigned long long>(h),
                                static_cast<unsigned long long>(value));
            }
            if (fmt == OutputFormat::json) std::printf("%s\n", rows.dump(2).c_str());
            return 0;
        }

        if (grid_cmd->parsed()) {
            const auto samples = sample_uniform_grid(grid_t0, grid_t1, grid_dt);
            if (!grid_cache.empty()) {
                SampleCache cache;
                cache.t_start = grid_t0;
                cache.dt = grid_dt;
                cache.z_values.reserve(samples.size());
                for (const auto& s : samples) cache.z_values.push_back(s.z_value);
                write_sample_cache(grid_cache, cache);
            }
            const OutputFormat fmt = parse_output_format(grid_opts.format);
            if (fmt == OutputFormat::json) {
                json j;
                j["t0"] = grid_t0;
                j["dt"] = grid_dt;
                j["count"] = samples.size();
                if (!grid_cache.empty()) j["cache"] = grid_cache;
                double mean_z2 = 0.0;
                for (const auto& s : samples) mean_z2 += s.z_value * s.z_value;
                j["mean_Z_squared"] = samples.empty() ? 0.0 : mean_z2 / static_cast<double>(samples.size());
                std::printf("%s\n", j.dump(2).c_str());
            } else if (fmt == OutputFormat::csv) {
                std::printf("t,Z,theta\n");
                for (const auto& s : samples)
                    std::printf("%s,%s,%s\n", format_double(s.t).c_str(),
                                format_double(s.z_value).c_str(),
                                format_double(s.theta_value).c_str());
            } else {
                std::printf("%zu samples on [%g, %g], dt = %g%s%s\n", samples.size(), grid_t0,
                            grid_t1, grid_dt, grid_cache.empty() ? "" : ", cached to ",
                            grid_cache.c_str());
            }
            return 0;
        }

        if (trend_cmd->parsed()) {
            static const std::map<std::string, MomentKind> kinds{
                {"M1", MomentKind::m1},   {"M2", MomentKind::m2},     {"M3", MomentKind::m3},
                {"I1", MomentKind::i1},   {"I2", MomentKind::i2},     {"KN", MomentKind::kn},
                {"JN", MomentKind::jn},   {"cross", MomentKind::cross}, {"chi3", MomentKind::chi3},
                {"jara", MomentKind::jara}};
            const auto it = kinds.find(trend_kind);
            if (it == kinds.end()) throw std::invalid_argument("trend: unknown kind " + trend_kind);
            const double t_max = trend_T.empty() ? 0.0 : trend_T.back();
            const auto table = table_for(dirichlet_cutoff(t_max) + 1, trend_opts.sieve_limit);
            TrendParams params;
            params.theta = trend_theta;
            const TrendReport report = trend_report(it->second, trend_T, table, cfg, params);
            const OutputFormat fmt = parse_output_format(trend_opts.format);
            if (fmt == OutputFormat::json) {
                std::printf("%s\n", trend_to_json(report).dump(2).c_str());
            } else if (fmt == OutputFormat::csv) {
                std::printf("%s\n", csv_header().c_str());
                for (const auto& row : report.rows)
                    std::printf("%s\n", estimate_to_csv_row(row.estimate).c_str());
                std::printf("# value_slope,%s\n# main_term_slope,%s\n",
                            format_double(report.value_slope).c_str(),
                            format_double(report.main_term_slope).c_str());
            } else {
                for (const auto& row : report.rows)
                    std::printf("%s\n", estimate_to_text(row.estimate).c_str());
                std::printf("value slope     : %s\nmain-term slope : %s\n",
                            format_double(report.value_slope).c_str(),
                            format_double(report.main_term_slope).c_str());
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "zetalab: %s\n", e.what());
        return 1;
    }
    return 0;
}
