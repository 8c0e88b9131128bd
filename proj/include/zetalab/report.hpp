#pragma once

// Machine-readable rendering of moment estimates and trend tables. JSON is
// the canonical format; CSV has the fixed column set
//
//   kind,T,theta,value_re,value_im,main_term,ratio,quad_error
//
// (empty cells where a field does not apply). Doubles are printed with %.17g
// so identical runs produce byte-identical output.

#include <complex>
#include <cstdio>
#include <optional>
#include <string>

#include "json.hpp"

#include "zetalab/moments.hpp"

namespace zetalab {

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown output format: " + name + " (use json, csv or text)");
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline nlohmann::json estimate_to_json(const MomentEstimate& est) {
    nlohmann::json j;
    j["kind"] = moment_kind_name(est.kind);
    j["T"] = est.T;
    j["theta"] = est.theta ? nlohmann::json(*est.theta) : nlohmann::json(nullptr);
    j["value_re"] = est.value.real();
    j["value_im"] = est.value.imag();
    j["main_term"] = est.main_term ? nlohmann::json(*est.main_term) : nlohmann::json(nullptr);
    j["ratio"] = est.ratio ? nlohmann::json(*est.ratio) : nlohmann::json(nullptr);
    j["quad_error"] = est.quad_error;
    j["evaluations"] = est.evaluations;
    if ((est.kind == MomentKind::kn || est.kind == MomentKind::jn) && est.theta)
        j["proven"] = *est.theta < 0.5;  // the theorems hold for theta < 1/2
    return j;
}

inline std::string csv_header() {
    return "kind,T,theta,value_re,value_im,main_term,ratio,quad_error";
}

inline std::string estimate_to_csv_row(const MomentEstimate& est) {
    std::string row;
    row += moment_kind_name(est.kind);
    row += ',';
    row += format_double(est.T);
    row += ',';
    if (est.theta) row += format_double(*est.theta);
    row += ',';
    row += format_double(est.value.real());
    row += ',';
    row += format_double(est.value.imag());
    row += ',';
    if (est.main_term) row += format_double(*est.main_term);
    row += ',';
    if (est.ratio) row += format_double(*est.ratio);
    row += ',';
    row += format_double(est.quad_error);
    return row;
}

inline std::string estimate_to_text(const MomentEstimate& est) {
    std::string out;
    out += "kind        : ";
    out += moment_kind_name(est.kind);
    out += "\nT           : " + format_double(est.T);
    if (est.theta) out += "\ntheta       : " + format_double(*est.theta);
    out += "\nvalue       : " + format_double(est.value.real());
    if (est.value.imag() != 0.0) out += " + " + format_double(est.value.imag()) + "i";
    if (est.main_term) out += "\nmain term   : " + format_double(*est.main_term);
    if (est.ratio) out += "\nratio       : " + format_double(*est.ratio);
    out += "\nquad error  : " + format_double(est.quad_error);
    out += "\n";
    return out;
}

inline nlohmann::json trend_to_json(const TrendReport& report) {
    nlohmann::json j;
    j["kind"] = moment_kind_name(report.kind);
    j["value_slope"] = report.value_slope;
    j["main_term_slope"] = report.main_term_slope;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) j["rows"].push_back(estimate_to_json(row.estimate));
    return j;
}

}  // namespace zetalab
