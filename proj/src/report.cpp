#include "coprime/report.hpp"

#include <cstdio>

namespace coprime {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
    return out;
}

const char* bool_token(bool b) { return b ? "true" : "false"; }

} // namespace

std::string format_double17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string render_poly_json(const GraphPolynomial& p) {
    std::string out = "{\"signed\":";
    out += bool_token(p.is_signed);
    out += ",\"coefficients\":[";
    for (size_t k = 0; k < p.coeffs.size(); ++k) {
        if (k > 0) out += ',';
        out += '"';
        out += to_string(p.coeffs[k]);
        out += '"';
    }
    out += "]}";
    return out;
}

std::string render_density_json(const DensityEstimate& est) {
    std::string out = "{\"value\":";
    out += format_double17(est.value);
    out += ",\"prime_bound\":";
    out += std::to_string(est.prime_bound);
    out += ",\"tail_bound\":";
    out += format_double17(est.tail_bound);
    out += ",\"float_budget\":";
    out += format_double17(est.float_budget);
    out += '}';
    return out;
}

std::string render_count_json(const CountResult& result) {
    std::string out = "{\"count\":\"";
    out += to_string(result.count);
    out += "\",\"method\":\"";
    out += to_string(result.method);
    out += "\"}";
    return out;
}

std::string render_count_both_json(const CountResult& result, bool methods_agree) {
    std::string out = "{\"count\":\"";
    out += to_string(result.count);
    out += "\",\"method\":\"both\",\"methods_agree\":";
    out += bool_token(methods_agree);
    out += '}';
    return out;
}

std::string render_f_json(int128 value, const std::string& path, bool agree) {
    std::string out = "{\"value\":\"";
    out += to_string(value);
    out += "\",\"path\":\"";
    out += path;
    out += '"';
    if (path == "both") {
        out += ",\"agree\":";
        out += bool_token(agree);
    }
    out += '}';
    return out;
}

std::string render_table_tsv(const std::vector<ErrorDiagnostic>& rows) {
    std::string out = "x\tg\tmain_term\tabs_error\tratio\n";
    for (const ErrorDiagnostic& d : rows) {
        out += std::to_string(d.x);
        out += '\t';
        out += to_string(d.count);
        out += '\t';
        out += format_double17(d.main_term);
        out += '\t';
        out += format_double17(d.abs_error);
        out += '\t';
        out += format_double17(d.ratio);
        out += '\n';
    }
    return out;
}

std::string render_table_json(const std::vector<ErrorDiagnostic>& rows) {
    std::string out = "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const ErrorDiagnostic& d = rows[i];
        if (i > 0) out += ',';
        out += "{\"x\":";
        out += std::to_string(d.x);
        out += ",\"g\":\"";
        out += to_string(d.count);
        out += "\",\"main_term\":";
        out += format_double17(d.main_term);
        out += ",\"abs_error\":";
        out += format_double17(d.abs_error);
        out += ",\"ratio\":";
        out += format_double17(d.ratio);
        out += '}';
    }
    out += ']';
    return out;
}

std::string render_verify_json(const std::vector<SuiteResult>& suites) {
    std::string out = "{\"suites\":[";
    for (size_t i = 0; i < suites.size(); ++i) {
        const SuiteResult& s = suites[i];
        if (i > 0) out += ',';
        out += "{\"name\":\"";
        out += json_escape(s.name);
        out += "\",\"cases\":";
        out += std::to_string(s.cases);
        out += ",\"failures\":";
        out += std::to_string(s.failures);
        out += ",\"pass\":";
        out += bool_token(s.passed());
        out += ",\"note\":\"";
        out += json_escape(s.note);
        out += "\"}";
    }
    out += "],\"pass\":";
    out += bool_token(all_passed(suites));
    out += '}';
    return out;
}

} // namespace coprime
