#pragma once

#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

#include "janowski/norm.hpp"

namespace janowski {

/// One computed norm, as emitted by the CLI. Field order is fixed:
/// A, B, norm, case, argmax_x, axis, alpha_root, beta.
struct OutputRecord {
    double a = 0.0;
    double b = 0.0;
    double norm = 0.0;
    std::string case_name;
    double argmax_x = 0.0;
    char axis = '+';
    std::optional<double> alpha_root;
    std::optional<double> beta;

    static OutputRecord from(const JanowskiParams& p, const NormResult& r) {
        OutputRecord rec;
        rec.a = p.a();
        rec.b = p.b();
        rec.norm = r.value;
        rec.case_name = std::string(branch_name(r.tag.branch));
        rec.argmax_x = r.argmax_x;
        rec.axis = r.axis == Axis::Positive ? '+' : '-';
        if (r.root_cert) rec.alpha_root = r.root_cert->root;
        rec.beta = r.tag.beta;
        return rec;
    }
};

inline constexpr std::string_view kCsvHeader = "A,B,norm,case,argmax_x,axis,alpha_root,beta";

/// Shortest decimal string that parses back to exactly `v`.
inline std::string format_exact(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

/// `digits` significant digits, %g style.
inline std::string format_human(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline std::string to_csv_row(const OutputRecord& r) {
    auto opt = [](const std::optional<double>& v) { return v ? format_exact(*v) : std::string(); };
    std::string s;
    s += format_exact(r.a) + ',' + format_exact(r.b) + ',' + format_exact(r.norm) + ',';
    s += r.case_name + ',' + format_exact(r.argmax_x) + ',' + r.axis + ',';
    s += opt(r.alpha_root) + ',' + opt(r.beta);
    return s;
}

inline std::string to_json(const OutputRecord& r) {
    auto opt = [](const std::optional<double>& v) { return v ? format_exact(*v) : std::string("null"); };
    std::string s = "{";
    s += "\"A\":" + format_exact(r.a);
    s += ",\"B\":" + format_exact(r.b);
    s += ",\"norm\":" + format_exact(r.norm);
    s += ",\"case\":\"" + r.case_name + "\"";
    s += ",\"argmax_x\":" + format_exact(r.argmax_x);
    s += ",\"axis\":\"" + std::string(1, r.axis) + "\"";
    s += ",\"alpha_root\":" + opt(r.alpha_root);
    s += ",\"beta\":" + opt(r.beta);
    s += "}";
    return s;
}

inline std::string to_human(const OutputRecord& r) {
    auto opt = [](const std::optional<double>& v) { return v ? format_human(*v) : std::string("-"); };
    std::string s;
    s += "A          " + format_human(r.a) + "\n";
    s += "B          " + format_human(r.b) + "\n";
    s += "norm       " + format_human(r.norm) + "\n";
    s += "case       " + r.case_name + "\n";
    s += "argmax_x   " + format_human(r.argmax_x) + "\n";
    s += "axis       " + std::string(1, r.axis) + "\n";
    s += "alpha_root " + opt(r.alpha_root) + "\n";
    s += "beta       " + opt(r.beta) + "\n";
    return s;
}

}  // namespace janowski
