#pragma once

#include <charconv>
#include <string>
#include <vector>

#include <json.hpp>

#include "tbcurv/curvature.hpp"
#include "tbcurv/oracle.hpp"

namespace tbcurv {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal rendering of a double.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline Json coefficients_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_fraction_string(c));
    return arr;
}

/// {num: [...], den: [...]} with ascending "p/q" coefficient strings; exact
/// and re-parseable to the identical canonical rational function.
inline Json rational_function_json(const RationalFunction& f) {
    return Json{{"num", coefficients_json(f.num())}, {"den", coefficients_json(f.den())}};
}

inline RationalFunction rational_function_from_json(const Json& j) {
    std::vector<Rational> num, den;
    for (const auto& c : j.at("num")) num.push_back(parse_rational(c.get<std::string>()));
    for (const auto& c : j.at("den")) den.push_back(parse_rational(c.get<std::string>()));
    return {Polynomial(std::move(num)), Polynomial(std::move(den))};
}

inline Json metric_json(const GNaturalMetric& m) {
    return Json{{"a", rational_function_json(m.a())},
                {"b", rational_function_json(m.b())},
                {"scale", to_fraction_string(m.scale())}};
}

inline Json profile_json(const ScalarProfile& p) {
    Json j;
    j["n"] = p.n;
    j["C"] = to_fraction_string(p.curvature);
    j["metric"] = metric_json(p.metric);
    j["numerator"] = coefficients_json(p.sc.num());
    j["denominator"] = coefficients_json(p.sc.den());
    return j;
}

inline Json certificate_json(const PositivityCertificate& cert) {
    Json j;
    j["verdict"] = to_string(cert.verdict);
    j["c1_lo"] = cert.c1_lower ? Json(to_fraction_string(*cert.c1_lower)) : Json(nullptr);
    j["c1_hi"] = cert.c1_upper ? Json(to_fraction_string(*cert.c1_upper)) : Json(nullptr);
    j["c1_approx"] = cert.c1_lower ? Json(to_double(*cert.c1_lower)) : Json(nullptr);
    j["witness_t"] = cert.witness ? Json(to_fraction_string(*cert.witness)) : Json(nullptr);
    j["evidence"] = Json{{"root_counts", Json{{"numerator", cert.numerator_roots},
                                              {"denominator", cert.denominator_roots}}},
                         {"value_at_zero", to_fraction_string(cert.value_at_zero)},
                         {"limit", cert.limit.to_string()}};
    return j;
}

inline Json domination_json(const DominationResult& r) {
    Json j;
    j["dominates"] = r.dominates;
    j["witness_t"] = r.witness_t ? Json(to_fraction_string(*r.witness_t)) : Json(nullptr);
    j["failed_block"] = r.failed_block ? Json(to_string(*r.failed_block)) : Json(nullptr);
    j["evidence"] = Json{{"a_difference_roots", r.a_difference.distinct_roots},
                         {"alpha_difference_roots", r.alpha_difference.distinct_roots}};
    return j;
}

inline Json report_json(const ValidationReport& report) {
    Json samples = Json::array();
    for (const auto& s : report.samples) {
        Json xs = Json::array(), us = Json::array();
        for (int i = 0; i < s.x.size(); ++i) xs.push_back(s.x(i));
        for (int i = 0; i < s.u.size(); ++i) us.push_back(s.u(i));
        samples.push_back(Json{{"x", xs},
                               {"u", us},
                               {"t", s.t},
                               {"closed", s.closed_form},
                               {"oracle", s.oracle},
                               {"rel_err", s.rel_err}});
    }
    Json j;
    j["samples"] = std::move(samples);
    j["max_rel_err"] = report.max_rel_err;
    j["pass"] = report.pass;
    j["step"] = report.step;
    j["tolerance"] = report.tolerance;
    j["seed"] = report.seed;
    j["ill_conditioned"] = report.ill_conditioned;
    return j;
}

/// CSV profile samples: header "t,Sc", one row per grid point from lo to hi
/// inclusive with the given step (exact rational stepping, no float drift),
/// LF line endings.
inline std::string profile_csv(const ScalarProfile& p, const Rational& lo, const Rational& hi,
                               const Rational& step) {
    if (step <= 0) throw std::invalid_argument("csv sampling step must be positive");
    if (lo > hi) throw std::invalid_argument("csv sampling range is empty");
    std::string out = "t,Sc\n";
    for (Rational t = lo; t <= hi; t += step) {
        out += format_double(to_double(t));
        out += ',';
        out += format_double(to_double(p.sc.evaluate(t)));
        out += '\n';
    }
    return out;
}

}  // namespace tbcurv
