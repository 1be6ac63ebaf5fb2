// Command-line surface for the tangent-bundle curvature pipeline: exact
// scalar-curvature profiles, uniform-positivity certificates, metric
// domination checks, finite-difference cross-validation and grid search
// over parameter families.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 usage or parse error, 3 invalid metric.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tbcurv/io.hpp"
#include "tbcurv/parse.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidMetric = 3;

struct invalid_metric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MetricOptions {
    std::string builtin;
    std::string a_expr;
    std::string b_expr;
    std::string scale = "1";
};

void add_metric_options(CLI::App* cmd, MetricOptions& opts, const std::string& prefix = "") {
    const std::string dash = prefix.empty() ? "--" : "--" + prefix + "-";
    cmd->add_option(dash + "metric", opts.builtin, "builtin metric: paper | cheeger-gromoll | sasaki");
    cmd->add_option(dash + "a", opts.a_expr, "a(t) expression (e.g. \"1/100\")");
    cmd->add_option(dash + "b", opts.b_expr, "b(t) expression (e.g. \"1+t\")");
    cmd->add_option(dash + "scale", opts.scale, "global conformal factor (positive rational)");
}

tbcurv::GNaturalMetric resolve_metric(const MetricOptions& opts) {
    using namespace tbcurv;
    GNaturalMetric m = [&] {
        if (!opts.builtin.empty()) {
            if (!opts.a_expr.empty() || !opts.b_expr.empty())
                throw std::invalid_argument("give either a builtin metric name or --a/--b, not both");
            return builtin_metric(opts.builtin);
        }
        if (opts.a_expr.empty() || opts.b_expr.empty())
            throw std::invalid_argument("a metric needs --metric or both --a and --b");
        return GNaturalMetric(parse_rational_function(opts.a_expr),
                              parse_rational_function(opts.b_expr));
    }();
    m = m.with_scale(parse_rational(opts.scale));
    const MetricValidation v = validate(m);
    if (!v.valid) {
        std::string what = "metric is not positive definite";
        if (v.witness) what += " (witness t = " + to_fraction_string(*v.witness) + ")";
        throw invalid_metric_error(what);
    }
    return m;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

struct Range {
    tbcurv::Rational lo, hi, step;
};

Range parse_range(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("range must be lo:hi:step, got '" + text + "'");
    return {tbcurv::parse_rational(text.substr(0, c1)),
            tbcurv::parse_rational(text.substr(c1 + 1, c2 - c1 - 1)),
            tbcurv::parse_rational(text.substr(c2 + 1))};
}

int cmd_profile(const MetricOptions& mopts, int n, const std::string& curvature,
                const std::string& format, const std::string& samples, const std::string& out) {
    using namespace tbcurv;
    const GNaturalMetric m = resolve_metric(mopts);
    const SpaceForm sf(n, parse_rational(curvature));
    const ScalarProfile profile = scalar_profile(m, sf);
    if (format == "csv") {
        const Range r = parse_range(samples);
        write_output(out, profile_csv(profile, r.lo, r.hi, r.step));
    } else if (format == "json") {
        write_output(out, profile_json(profile).dump(2) + "\n");
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    return kExitOk;
}

int cmd_certify(const MetricOptions& mopts, int n, const std::string& curvature,
                const std::string& precision, const std::string& out) {
    using namespace tbcurv;
    const GNaturalMetric m = resolve_metric(mopts);
    const SpaceForm sf(n, parse_rational(curvature));
    const ScalarProfile profile = scalar_profile(m, sf);
    const PositivityCertificate cert =
        certify_uniform_positivity(profile, parse_rational(precision));
    write_output(out, certificate_json(cert).dump(2) + "\n");
    return cert.verdict == PositivityVerdict::uniformly_positive ? kExitOk : kExitNegative;
}

int cmd_dominate(const MetricOptions& lhs, const MetricOptions& rhs, const std::string& out) {
    using namespace tbcurv;
    const GNaturalMetric m1 = resolve_metric(lhs);
    const GNaturalMetric m2 = resolve_metric(rhs);
    const DominationResult result = dominates(m1, m2);
    write_output(out, domination_json(result).dump(2) + "\n");
    return result.dominates ? kExitOk : kExitNegative;
}

int cmd_oracle(const MetricOptions& mopts, int n, const std::string& curvature, int count,
               std::uint64_t seed, double tolerance, double step, double margin,
               const std::string& out) {
    using namespace tbcurv;
    const GNaturalMetric m = resolve_metric(mopts);
    const Rational c = parse_rational(curvature);
    const ConformalChart chart = margin > 0 ? ConformalChart(n, c, margin) : ConformalChart(n, c);
    const ValidationReport report = cross_validate(chart, m, count, seed, tolerance, step);
    write_output(out, report_json(report).dump(2) + "\n");
    return report.pass ? kExitOk : kExitNegative;
}

int cmd_search(const std::string& a_template, const std::string& b_template,
               const std::vector<std::string>& grids, int n, const std::string& curvature,
               const std::string& precision, const std::string& out) {
    using namespace tbcurv;
    const ExpressionTemplate a_tpl = parse_template(a_template);
    const ExpressionTemplate b_tpl = parse_template(b_template);
    const SpaceForm sf(n, parse_rational(curvature));
    const Rational prec = parse_rational(precision);

    std::map<std::string, std::vector<Rational>> axes;
    for (const auto& g : grids) {
        const auto eq = g.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid must be name=lo:hi:step, got '" + g + "'");
        const std::string name = g.substr(0, eq);
        const Range r = parse_range(g.substr(eq + 1));
        if (r.step <= 0 || r.lo > r.hi)
            throw std::invalid_argument("empty grid for placeholder '" + name + "'");
        auto& vals = axes[name];
        for (Rational v = r.lo; v <= r.hi; v += r.step) vals.push_back(v);
    }
    std::set<std::string> needed = a_tpl.placeholders();
    needed.merge(b_tpl.placeholders());
    for (const auto& name : needed)
        if (!axes.count(name))
            throw std::invalid_argument("no grid for placeholder '" + name + "'");
    if (axes.empty()) throw std::invalid_argument("empty grid: no placeholders to search");

    struct Entry {
        std::map<std::string, Rational> params;
        std::optional<PositivityCertificate> cert;  // nullopt: invalid metric
        std::size_t index = 0;
    };
    std::vector<Entry> entries;
    std::vector<std::map<std::string, Rational>> assignments{{}};
    for (const auto& [name, vals] : axes) {
        std::vector<std::map<std::string, Rational>> next;
        for (const auto& partial : assignments)
            for (const auto& v : vals) {
                auto full = partial;
                full.emplace(name, v);
                next.push_back(std::move(full));
            }
        assignments = std::move(next);
    }

    for (std::size_t i = 0; i < assignments.size(); ++i) {
        Entry e;
        e.params = assignments[i];
        e.index = i;
        const GNaturalMetric m(instantiate(a_tpl, e.params), instantiate(b_tpl, e.params));
        if (validate(m).valid) e.cert = certify_uniform_positivity(scalar_profile(m, sf), prec);
        entries.push_back(std::move(e));
    }

    // Ranked by certified C1 lower bound, descending; invalid and
    // non-positive instantiations are listed unranked in grid order.
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        const bool pa = a.cert && a.cert->verdict == PositivityVerdict::uniformly_positive;
        const bool pb = b.cert && b.cert->verdict == PositivityVerdict::uniformly_positive;
        if (pa != pb) return pa;
        if (pa && pb && *a.cert->c1_lower != *b.cert->c1_lower)
            return *a.cert->c1_lower > *b.cert->c1_lower;
        return a.index < b.index;
    });

    Json results = Json::array();
    int rank = 0;
    for (const auto& e : entries) {
        Json j;
        Json params;
        for (const auto& [name, v] : e.params) params[name] = to_fraction_string(v);
        j["params"] = params;
        if (!e.cert) {
            j["status"] = "invalid";
            j["rank"] = nullptr;
        } else {
            j["status"] = to_string(e.cert->verdict);
            const bool positive = e.cert->verdict == PositivityVerdict::uniformly_positive;
            j["rank"] = positive ? Json(++rank) : Json(nullptr);
            j["c1_lo"] = e.cert->c1_lower ? Json(to_fraction_string(*e.cert->c1_lower)) : Json(nullptr);
            j["c1_hi"] = e.cert->c1_upper ? Json(to_fraction_string(*e.cert->c1_upper)) : Json(nullptr);
            j["c1_approx"] = e.cert->c1_lower ? Json(to_double(*e.cert->c1_lower)) : Json(nullptr);
        }
        results.push_back(std::move(j));
    }
    Json doc;
    doc["family"] = Json{{"a", a_template}, {"b", b_template}};
    doc["n"] = n;
    doc["C"] = curvature;
    doc["results"] = std::move(results);
    write_output(out, doc.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact scalar-curvature profiles and certificates for (a, b) tangent-bundle metrics"};
    app.require_subcommand(1);

    // profile
    auto* profile = app.add_subcommand("profile", "export the exact Sc(t) profile");
    MetricOptions profile_metric;
    add_metric_options(profile, profile_metric);
    int profile_n = 2;
    std::string profile_c = "-1", profile_format = "json", profile_samples = "0:5:1/100",
                profile_out;
    profile->add_option("--n", profile_n, "base dimension (>= 2)");
    profile->add_option("--C", profile_c, "sectional curvature (rational)");
    profile->add_option("--format", profile_format, "json | csv");
    profile->add_option("--samples", profile_samples, "csv sampling range lo:hi:step");
    profile->add_option("--out", profile_out, "output path (default stdout)");

    // certify
    auto* certify = app.add_subcommand("certify", "certify uniform positivity of Sc");
    MetricOptions certify_metric;
    add_metric_options(certify, certify_metric);
    int certify_n = 2;
    std::string certify_c = "-1", certify_precision = "1/1000000", certify_out;
    certify->add_option("--n", certify_n, "base dimension (>= 2)");
    certify->add_option("--C", certify_c, "sectional curvature (rational)");
    certify->add_option("--precision", certify_precision, "C1 enclosure width (rational)");
    certify->add_option("--out", certify_out, "output path (default stdout)");

    // dominate
    auto* dominate = app.add_subcommand("dominate", "check quadratic-form domination lhs >= rhs");
    MetricOptions lhs_metric, rhs_metric;
    add_metric_options(dominate, lhs_metric, "lhs");
    add_metric_options(dominate, rhs_metric, "rhs");
    std::string dominate_out;
    dominate->add_option("--out", dominate_out, "output path (default stdout)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "cross-validate Sc against finite differences");
    MetricOptions oracle_metric;
    add_metric_options(oracle, oracle_metric);
    int oracle_n = 2, oracle_count = 20;
    std::uint64_t oracle_seed = 42;
    double oracle_tol = 1e-4, oracle_step = 1e-3, oracle_margin = 0.0;
    std::string oracle_c = "-1", oracle_out;
    oracle->add_option("--n", oracle_n, "base dimension (>= 2)");
    oracle->add_option("--C", oracle_c, "sectional curvature (rational)");
    oracle->add_option("--count", oracle_count, "number of samples");
    oracle->add_option("--seed", oracle_seed, "sampling seed");
    oracle->add_option("--tol", oracle_tol, "pass tolerance (relative; absolute below |Sc| = 1)");
    oracle->add_option("--step", oracle_step, "finite-difference step");
    oracle->add_option("--margin", oracle_margin, "chart radius override");
    oracle->add_option("--out", oracle_out, "output path (default stdout)");

    // search
    auto* search = app.add_subcommand("search", "grid-search a parameter family by certified C1");
    std::string search_a, search_b, search_c = "-1", search_precision = "1/1000000", search_out;
    std::vector<std::string> search_grids;
    int search_n = 2;
    search->add_option("--a-template", search_a, "a(t) template with placeholders")->required();
    search->add_option("--b-template", search_b, "b(t) template with placeholders")->required();
    search->add_option("--grid", search_grids, "placeholder grid name=lo:hi:step (repeatable)");
    search->add_option("--n", search_n, "base dimension (>= 2)");
    search->add_option("--C", search_c, "sectional curvature (rational)");
    search->add_option("--precision", search_precision, "C1 enclosure width (rational)");
    search->add_option("--out", search_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (profile->parsed())
            return cmd_profile(profile_metric, profile_n, profile_c, profile_format,
                               profile_samples, profile_out);
        if (certify->parsed())
            return cmd_certify(certify_metric, certify_n, certify_c, certify_precision,
                               certify_out);
        if (dominate->parsed()) return cmd_dominate(lhs_metric, rhs_metric, dominate_out);
        if (oracle->parsed())
            return cmd_oracle(oracle_metric, oracle_n, oracle_c, oracle_count, oracle_seed,
                              oracle_tol, oracle_step, oracle_margin, oracle_out);
        if (search->parsed())
            return cmd_search(search_a, search_b, search_grids, search_n, search_c,
                              search_precision, search_out);
    } catch (const invalid_metric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidMetric;
    } catch (const tbcurv::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tbcurv::step_too_large_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
