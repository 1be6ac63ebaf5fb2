#pragma once

#include <optional>
#include <utility>

#include "tbcurv/metrics.hpp"
#include "tbcurv/minimize.hpp"
#include "tbcurv/rational_function.hpp"
#include "tbcurv/roots.hpp"

namespace tbcurv {

/// The three auxiliary functions of the closed-form scalar-curvature
/// pipeline for the (a, b) family:
///   L = a' / (2a),
///   M = (2b - a') / (2 (a + 2tb)),
///   N = (a b' - 2 a' b) / (2a (a + 2tb)).
/// Well defined on [0, inf) for a valid metric (a > 0 and a + 2tb > 0).
struct AuxiliaryFunctions {
    RationalFunction L;
    RationalFunction M;
    RationalFunction N;
};

/// F2 = L - M (1 + 2tL),  F3 = N - (M' + M^2 + 2tMN).
struct FTerms {
    RationalFunction f2;
    RationalFunction f3;
};

/// Exact scalar curvature of the scaled (a, b) metric over a space form, as
/// a function of t alone, tagged with its provenance.
struct ScalarProfile {
    RationalFunction sc;
    int n;
    Rational curvature;
    GNaturalMetric metric;
};

/// Requires m valid (precondition; poles on [0, inf) would otherwise leak
/// into the quotients).
inline AuxiliaryFunctions auxiliary_functions(const GNaturalMetric& m) {
    const RationalFunction two(2);
    const RationalFunction a = m.a();
    const RationalFunction b = m.b();
    const RationalFunction ap = a.derivative();
    const RationalFunction bp = b.derivative();
    const RationalFunction alpha = m.alpha();  // a + 2tb
    AuxiliaryFunctions aux;
    aux.L = ap / (two * a);
    aux.M = (two * b - ap) / (two * alpha);
    aux.N = (a * bp - two * ap * b) / (two * a * alpha);
    return aux;
}

inline FTerms f_terms(const AuxiliaryFunctions& aux) {
    const RationalFunction t(Polynomial::variable());
    const RationalFunction two_t = RationalFunction(2) * t;
    FTerms f;
    f.f2 = aux.L - aux.M * (RationalFunction(1) + two_t * aux.L);
    f.f3 = aux.N - (aux.M.derivative() + aux.M * aux.M + two_t * aux.M * aux.N);
    return f;
}

/// Closed-form scalar curvature of the (a, b) family over (M^n, C):
///   Sc = (n-1) { nC + t (2 - 3a(t)) C^2 - (n F2 + 4t F3) / a(t) },
/// divided by the metric's global scale (a conformal factor c multiplies a
/// metric's scalar curvature by 1/c). Requires m valid.
inline ScalarProfile scalar_profile(const GNaturalMetric& m, const SpaceForm& sf) {
    const AuxiliaryFunctions aux = auxiliary_functions(m);
    const FTerms f = f_terms(aux);
    const RationalFunction t(Polynomial::variable());
    const RationalFunction n(Rational(sf.n));
    const RationalFunction c(sf.curvature);
    const RationalFunction a = m.a();

    const RationalFunction curvature_terms =
        n * c + t * (RationalFunction(2) - RationalFunction(3) * a) * c * c;
    const RationalFunction f_part = (n * f.f2 + RationalFunction(4) * t * f.f3) / a;
    const RationalFunction sc =
        (n - RationalFunction(1)) * (curvature_terms - f_part) / RationalFunction(m.scale());

    return {sc, sf.n, sf.curvature, m};
}

enum class PositivityVerdict {
    uniformly_positive,     ///< inf_{t>=0} Sc(t) > 0, enclosed in [c1_lower, c1_upper]
    positive_inf_zero,      ///< Sc > 0 pointwise on [0, inf) but the infimum is 0
    not_positive,           ///< some t >= 0 has Sc(t) <= 0
};

inline std::string to_string(PositivityVerdict v) {
    switch (v) {
        case PositivityVerdict::uniformly_positive: return "uniformly-positive";
        case PositivityVerdict::positive_inf_zero: return "positive-but-inf-zero";
        default: return "not-positive";
    }
}

/// Machine-checkable positivity evidence for a scalar profile. Every field
/// re-verifies against the exactalg primitives: the verdict follows from
/// the numerator root count on [0, inf), the value at 0 and the limit at
/// +inf; the C1 enclosure re-verifies through minimize_on_halfline.
struct PositivityCertificate {
    PositivityVerdict verdict = PositivityVerdict::not_positive;
    std::optional<Rational> c1_lower;  ///< when uniformly_positive
    std::optional<Rational> c1_upper;
    std::optional<IsolatingInterval> minimizer;  ///< when uniformly_positive and attained
    std::optional<Rational> witness;   ///< when not_positive, if a rational witness exists
    int numerator_roots = 0;
    int denominator_roots = 0;
    Rational value_at_zero;
    LimitAtInfinity limit;
};

/// Certifies whether inf_{t >= 0} Sc(t) > 0. The default precision of the
/// C1 enclosure is the caller's `precision`; the enclosure is additionally
/// refined until its lower endpoint is strictly positive, which terminates
/// because the infimum is (provably, by the root-count evidence) positive.
/// Profiles with poles on [0, inf) are rejected (they cannot come from a
/// valid metric).
inline PositivityCertificate certify_uniform_positivity(const ScalarProfile& p,
                                                        const Rational& precision) {
    if (precision <= 0) throw std::invalid_argument("certify: precision must be positive");
    PositivityCertificate cert;
    cert.denominator_roots = count_real_roots_from(p.sc.den(), Rational(0));
    if (cert.denominator_roots != 0)
        throw std::invalid_argument("certify: profile has poles on [0, inf)");
    cert.limit = limit_at_infinity(p.sc);
    cert.value_at_zero = p.sc.evaluate(Rational(0));

    if (p.sc.is_zero()) {
        cert.verdict = PositivityVerdict::not_positive;
        cert.witness = Rational(0);
        return cert;
    }
    cert.numerator_roots = count_real_roots_from(p.sc.num(), Rational(0));

    if (cert.value_at_zero <= 0) {
        cert.verdict = PositivityVerdict::not_positive;
        cert.witness = Rational(0);
        return cert;
    }
    if (cert.numerator_roots != 0) {
        cert.verdict = PositivityVerdict::not_positive;
        cert.witness = certify_positive_from(p.sc.num(), Rational(0)).witness;
        return cert;
    }

    // Sc > 0 pointwise on [0, inf); its limit is finite nonnegative or +inf.
    if (cert.limit.is_finite() && cert.limit.value == 0) {
        cert.verdict = PositivityVerdict::positive_inf_zero;
        return cert;
    }

    cert.verdict = PositivityVerdict::uniformly_positive;
    Rational target = precision;
    HalfLineMinimum min = minimize_on_halfline(p.sc, target);
    while (min.lower <= 0) {
        target /= 16;
        min = minimize_on_halfline(p.sc, target);
    }
    cert.c1_lower = min.lower;
    cert.c1_upper = min.upper;
    cert.minimizer = min.location;
    return cert;
}

/// Evidence that a polynomial exceeds a constant level strictly on the
/// whole half-line [0, inf).
struct LevelCheck {
    bool exceeds = false;
    int root_count = 0;          ///< distinct roots of (q - level) on [0, inf)
    Rational value_at_zero;      ///< q(0) - level
    bool positive_leading = false;
    std::optional<Rational> witness;  ///< point with q <= level, when found
};

/// Certifies q(t) > level for all t >= 0: zero roots of q - level on
/// [0, inf), a positive value at 0 and positive leading behavior.
inline LevelCheck exceeds_level(const Polynomial& q, const Rational& level) {
    LevelCheck check;
    const Polynomial d = q - Polynomial(level);
    check.value_at_zero = d.evaluate(Rational(0));
    if (d.is_zero()) {
        check.witness = Rational(0);
        return check;
    }
    const PointwiseSignCheck sign_check = certify_positive_from(d, Rational(0));
    check.root_count = sign_check.distinct_roots;
    check.exceeds = sign_check.holds;
    check.witness = sign_check.witness;
    check.positive_leading = d.leading_coefficient() > 0 || d.degree() == 0;
    return check;
}

/// Certifies Sc(t) > level for all t >= 0 via the numerator comparison
/// num - level * den > 0 (the denominator is positive on [0, inf) for any
/// pipeline profile, making the two statements equivalent).
inline LevelCheck level_exceedance(const ScalarProfile& p, const Rational& level) {
    if (count_real_roots_from(p.sc.den(), Rational(0)) != 0)
        throw std::invalid_argument("level check: profile has poles on [0, inf)");
    const Polynomial d = p.sc.num() - level * p.sc.den();
    LevelCheck check;
    check.value_at_zero = d.evaluate(Rational(0));
    if (d.is_zero()) {
        check.witness = Rational(0);
        return check;
    }
    const PointwiseSignCheck sign_check = certify_positive_from(d, Rational(0));
    check.root_count = sign_check.distinct_roots;
    check.exceeds = sign_check.holds;
    check.witness = sign_check.witness;
    check.positive_leading = d.leading_coefficient() > 0 || d.degree() == 0;
    return check;
}

}  // namespace tbcurv
