#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "tbcurv/rational_function.hpp"
#include "tbcurv/roots.hpp"

namespace tbcurv {

/// Space form (M^n, g) of constant sectional curvature.
struct SpaceForm {
    int n;
    Rational curvature;

    SpaceForm(int n, Rational curvature) : n(n), curvature(std::move(curvature)) {
        if (n < 2) throw std::invalid_argument("space form dimension must be at least 2");
    }
};

/// Two-parameter metric on the tangent bundle of a space form: g on
/// horizontal pairs, zero on mixed pairs and
/// a(t) g(X,Y) + b(t) g(X,U) g(Y,U) on vertical pairs, with t = g(U,U)/2.
/// `scale` is a global conformal factor on the whole total-space metric
/// (it also scales the horizontal block, which (a, b) cannot express).
class GNaturalMetric {
public:
    GNaturalMetric(RationalFunction a, RationalFunction b, Rational scale = Rational(1))
        : a_(std::move(a)), b_(std::move(b)), scale_(std::move(scale)) {
        if (scale_ <= 0) throw std::invalid_argument("metric scale must be positive");
    }

    const RationalFunction& a() const { return a_; }
    const RationalFunction& b() const { return b_; }
    const Rational& scale() const { return scale_; }

    /// Vertical eigenvalue along U: alpha(t) = a(t) + 2 t b(t). The other
    /// vertical eigenvalue (on the orthogonal complement of U) is a(t)
    /// itself, with multiplicity n - 1.
    RationalFunction alpha() const {
        return a_ + RationalFunction(Polynomial({Rational(0), Rational(2)})) * b_;
    }

    GNaturalMetric with_scale(Rational scale) const { return {a_, b_, std::move(scale)}; }

private:
    RationalFunction a_;
    RationalFunction b_;
    Rational scale_;
};

/// The named metrics: "paper" (a = 1/100, b = 1 + t), "cheeger-gromoll"
/// (a = b = 1/(1+2t)) and "sasaki" (a = 1, b = 0), all at scale 1.
inline GNaturalMetric builtin_metric(std::string_view name) {
    if (name == "paper")
        return {RationalFunction(Rational(1, 100)),
                RationalFunction(Polynomial({Rational(1), Rational(1)}))};
    if (name == "cheeger-gromoll") {
        const RationalFunction cg(Polynomial(Rational(1)), Polynomial({Rational(1), Rational(2)}));
        return {cg, cg};
    }
    if (name == "sasaki") return {RationalFunction(Rational(1)), RationalFunction(Rational(0))};
    throw std::invalid_argument("unknown builtin metric '" + std::string(name) + "'");
}

/// Positivity evidence for one function of t on [0, inf): pole freedom plus
/// a strict-positivity certificate for the numerator, all re-checkable with
/// count_real_roots.
struct FunctionPositivity {
    bool pole_free = false;      ///< denominator has no roots on [0, inf)
    int denominator_roots = 0;
    PointwiseSignCheck numerator;  ///< strict positivity of the numerator

    bool positive() const { return pole_free && numerator.holds; }
};

/// Nondegeneracy certificate: the metric is positive definite iff a(t) > 0
/// and alpha(t) > 0 for all t >= 0 (the vertical form diagonalizes into
/// those two eigenvalues; the horizontal block is a itself positive).
/// On refutation, `witness` is a t* >= 0 with a(t*) <= 0 or alpha(t*) <= 0
/// when such a rational point exists.
struct MetricValidation {
    bool valid = false;
    FunctionPositivity a_positive;
    FunctionPositivity alpha_positive;
    std::optional<Rational> witness;
};

namespace detail {

inline FunctionPositivity check_positive_function(const RationalFunction& f) {
    FunctionPositivity check;
    check.denominator_roots = count_real_roots_from(f.den(), Rational(0));
    check.pole_free = check.denominator_roots == 0;
    if (check.pole_free) check.numerator = certify_positive_from(f.num(), Rational(0));
    return check;
}

}  // namespace detail

inline MetricValidation validate(const GNaturalMetric& m) {
    MetricValidation v;
    v.a_positive = detail::check_positive_function(m.a());
    v.alpha_positive = detail::check_positive_function(m.alpha());
    v.valid = v.a_positive.positive() && v.alpha_positive.positive();
    if (!v.valid) {
        if (!v.a_positive.positive() && v.a_positive.numerator.witness)
            v.witness = v.a_positive.numerator.witness;
        else if (v.alpha_positive.numerator.witness)
            v.witness = v.alpha_positive.numerator.witness;
    }
    return v;
}

/// Which eigenvalue comparison failed in a domination check.
enum class MetricBlock { horizontal, vertical_perp, vertical_along };

inline std::string to_string(MetricBlock b) {
    switch (b) {
        case MetricBlock::horizontal: return "horizontal";
        case MetricBlock::vertical_perp: return "vertical-perp";
        default: return "vertical-along";
    }
}

struct DominationResult {
    bool dominates = false;
    std::optional<Rational> witness_t;       ///< when false and a rational witness exists
    std::optional<MetricBlock> failed_block;  ///< when false
    PointwiseSignCheck a_difference;          ///< evidence for the vertical-perp inequality
    PointwiseSignCheck alpha_difference;      ///< evidence for the vertical-along inequality
};

/// Whether the quadratic form of m1 dominates that of m2 at every (p, U).
/// Both forms share the horizontal / span(U) / U-perp eigenspaces, so the
/// pointwise matrix inequality reduces to three univariate conditions:
/// scale1 >= scale2, scale1*a1 >= scale2*a2 and scale1*alpha1 >= scale2*alpha2
/// on [0, inf), the latter two certified through root counting on the
/// difference numerators. Non-strict throughout. Requires both metrics
/// valid.
inline DominationResult dominates(const GNaturalMetric& m1, const GNaturalMetric& m2) {
    if (!validate(m1).valid || !validate(m2).valid)
        throw std::invalid_argument("dominates: metrics must be valid");
    DominationResult result;
    const Rational s1 = m1.scale(), s2 = m2.scale();

    const RationalFunction da = RationalFunction(s1) * m1.a() - RationalFunction(s2) * m2.a();
    const RationalFunction dalpha =
        RationalFunction(s1) * m1.alpha() - RationalFunction(s2) * m2.alpha();
    result.a_difference = certify_nonnegative_from(da.num(), Rational(0));
    result.alpha_difference = certify_nonnegative_from(dalpha.num(), Rational(0));

    if (s1 < s2) {
        result.failed_block = MetricBlock::horizontal;
        result.witness_t = Rational(0);  // scale comparison fails at every t
        return result;
    }
    if (!result.a_difference.holds) {
        result.failed_block = MetricBlock::vertical_perp;
        result.witness_t = result.a_difference.witness;
        return result;
    }
    if (!result.alpha_difference.holds) {
        result.failed_block = MetricBlock::vertical_along;
        result.witness_t = result.alpha_difference.witness;
        return result;
    }
    result.dominates = true;
    return result;
}

}  // namespace tbcurv
