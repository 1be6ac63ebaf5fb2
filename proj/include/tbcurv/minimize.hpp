#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "tbcurv/rational_function.hpp"
#include "tbcurv/roots.hpp"

namespace tbcurv {

/// Closed rational interval for exact interval arithmetic (endpoints are
/// rationals, so every bound below is exact, never rounded).
struct RatInterval {
    Rational lo;
    Rational hi;

    static RatInterval point(const Rational& x) { return {x, x}; }
    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return {std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})};
    }
    /// Requires 0 not in b.
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
        const RatInterval inv{Rational(1) / b.hi, Rational(1) / b.lo};
        return a * inv;
    }
};

/// Horner evaluation over an interval; a valid enclosure of the range of p
/// on [x.lo, x.hi] (an overestimate that converges as the width shrinks).
inline RatInterval evaluate_interval(const Polynomial& p, const RatInterval& x) {
    RatInterval acc = RatInterval::point(Rational(0));
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
        acc = acc * x + RatInterval::point(*it);
    return acc;
}

/// Where the infimum of f over [0, +inf) lives.
enum class InfimumKind {
    attained_at_point,       ///< f attains the infimum at a point of [0, inf)
    approached_at_infinity,  ///< infimum is the finite limit at +inf, not attained earlier
    attained_everywhere,     ///< f is constant
    unbounded_below,         ///< limit at +inf is -inf
};

/// Certified enclosure of inf_{t >= 0} f(t).
struct HalfLineMinimum {
    InfimumKind kind = InfimumKind::attained_at_point;
    Rational lower;  ///< enclosure endpoints; meaningless when unbounded_below
    Rational upper;
    std::optional<IsolatingInterval> location;  ///< minimizer, when attained at a point

    bool bounded() const { return kind != InfimumKind::unbounded_below; }
};

namespace detail {

/// A candidate value of f: f at 0 or at one critical point, as an exact
/// value or a shrinking enclosure tied to the root's isolating interval.
struct MinimizationCandidate {
    RatInterval value{};
    IsolatingInterval location;
    bool exact = false;
    bool valid = false;  // value is a sound enclosure (den bounded away from 0)

    void recompute(const RationalFunction& f) {
        if (location.is_point()) {
            value = RatInterval::point(f.evaluate(location.lo));
            exact = valid = true;
            return;
        }
        const RatInterval x{location.lo, location.hi};
        const RatInterval den = evaluate_interval(f.den(), x);
        if (den.contains_zero()) {
            // Overestimation artifact: den has no roots on the half-line, so
            // further bisection will bound it away from zero.
            valid = false;
            return;
        }
        value = evaluate_interval(f.num(), x) / den;
        valid = true;
    }

    void refine(const RationalFunction& f, const Polynomial& critical_sf) {
        if (exact) return;
        bisect_once(critical_sf, location);
        recompute(f);
    }

    bool tight(const Rational& precision) const {
        return valid && (exact || value.width() <= precision);
    }
};

}  // namespace detail

/// Certified enclosure of the infimum of f over [0, +inf), with
/// upper - lower <= precision. The infimum is the minimum over f(0), f at
/// the critical points (roots of the derivative numerator in (0, inf)) and
/// the limit at +inf; critical values are enclosed by rational interval
/// arithmetic and tightened by bisecting the isolating intervals.
///
/// Precondition: den(f) has no roots on [0, +inf) (checked; pole_error
/// otherwise). A constant f reports attained_everywhere; limit -inf reports
/// unbounded_below. A critical value exactly equal to the finite limit is
/// reported as attained (enclosures that keep straddling the limit below
/// width precision/2^20 are treated as exact ties).
inline HalfLineMinimum minimize_on_halfline(const RationalFunction& f, const Rational& precision) {
    if (precision <= 0) throw std::invalid_argument("minimize: precision must be positive");
    if (count_real_roots_from(f.den(), Rational(0)) != 0)
        throw pole_error("minimize: denominator has roots on [0, inf)");

    const RationalFunction df = f.derivative();
    if (df.is_zero()) {
        const Rational c = f.evaluate(Rational(0));
        return {InfimumKind::attained_everywhere, c, c, std::nullopt};
    }

    const LimitAtInfinity limit = limit_at_infinity(f);
    if (limit.kind == LimitAtInfinity::Kind::minus_infinity)
        return {InfimumKind::unbounded_below, Rational(0), Rational(0), std::nullopt};

    const Polynomial critical_sf = df.num().squarefree_part();

    std::vector<detail::MinimizationCandidate> candidates;
    candidates.push_back({RatInterval::point(f.evaluate(Rational(0))),
                          IsolatingInterval{Rational(0), Rational(0)}, true, true});
    for (const auto& iv : isolate_real_roots_from(df.num(), Rational(0))) {
        detail::MinimizationCandidate c;
        c.location = iv;
        c.recompute(f);
        candidates.push_back(std::move(c));
    }

    for (auto& c : candidates)
        while (!c.tight(precision)) c.refine(f, critical_sf);

    const auto enclosure_min = [&] {
        RatInterval m = candidates.front().value;
        for (const auto& c : candidates) {
            m.lo = std::min(m.lo, c.value.lo);
            m.hi = std::min(m.hi, c.value.hi);
        }
        return m;
    };

    HalfLineMinimum result;
    if (limit.is_finite()) {
        const Rational cap = precision / 1048576;
        bool attained = false;
        for (auto& c : candidates) {
            while (!c.exact &&
                   (!c.valid || (c.value.lo <= limit.value && c.value.hi > limit.value &&
                                 c.value.width() > cap)))
                c.refine(f, critical_sf);
            if (c.value.lo <= limit.value) attained = true;
        }
        RatInterval m = enclosure_min();
        if (attained) {
            m.lo = std::min(m.lo, limit.value);
            m.hi = std::min(m.hi, limit.value);
            result.kind = InfimumKind::attained_at_point;
        } else {
            m = RatInterval::point(limit.value);
            result.kind = InfimumKind::approached_at_infinity;
        }
        result.lower = m.lo;
        result.upper = m.hi;
    } else {
        const RatInterval m = enclosure_min();
        result.kind = InfimumKind::attained_at_point;
        result.lower = m.lo;
        result.upper = m.hi;
    }

    if (result.kind == InfimumKind::attained_at_point) {
        const detail::MinimizationCandidate* best = &candidates.front();
        for (const auto& c : candidates)
            if (c.value.hi < best->value.hi) best = &c;
        result.location = best->location;
    }
    return result;
}

}  // namespace tbcurv
