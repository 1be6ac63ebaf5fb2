#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tbcurv/polynomial.hpp"

namespace tbcurv {

/// Closed interval [lo, hi] containing exactly one root of the polynomial it
/// was isolated for. Either lo == hi (the root is the rational point lo) or
/// the squarefree part changes sign between the endpoints.
struct IsolatingInterval {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

namespace detail {

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k). Elements are
/// scaled to primitive integer form (positive factors only, signs kept).
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p.primitive_part());
    if (p.degree() >= 1) {
        chain.push_back(p.derivative().primitive_part());
        while (chain.back().degree() >= 0) {
            Polynomial r = -(chain[chain.size() - 2].divmod(chain.back()).second);
            if (r.is_zero()) break;
            chain.push_back(r.primitive_part());
        }
    }
    return chain;
}

/// Sign variations with zeros dropped. With that convention the difference
/// V(a) - V(b) counts distinct roots in the half-open interval (a, b] even
/// when a or b is itself a root of a squarefree p.
inline int sign_variations_at(const std::vector<Polynomial>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sign(q.evaluate(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

/// Distinct roots of squarefree q in (lo, hi].
inline int sturm_count_open_closed(const std::vector<Polynomial>& chain, const Rational& lo,
                                   const Rational& hi) {
    if (lo >= hi) return 0;
    return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

}  // namespace detail

/// Strict bound B with every real root of p in (-B, B). Cauchy's bound
/// 1 + max |c_i / c_lead|; 0 for constants (which have no roots).
inline Rational cauchy_root_bound(const Polynomial& p) {
    if (p.degree() <= 0) return Rational(0);
    Rational m(0);
    const Rational& lead = p.leading_coefficient();
    for (int k = 0; k < p.degree(); ++k) {
        const Rational r = abs(p.coefficient(static_cast<std::size_t>(k)) / lead);
        if (r > m) m = r;
    }
    return m + 1;
}

/// Number of DISTINCT real roots of p in the closed interval [lo, hi].
/// Multiplicity is deliberately erased: the count runs on the squarefree
/// part p / gcd(p, p').
inline int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (lo > hi) throw std::invalid_argument("root count on an empty interval");
    const Polynomial q = p.squarefree_part();
    if (q.degree() <= 0) return 0;
    const auto chain = detail::sturm_chain(q);
    int count = detail::sturm_count_open_closed(chain, lo, hi);
    if (q.evaluate(lo) == 0) ++count;
    return count;
}

/// Number of DISTINCT real roots of p in [lo, +inf). The half-line reduces
/// to [lo, B] with B a Cauchy bound; beyond B there are no roots and the
/// leading coefficient rules the sign.
inline int count_real_roots_from(const Polynomial& p, const Rational& lo) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    const Rational bound = cauchy_root_bound(p);
    if (bound <= lo) return p.evaluate(lo) == 0 ? 1 : 0;
    return count_real_roots(p, lo, bound);
}

namespace detail {

/// An interior point of (a, b) that is not a root of q: tries deg(q) + 1
/// equally spaced candidates, more than q has roots.
inline Rational nonroot_interior_point(const Polynomial& q, const Rational& a, const Rational& b) {
    const int slots = q.degree() + 2;
    const Rational step = (b - a) / slots;
    for (int k = 1; k < slots; ++k) {
        const Rational x = a + step * k;
        if (q.evaluate(x) != 0) return x;
    }
    assert(false && "pigeonhole violated: no nonroot interior point");
    return (a + b) / 2;
}

/// Recursive Sturm bisection. Invariants: q squarefree, q(a) != 0;
/// midpoints are chosen off the roots, so the only admissible endpoint root
/// is b (emitted as a point).
inline void isolate_in(const std::vector<Polynomial>& chain, const Polynomial& q,
                       const Rational& a, const Rational& b,
                       std::vector<IsolatingInterval>& out) {
    const int count = sturm_count_open_closed(chain, a, b);
    if (count == 0) return;
    if (count == 1) {
        if (q.evaluate(b) == 0) {
            out.push_back({b, b});
        } else {
            assert(sign(q.evaluate(a)) * sign(q.evaluate(b)) < 0);
            out.push_back({a, b});
        }
        return;
    }
    const Rational m = nonroot_interior_point(q, a, b);
    isolate_in(chain, q, a, m, out);
    isolate_in(chain, q, m, b, out);
}

}  // namespace detail

/// Halves an isolating interval of (squarefree) q until its width is at most
/// max_width. Collapses to a point if a bisection midpoint hits the root.
inline void refine_interval(const Polynomial& q, IsolatingInterval& iv, const Rational& max_width) {
    if (iv.is_point()) return;
    const int sign_lo = sign(q.evaluate(iv.lo));
    assert(sign_lo != 0 && sign(q.evaluate(iv.hi)) == -sign_lo);
    while (iv.width() > max_width) {
        const Rational m = iv.midpoint();
        const int sm = sign(q.evaluate(m));
        if (sm == 0) {
            iv = {m, m};
            return;
        }
        if (sm == sign_lo) iv.lo = m;
        else iv.hi = m;
    }
}

/// One bisection step.
inline void bisect_once(const Polynomial& q, IsolatingInterval& iv) {
    if (iv.is_point()) return;
    refine_interval(q, iv, iv.width() * Rational(3, 4));
}

/// Pairwise-disjoint isolating intervals, one per distinct real root of p in
/// [lo, hi], sorted ascending. Intervals are for the squarefree part of p;
/// refine with refine_interval(p.squarefree_part(), ...).
inline std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p, const Rational& lo,
                                                         const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
    if (lo > hi) throw std::invalid_argument("root isolation on an empty interval");
    std::vector<IsolatingInterval> out;
    Polynomial q = p.squarefree_part();
    if (q.degree() <= 0) return out;
    if (q.evaluate(lo) == 0) {
        // Deflate the endpoint root so the recursion keeps q(a) != 0.
        out.push_back({lo, lo});
        q = q.divmod(Polynomial({-lo, Rational(1)})).first;
        if (q.degree() <= 0) return out;
    }
    const auto chain = detail::sturm_chain(q);
    detail::isolate_in(chain, q, lo, hi, out);
    // Adjacent intervals may share a (non-root) endpoint; shrink until all
    // gaps are genuine so the result is pairwise disjoint. q is nonzero at
    // every non-point endpoint produced above, including lo.
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        while (out[k].hi >= out[k + 1].lo) {
            IsolatingInterval& wider = out[k].width() >= out[k + 1].width() ? out[k] : out[k + 1];
            assert(!wider.is_point());
            bisect_once(q, wider);
        }
    }
    return out;
}

/// Same on the half-line [lo, +inf).
inline std::vector<IsolatingInterval> isolate_real_roots_from(const Polynomial& p,
                                                              const Rational& lo) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
    const Rational bound = cauchy_root_bound(p);
    if (bound <= lo) {
        std::vector<IsolatingInterval> out;
        if (p.evaluate(lo) == 0) out.push_back({lo, lo});
        return out;
    }
    return isolate_real_roots(p, lo, bound);
}

/// Result of an exact pointwise sign certification on [lo, +inf). `holds`
/// certifies the inequality everywhere; on failure `witness`, when present,
/// is a rational point violating it. A strict check that fails only through
/// touching roots at irrational points carries no rational witness; the
/// root count is the evidence then.
struct PointwiseSignCheck {
    bool holds = false;
    std::optional<Rational> witness;
    int distinct_roots = 0;
};

namespace detail {

/// Rational points meeting every maximal root-free subinterval of
/// [lo, +inf), plus lo itself.
inline std::vector<Rational> sign_sample_points(const Polynomial& p, const Rational& lo) {
    std::vector<Rational> pts{lo};
    const auto intervals = isolate_real_roots_from(p, lo);
    for (std::size_t k = 0; k + 1 < intervals.size(); ++k)
        pts.push_back((intervals[k].hi + intervals[k + 1].lo) / 2);
    Rational beyond = cauchy_root_bound(p);
    if (!intervals.empty() && intervals.back().hi > beyond) beyond = intervals.back().hi;
    pts.push_back(beyond + 1);
    return pts;
}

}  // namespace detail

/// Certifies q >= 0 on [lo, +inf) by exact sign evaluation on every maximal
/// root-free subinterval. The zero polynomial holds.
inline PointwiseSignCheck certify_nonnegative_from(const Polynomial& q, const Rational& lo) {
    if (q.is_zero()) return {true, std::nullopt, 0};
    PointwiseSignCheck check;
    check.distinct_roots = count_real_roots_from(q, lo);
    check.holds = true;
    for (const auto& x : detail::sign_sample_points(q, lo)) {
        if (q.evaluate(x) < 0) {
            check.holds = false;
            check.witness = x;
            break;
        }
    }
    return check;
}

/// Certifies q > 0 on [lo, +inf): zero roots there and q(lo) > 0.
inline PointwiseSignCheck certify_positive_from(const Polynomial& q, const Rational& lo) {
    PointwiseSignCheck check;
    if (q.is_zero()) {
        check.witness = lo;
        return check;
    }
    check.distinct_roots = count_real_roots_from(q, lo);
    if (check.distinct_roots == 0 && q.evaluate(lo) > 0) {
        check.holds = true;
        return check;
    }
    if (q.evaluate(lo) <= 0) {
        check.witness = lo;
        return check;
    }
    for (const auto& x : detail::sign_sample_points(q, lo)) {
        if (q.evaluate(x) <= 0) {
            check.witness = x;
            return check;
        }
    }
    return check;
}

}  // namespace tbcurv
