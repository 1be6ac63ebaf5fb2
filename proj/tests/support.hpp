#pragma once

// Shared fixtures for the test suites: the exact reference profile
// constants, independent brute-force oracles and seeded random generators.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tbcurv/curvature.hpp"
#include "tbcurv/metrics.hpp"
#include "tbcurv/parse.hpp"

namespace testsupport {

using namespace tbcurv;

// --- Exact reference constants for the two-parameter family over the
// --- hyperbolic plane (a = 1/100, b = 1 + t, n = 2, C = -1).

/// alpha(t) = 1/100 + 2t(1+t).
inline Polynomial reference_alpha() {
    return Polynomial({Rational(1, 100), Rational(2), Rational(2)});
}

/// Quintic numerator 7.88 t^5 + 7.76 t^4 - 8.0412 t^3 - 8.0012 t^2
/// + 3.920197 t + 1.9998 with exact rational coefficients.
inline Polynomial reference_quintic() {
    return Polynomial({Rational(9999, 5000), Rational(3920197, 1000000), Rational(-20003, 2500),
                       Rational(-20103, 2500), Rational(194, 25), Rational(197, 25)});
}

/// The reference profile quintic / alpha^2 as a canonical rational function.
inline RationalFunction reference_profile() {
    const Polynomial d = reference_alpha();
    return {reference_quintic(), d * d};
}

// --- Independent numeric references for the finite-difference oracle,
// --- frozen from an exact symbolic tensor-calculus computation (full
// --- coordinate Christoffel/Riemann pipeline, rational arithmetic). These
// --- are ground truth for the assembled metrics, not the closed-form
// --- pipeline output.

/// True scalar curvature of the (1/100, 1+t) metric over (n=2, C=-1):
/// -2 - t/100 + (2+4t)/(1/100 + 2t(1+t))^2.
inline double true_reference_sc(double t) {
    const double d = 0.01 + 2.0 * t * (1.0 + t);
    return -2.0 - t / 100.0 + (2.0 + 4.0 * t) / (d * d);
}

/// True scalar curvature of the Cheeger-Gromoll metric over (n=2, C=1):
/// (6t^2 + 7t + 8) / (1 + 2t)^2.
inline double true_cheeger_gromoll_sc(double t) {
    const double s = 1.0 + 2.0 * t;
    return (6.0 * t * t + 7.0 * t + 8.0) / (s * s);
}

// --- Independent oracles used by the property suites.

/// Brute-force distinct-root count on [lo, hi]: sign changes of the
/// squarefree part sampled at `points` uniformly spaced rational points
/// (plus exact zero hits). Integer Horner on the cleared polynomial keeps
/// the 1e5-point scan fast: sign q(N/D) = sign sum_i a_i N^i D^(deg-i).
inline int brute_force_root_count(const Polynomial& p, const Rational& lo, const Rational& hi,
                                  int points) {
    const Polynomial q = p.squarefree_part().primitive_part();
    std::vector<Integer> coeff;
    for (const auto& c : q.coefficients()) coeff.push_back(numerator(c));
    const int deg = q.degree();

    const auto sign_at = [&](const Rational& x) {
        const Integer n = numerator(x), d = denominator(x);
        Integer acc = coeff[static_cast<std::size_t>(deg)];
        Integer dpow = 1;
        for (int i = deg - 1; i >= 0; --i) {
            acc *= n;
            dpow *= d;
            acc += coeff[static_cast<std::size_t>(i)] * dpow;
        }
        return acc.sign();
    };

    int count = 0;
    int last = 0;
    for (int k = 0; k <= points; ++k) {
        const Rational x = lo + (hi - lo) * Rational(k, points);
        const int s = sign_at(x);
        if (s == 0) {
            ++count;
            last = 0;
            continue;
        }
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

/// Golden-section minimizer over [lo, hi] after a dense bracketing scan;
/// the float-side reference for certified enclosures.
inline double golden_section_minimum(const std::function<double(double)>& f, double lo, double hi) {
    double best_t = lo;
    double best = f(lo);
    const int scan = 5000;
    for (int k = 1; k <= scan; ++k) {
        const double t = lo + (hi - lo) * k / scan;
        const double v = f(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    double a = std::max(lo, best_t - 2.0 * (hi - lo) / scan);
    double b = std::min(hi, best_t + 2.0 * (hi - lo) / scan);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    while (b - a > 1e-12) {
        if (f(c) < f(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    return f((a + b) / 2);
}

// --- Seeded random generators.

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(int num_lo, int num_hi, int den_hi) {
        return Rational(uniform_int(num_lo, num_hi), uniform_int(1, den_hi));
    }

    /// Random polynomial of degree <= max_degree with small rational
    /// coefficients (possibly zero).
    Polynomial polynomial(int max_degree, int num_range = 4, int den_range = 3) {
        std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
        for (auto& x : c) x = rational(-num_range, num_range, den_range);
        return Polynomial(std::move(c));
    }

    Polynomial nonzero_polynomial(int max_degree) {
        while (true) {
            Polynomial p = polynomial(max_degree);
            if (!p.is_zero()) return p;
        }
    }

    /// Monic product of distinct linear factors with roots on a coarse grid
    /// inside (lo, hi): root separation stays well above fine scan steps.
    Polynomial separated_root_polynomial(const Rational& lo, const Rational& hi, int max_roots) {
        const int slots = 16;
        std::vector<int> picks;
        const int count = uniform_int(0, max_roots);
        while (static_cast<int>(picks.size()) < count) {
            const int s = uniform_int(1, slots - 1);
            bool dup = false;
            for (int other : picks) dup |= other == s;
            if (!dup) picks.push_back(s);
        }
        Polynomial p(Rational(1));
        for (int s : picks) {
            const Rational root = lo + (hi - lo) * Rational(s, slots);
            p *= Polynomial({-root, Rational(1)});
        }
        return p;
    }

    /// Random valid metric with polynomial a, b of degree <= 2 (rejection
    /// sampled through validate).
    GNaturalMetric valid_metric(int max_degree = 2) {
        while (true) {
            Polynomial a = polynomial(max_degree, 3, 2);
            Polynomial b = polynomial(max_degree, 3, 2);
            const GNaturalMetric m{RationalFunction(a), RationalFunction(b)};
            if (validate(m).valid) return m;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testsupport
