#pragma once

#include <string>
#include <utility>

#include "tbcurv/errors.hpp"
#include "tbcurv/polynomial.hpp"

namespace tbcurv {

/// Ratio of polynomials in canonical form: numerator and denominator are
/// coprime and the denominator is monic. Canonicalization makes equality a
/// plain field-by-field comparison and is scale-invariant (building from
/// p*r / q*r gives the same object as building from p / q).
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}

    RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}  // NOLINT
    RationalFunction(int constant) : num_(constant), den_(Rational(1)) {}              // NOLINT
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}          // NOLINT

    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
        canonicalize();
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Exact value at t; throws pole_error when the denominator vanishes.
    Rational evaluate(const Rational& t) const {
        const Rational d = den_.evaluate(t);
        if (d == 0) throw pole_error("evaluation at a pole (t = " + to_fraction_string(t) + ")");
        return num_.evaluate(t) / d;
    }

    double evaluate(double t) const { return num_.evaluate(t) / den_.evaluate(t); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::invalid_argument("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Formal derivative (quotient rule), canonical.
    RationalFunction derivative() const {
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        const Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        const Rational lead = den_.leading_coefficient();
        if (lead != 1) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// lim_{t -> +inf} of a rational function, as a finite rational or a signed
/// infinity.
struct LimitAtInfinity {
    enum class Kind { finite, plus_infinity, minus_infinity };
    Kind kind = Kind::finite;
    Rational value;  // meaningful when finite

    bool is_finite() const { return kind == Kind::finite; }

    std::string to_string() const {
        switch (kind) {
            case Kind::plus_infinity: return "+inf";
            case Kind::minus_infinity: return "-inf";
            default: return to_fraction_string(value);
        }
    }
};

inline LimitAtInfinity limit_at_infinity(const RationalFunction& f) {
    if (f.is_zero()) return {LimitAtInfinity::Kind::finite, Rational(0)};
    const int dn = f.num().degree();
    const int dd = f.den().degree();
    if (dn < dd) return {LimitAtInfinity::Kind::finite, Rational(0)};
    if (dn == dd)
        return {LimitAtInfinity::Kind::finite,
                f.num().leading_coefficient() / f.den().leading_coefficient()};
    const int s = sign(f.num().leading_coefficient()) * sign(f.den().leading_coefficient());
    return {s > 0 ? LimitAtInfinity::Kind::plus_infinity : LimitAtInfinity::Kind::minus_infinity,
            Rational(0)};
}

}  // namespace tbcurv
