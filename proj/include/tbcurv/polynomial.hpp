#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tbcurv/rational.hpp"

namespace tbcurv {

/// Dense univariate polynomial in t with exact rational coefficients,
/// stored ascending (coefficients_[k] multiplies t^k). The zero polynomial
/// is the empty coefficient list; otherwise the highest coefficient is
/// nonzero.
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) coefficients_.push_back(constant);
    }

    Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT

    explicit Polynomial(std::vector<Rational> ascending) : coefficients_(std::move(ascending)) {
        trim();
    }

    Polynomial(std::initializer_list<Rational> ascending)
        : coefficients_(ascending) {
        trim();
    }

    /// The monomial t.
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

    /// c * t^k.
    static Polynomial monomial(const Rational& c, std::size_t k) {
        if (c == 0) return {};
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coefficients_.empty(); }
    bool is_constant() const { return coefficients_.size() <= 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

    /// Coefficient of t^k (0 beyond the degree).
    const Rational& coefficient(std::size_t k) const {
        static const Rational zero(0);
        return k < coefficients_.size() ? coefficients_[k] : zero;
    }

    const std::vector<Rational>& coefficients() const { return coefficients_; }

    const Rational& leading_coefficient() const {
        if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
        return coefficients_.back();
    }

    Rational evaluate(const Rational& t) const {
        Rational acc(0);
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    double evaluate(double t) const {
        double acc = 0.0;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
            acc = acc * t + to_double(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (coefficients_.size() <= 1) return {};
        std::vector<Rational> d(coefficients_.size() - 1);
        for (std::size_t k = 1; k < coefficients_.size(); ++k)
            d[k - 1] = coefficients_[k] * Rational(static_cast<int>(k));
        return Polynomial(std::move(d));
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coefficients_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coefficients_.size() < o.coefficients_.size())
            coefficients_.resize(o.coefficients_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coefficients_.size(); ++k)
            coefficients_[k] += o.coefficients_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> prod(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
            for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
                prod[i + j] += a.coefficients_[i] * b.coefficients_[j];
        return Polynomial(std::move(prod));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& s, Polynomial p) {
        if (s == 0) return {};
        for (auto& c : p.coefficients_) c *= s;
        return p;
    }
    friend Polynomial operator*(Polynomial p, const Rational& s) { return s * std::move(p); }

    Polynomial operator/(const Rational& s) const {
        if (s == 0) throw std::invalid_argument("division of polynomial by zero scalar");
        return Rational(1) / s * *this;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result(Rational(1));
        Polynomial base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1u) result *= base;
            if (e > 1) base *= base;
        }
        return result;
    }

    bool operator==(const Polynomial& o) const { return coefficients_ == o.coefficients_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Euclidean division: returns {quotient, remainder} with
    /// *this == q * divisor + r and deg r < deg divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
        Polynomial q, r = *this;
        const int dd = divisor.degree();
        const Rational& lead = divisor.leading_coefficient();
        while (!r.is_zero() && r.degree() >= dd) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
            const Rational factor = r.leading_coefficient() / lead;
            q += monomial(factor, shift);
            r -= monomial(factor, shift) * divisor;
        }
        return {std::move(q), std::move(r)};
    }

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Zero polynomial yields 0.
    Rational content() const {
        if (is_zero()) return Rational(0);
        Integer num_gcd = 0;
        Integer den_lcm = 1;
        for (const auto& c : coefficients_) {
            if (c == 0) continue;
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
        }
        return Rational(num_gcd, den_lcm);
    }

    /// (*this)/content(): integer coprime coefficients, sign preserved.
    Polynomial primitive_part() const {
        if (is_zero()) return {};
        return *this / content();
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this / leading_coefficient();
    }

    /// Monic gcd via the Euclidean algorithm (remainders kept primitive to
    /// limit coefficient growth). gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a.divmod(b).second;
            a = std::move(b);
            b = r.is_zero() ? Polynomial{} : r.primitive_part();
        }
        return a.is_zero() ? a : a.monic();
    }

    /// p / gcd(p, p'): same distinct roots, all simple; leading sign kept.
    Polynomial squarefree_part() const {
        if (is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
        if (degree() == 0) return *this;
        const Polynomial g = gcd(*this, derivative());
        return divmod(g).first;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coefficients_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            const Rational a = abs(c);
            if (k == 0 || a != 1) s += to_fraction_string(a);
            if (k > 0) {
                if (a != 1) s += "*";
                s += "t";
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    }

    std::vector<Rational> coefficients_;
};

}  // namespace tbcurv
