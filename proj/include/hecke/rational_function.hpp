// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

/// Polynomial gcd of two Laurent polynomials, taken over Q[q, 1/q]: the
/// result is monic with lowest exponent 0 (monomial factors are units).
inline LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
    auto normalize = [](const LaurentPoly& p) {
        if (p.is_zero()) return p;
        LaurentPoly r = p.shifted(-p.low_exponent());
        return r * Rational(1 / r.coeff(r.high_exponent()));
    };
    a = normalize(a);
    b = normalize(b);
    while (!b.is_zero()) {
        // remainder of a by b, both with nonzero constant term
        LaurentPoly r = a;
        const int db = b.high_exponent();
        const Rational lead = b.coeff(db);
        while (!r.is_zero() && r.high_exponent() >= db) {
            int shift = r.high_exponent() - db;
            r -= b.shifted(shift) * Rational(r.coeff(r.high_exponent()) / lead);
        }
        a = b;
        b = normalize(r);
    }
    return a;
}

/// Quotient of Laurent polynomials.  Kept unreduced; equality is decided by
/// cross-multiplication.  reduced() cancels the gcd on request.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) {} // NOLINT
    RationalFunction(const Rational& c) : num_(c), den_(1) {}            // NOLINT
    RationalFunction(long c) : num_(c), den_(1) {}                      // NOLINT
    RationalFunction(int c) : num_(c), den_(1) {}                       // NOLINT
    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Cancels common factors; the denominator becomes monic with lowest
    /// exponent 0.
    RationalFunction reduced() const {
        if (num_.is_zero()) return {};
        LaurentPoly g = gcd(num_, den_);
        LaurentPoly n = exact_div(num_, g), d = exact_div(den_, g);
        int shift = -d.low_exponent();
        Rational lead = d.coeff(d.high_exponent());
        n = n.shifted(shift) * Rational(1 / lead);
        d = d.shifted(shift) * Rational(1 / lead);
        return {n, d};
    }

    /// The exact Laurent quotient; NotDivisible if the denominator does not cancel.
    LaurentPoly to_laurent() const { return exact_div(num_, den_); }

    Rational eval_at(const Rational& q0) const {
        Rational d = den_.eval_at(q0);
        if (d == 0) throw DivisionByZero("denominator vanishes at q = " + q0.get_str());
        return num_.eval_at(q0) / d;
    }

    RationalFunction substitute_power(int k) const { return {num_.substitute_power(k), den_.substitute_power(k)}; }

    std::string to_string() const {
        if (den_ == LaurentPoly(1)) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

} // namespace hecke
