// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <limits>
#include <ostream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

using Rational = mpq_class;
using Integer = mpz_class;

/// Renders a rational as "num/den" (den always present, den > 0).
inline std::string rational_to_fraction_text(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Renders a rational compactly: "3", "-3/2".
inline std::string rational_to_text(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "a", "a/b" or "-a/b"; throws ParseError.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    std::string s(text);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    auto slash = s.find('/');
    auto all_digits = [&](std::size_t b, std::size_t e) {
        if (b >= e) return false;
        for (std::size_t i = b; i < e; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!all_digits(start, s.size())) throw ParseError("bad rational '" + s + "'");
    } else if (!all_digits(start, slash) || !all_digits(slash + 1, s.size())) {
        throw ParseError("bad rational '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

namespace detail {

inline int checked_add(long a, long b) {
    long r = a + b;
    if (r > std::numeric_limits<int>::max() || r < std::numeric_limits<int>::min())
        throw ExponentOverflow("exponent " + std::to_string(r) + " out of range");
    return static_cast<int>(r);
}

inline int checked_mul(long a, long b) {
    long r = a * b;
    if (r > std::numeric_limits<int>::max() || r < std::numeric_limits<int>::min())
        throw ExponentOverflow("exponent " + std::to_string(r) + " out of range");
    return static_cast<int>(r);
}

} // namespace detail

/// Exact Laurent polynomial in q with rational coefficients.
///
/// Stored densely from the lowest to the highest nonzero exponent; both end
/// coefficients are nonzero and the zero polynomial has no coefficients, so
/// the representation is canonical and equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { // NOLINT: constants convert implicitly
        Rational v = c;
        v.canonicalize();
        if (v != 0) coeffs_.push_back(std::move(v));
    }
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {} // NOLINT
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT

    static LaurentPoly monomial(const Rational& c, int exponent) {
        LaurentPoly p(c);
        if (!p.is_zero()) p.low_ = exponent;
        return p;
    }
    /// q^exponent
    static LaurentPoly q(int exponent = 1) { return monomial(1, exponent); }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    static LaurentPoly from_terms(const std::vector<std::pair<int, Rational>>& terms) {
        LaurentPoly r;
        for (const auto& [e, c] : terms) r += monomial(c, e);
        return r;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int low_exponent() const { return low_; }
    int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t term_count() const {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
    }

    Rational coeff(int exponent) const {
        if (is_zero() || exponent < low_ || exponent > high_exponent()) return 0;
        return coeffs_[static_cast<std::size_t>(exponent - low_)];
    }

    /// Nonzero terms in decreasing exponent order.
    std::vector<std::pair<int, Rational>> terms() const {
        std::vector<std::pair<int, Rational>> out;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
        return out;
    }

    bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
    bool is_monomial() const { return coeffs_.size() == 1; }

    Rational coefficient_sum() const {
        Rational s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        int lo = std::min(low_, o.low_);
        int hi = std::max(high_exponent(), o.high_exponent());
        if (lo < low_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
            low_ = lo;
        }
        coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
        trim();
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const Rational& scale) {
        Rational c = scale;
        c.canonicalize();
        if (c == 0) {
            coeffs_.clear();
            low_ = 0;
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        LaurentPoly r;
        r.low_ = detail::checked_add(a.low_, b.low_);
        detail::checked_add(a.high_exponent(), b.high_exponent());
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        mpq_t tmp;
        mpq_init(tmp);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                mpq_mul(tmp, a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
                mpq_add(r.coeffs_[i + j].get_mpq_t(), r.coeffs_[i + j].get_mpq_t(), tmp);
            }
        }
        mpq_clear(tmp);
        r.trim();
        return r;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Multiplies by q^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r = *this;
        if (!r.is_zero()) {
            r.low_ = detail::checked_add(r.low_, k);
            detail::checked_add(r.high_exponent(), 0);
        }
        return r;
    }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly result(1), base = *this;
        while (k) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k) base *= base;
        }
        return result;
    }

    /// Substitutes q -> q^k (k != 0).
    LaurentPoly substitute_power(int k) const {
        std::vector<std::pair<int, Rational>> t;
        for (auto [e, c] : terms()) t.emplace_back(detail::checked_mul(e, k), std::move(c));
        return from_terms(t);
    }

    /// Exact value at q = q0.  Throws ZeroBase for q0 = 0.
    Rational eval_at(const Rational& q0) const {
        if (q0 == 0) throw ZeroBase("cannot evaluate a Laurent polynomial at q = 0");
        Rational acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q0 + coeffs_[i];
        Rational scale = 1;
        Rational base = low_ >= 0 ? q0 : Rational(1 / q0);
        for (long e = low_ >= 0 ? low_ : -static_cast<long>(low_); e > 0; --e) scale *= base;
        return acc * scale;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(low_);
        for (const auto& c : coeffs_) {
            h ^= std::hash<std::string>{}(c.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    /// Canonical text: decreasing exponents, explicit signs, `q^-1` exponents.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms()) {
            Rational mag = abs(c);
            if (c < 0)
                out += "-";
            else if (!first)
                out += "+";
            first = false;
            if (e == 0) {
                out += rational_to_text(mag);
                continue;
            }
            if (mag != 1) out += rational_to_text(mag) + "*";
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    /// Parses the canonical grammar (terms `[+-][c[*]]q[^e]` or `[+-]c`);
    /// repeated exponents are summed.  Whitespace is ignored.
    static LaurentPoly parse(std::string_view text);

    /// Polynomial long division of the q^0-normalized parts.  Used by
    /// exact_div and gcd.
    friend std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b);

private:
    void trim() {
        std::size_t front = 0;
        while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
        if (front == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        std::size_t back = coeffs_.size();
        while (coeffs_[back - 1] == 0) --back;
        coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(back), coeffs_.end());
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(front));
        low_ += static_cast<int>(front);
    }

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// a / b when b divides a in Q[q, 1/q], nullopt otherwise.
inline std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    // Units of Q[q, 1/q] are the monomials, so divisibility reduces to the
    // polynomial parts with nonzero constant term.
    const auto& num = a.coeffs_;
    const auto& den = b.coeffs_;
    if (num.size() < den.size()) return std::nullopt;
    std::vector<Rational> rem = num;
    std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
    const Rational lead = den.back();
    mpq_t tmp;
    mpq_init(tmp);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational& top = rem[k + den.size() - 1];
        if (top == 0) continue;
        quot[k] = top / lead;
        for (std::size_t j = 0; j < den.size(); ++j) {
            if (den[j] == 0) continue;
            mpq_mul(tmp, quot[k].get_mpq_t(), den[j].get_mpq_t());
            mpq_sub(rem[k + j].get_mpq_t(), rem[k + j].get_mpq_t(), tmp);
        }
    }
    mpq_clear(tmp);
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    LaurentPoly out;
    out.coeffs_ = std::move(quot);
    out.low_ = detail::checked_add(a.low_, -static_cast<long>(b.low_));
    out.trim();
    return out;
}

inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (auto r = try_exact_div(a, b)) return std::move(*r);
    throw NotDivisible(a.to_string() + " / " + b.to_string());
}

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial");
    std::size_t i = 0;
    LaurentPoly result;
    auto read_uint = [&](std::string& out) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected sign at offset " + std::to_string(i) + " in '" + s + "'");
        }
        first = false;
        Rational c = 1;
        bool have_coeff = false;
        std::string digits;
        read_uint(digits);
        if (!digits.empty()) {
            have_coeff = true;
            if (i < s.size() && s[i] == '/') {
                ++i;
                std::string den;
                read_uint(den);
                if (den.empty()) throw ParseError("dangling '/' in '" + s + "'");
                digits += "/" + den;
            }
            c = parse_rational(digits);
            if (i < s.size() && s[i] == '*') ++i;
        }
        int exponent = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) e += s[i++];
                read_uint(e);
                if (e.empty() || e == "-" || e == "+") throw ParseError("bad exponent in '" + s + "'");
                long v = std::stol(e);
                if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
                    throw ExponentOverflow("exponent " + e);
                exponent = static_cast<int>(v);
            }
        } else if (!have_coeff) {
            throw ParseError("expected term at offset " + std::to_string(i) + " in '" + s + "'");
        }
        result += monomial(sign * c, exponent);
    }
    return result;
}

/// [m]_q = (q^m - 1)/(q - 1), for any integer m.
inline LaurentPoly q_bracket(int m) {
    LaurentPoly r;
    if (m > 0)
        for (int t = 0; t < m; ++t) r += LaurentPoly::q(t);
    else
        for (int t = m; t < 0; ++t) r -= LaurentPoly::q(t);
    return r;
}

/// q-content of a box with content c: q [c]_q.
inline LaurentPoly q_content(int content) { return q_bracket(content).shifted(1); }

/// f_p = (q^p - (-1)^p)/(q + 1), the coefficient in g^p = f_p g + q f_{p-1}.
inline LaurentPoly f_coeff(int p) {
    if (p < 0) throw std::invalid_argument("f_coeff: p must be nonnegative");
    // f_p = sum_{t=0}^{p-1} (-1)^{p-1-t} q^t
    LaurentPoly r;
    for (int t = 0; t < p; ++t) r += LaurentPoly::monomial(((p - 1 - t) % 2 == 0) ? 1 : -1, t);
    return r;
}

/// (f_p, q f_{p-1}): g^p = f_p g + q f_{p-1} for any g with g^2 = (q-1)g + q.
inline std::pair<LaurentPoly, LaurentPoly> power_expand(int p) {
    if (p < 1) throw std::invalid_argument("power_expand: p must be positive");
    return {f_coeff(p), f_coeff(p - 1).shifted(1)};
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace hecke

template <>
struct std::hash<hecke::LaurentPoly> {
    std::size_t operator()(const hecke::LaurentPoly& p) const { return p.hash(); }
};
