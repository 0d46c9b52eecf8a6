// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke {

/// Truncated power series in delta, where q = e^delta.  coeffs[k] multiplies
/// delta^k; the series is exact up to and including delta^order.
class DeltaSeries {
public:
    explicit DeltaSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("DeltaSeries: negative order");
    }
    DeltaSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { // NOLINT
        if (coeffs_.empty()) throw std::invalid_argument("DeltaSeries: needs at least delta^0");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend DeltaSeries operator+(const DeltaSeries& a, const DeltaSeries& b) {
        DeltaSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    /// Product truncated at the smaller order.
    friend DeltaSeries operator*(const DeltaSeries& a, const DeltaSeries& b) {
        DeltaSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i)
            for (int j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    friend bool operator==(const DeltaSeries& a, const DeltaSeries& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const {
        std::string out;
        for (int k = 0; k <= order(); ++k) {
            if (k) out += " + ";
            out += "(" + rational_to_text(coeffs_[static_cast<std::size_t>(k)]) + ")";
            if (k == 1) out += "*d";
            if (k > 1) out += "*d^" + std::to_string(k);
        }
        return out;
    }

private:
    std::vector<Rational> coeffs_;
};

/// Taylor coefficients of a(e^delta) about delta = 0:
/// [delta^k] = sum_e c_e e^k / k!.
inline DeltaSeries to_delta_series(const LaurentPoly& a, int order) {
    DeltaSeries s(order);
    Rational factorial = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) factorial *= k;
        Rational acc = 0;
        for (const auto& [e, c] : a.terms()) {
            Rational power = 1;
            for (int t = 0; t < k; ++t) power *= e;
            acc += c * power;
        }
        s[k] = acc / factorial;
    }
    return s;
}

} // namespace hecke
