// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/characters.hpp"
#include "hecke/diagrams.hpp"
#include "hecke/laurent.hpp"
#include "hecke/rational_function.hpp"
#include "hecke/word.hpp"

namespace hecke {

/// Square matrix over Q(q) whose entries share one denominator of the form
/// prod_e [e]_q^{k_e}.  Every seminormal-form entry has such a denominator,
/// so products and sums stay Laurent in the numerator and only the small
/// exponent map grows.
class FractionMatrix {
public:
    FractionMatrix() = default;
    explicit FractionMatrix(std::size_t dim) : dim_(dim), num_(dim * dim) {}

    static FractionMatrix identity(std::size_t dim) { return scalar(dim, LaurentPoly(1)); }
    static FractionMatrix scalar(std::size_t dim, const LaurentPoly& c) {
        FractionMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c;
        return m;
    }

    /// Builds a matrix from numerators over prod_e [e]^{exponents[e]}.
    static FractionMatrix from_numerators(std::size_t dim, std::vector<LaurentPoly> num, std::map<int, int> exponents) {
        FractionMatrix m(dim);
        m.num_ = std::move(num);
        m.den_ = std::move(exponents);
        m.normalize();
        return m;
    }

    std::size_t dim() const { return dim_; }
    const LaurentPoly& numerator(std::size_t i, std::size_t j) const { return num_[i * dim_ + j]; }
    const std::map<int, int>& denominator_exponents() const { return den_; }

    LaurentPoly denominator() const {
        LaurentPoly d(1);
        for (const auto& [e, k] : den_) d *= q_bracket(e).pow(static_cast<unsigned>(k));
        return d;
    }

    RationalFunction entry(std::size_t i, std::size_t j) const { return RationalFunction(numerator(i, j), denominator()); }

    /// Overwrites one numerator (fault injection in tests).
    void set_numerator(std::size_t i, std::size_t j, LaurentPoly v) { at(i, j) = std::move(v); }

    friend FractionMatrix operator*(const FractionMatrix& a, const FractionMatrix& b) {
        a.check_same_dim(b);
        FractionMatrix out(a.dim_);
        const std::size_t n = a.dim_;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const LaurentPoly& x = a.numerator(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const LaurentPoly& y = b.numerator(k, j);
                    if (!y.is_zero()) out.at(i, j) += x * y;
                }
            }
        out.den_ = a.den_;
        for (const auto& [e, k] : b.den_) out.den_[e] += k;
        out.normalize();
        return out;
    }

    friend FractionMatrix operator+(const FractionMatrix& a, const FractionMatrix& b) {
        a.check_same_dim(b);
        auto [x, y] = aligned(a, b);
        for (std::size_t i = 0; i < x.num_.size(); ++i) x.num_[i] += y.num_[i];
        x.normalize();
        return x;
    }
    friend FractionMatrix operator-(const FractionMatrix& a, const FractionMatrix& b) {
        return a + b.scaled(LaurentPoly(-1));
    }

    FractionMatrix scaled(const LaurentPoly& c) const {
        FractionMatrix out = *this;
        for (auto& v : out.num_) v *= c;
        out.normalize();
        return out;
    }

    friend bool operator==(const FractionMatrix& a, const FractionMatrix& b) {
        if (a.dim_ != b.dim_) return false;
        auto [x, y] = aligned(a, b);
        return x.num_ == y.num_;
    }

    bool is_zero() const {
        for (const auto& v : num_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (i != j && !numerator(i, j).is_zero()) return false;
        return true;
    }

    /// Trace as a Laurent polynomial; throws ResidualDenominator if the
    /// denominator does not cancel.
    LaurentPoly trace() const {
        LaurentPoly t;
        for (std::size_t i = 0; i < dim_; ++i) t += numerator(i, i);
        if (auto r = try_exact_div(t, denominator())) return std::move(*r);
        throw ResidualDenominator("trace " + RationalFunction(t, denominator()).reduced().to_string());
    }

    /// Entry-wise value at q = q0.
    std::vector<std::vector<Rational>> eval_at(const Rational& q0) const {
        const Rational d = denominator().eval_at(q0);
        if (d == 0) throw DivisionByZero("matrix denominator vanishes at q = " + rational_to_text(q0));
        std::vector<std::vector<Rational>> out(dim_, std::vector<Rational>(dim_));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) out[i][j] = numerator(i, j).eval_at(q0) / d;
        return out;
    }

    /// Block-diagonal sum.
    friend FractionMatrix direct_sum(const FractionMatrix& a, const FractionMatrix& b) {
        auto [x, y] = aligned(a, b);
        FractionMatrix out(a.dim_ + b.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j < a.dim_; ++j) out.at(i, j) = x.numerator(i, j);
        for (std::size_t i = 0; i < b.dim_; ++i)
            for (std::size_t j = 0; j < b.dim_; ++j) out.at(a.dim_ + i, a.dim_ + j) = y.numerator(i, j);
        out.den_ = x.den_;
        out.normalize();
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < dim_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < dim_; ++j) s += (j ? ", " : "") + entry(i, j).reduced().to_string();
            s += "]\n";
        }
        return s;
    }

private:
    LaurentPoly& at(std::size_t i, std::size_t j) { return num_[i * dim_ + j]; }

    void check_same_dim(const FractionMatrix& o) const {
        if (dim_ != o.dim_) throw SizeMismatch("matrix dimensions differ");
    }

    /// Copies of a and b over a common denominator.
    static std::pair<FractionMatrix, FractionMatrix> aligned(const FractionMatrix& a, const FractionMatrix& b) {
        std::map<int, int> target = a.den_;
        for (const auto& [e, k] : b.den_) target[e] = std::max(target[e], k);
        return {a.raised_to(target), b.raised_to(target)};
    }

    FractionMatrix raised_to(const std::map<int, int>& target) const {
        FractionMatrix out = *this;
        LaurentPoly factor(1);
        for (const auto& [e, k] : target) {
            auto it = den_.find(e);
            const int have = it == den_.end() ? 0 : it->second;
            if (k > have) factor *= q_bracket(e).pow(static_cast<unsigned>(k - have));
        }
        if (factor != LaurentPoly(1))
            for (auto& v : out.num_) v *= factor;
        out.den_ = target;
        return out;
    }

    void normalize() {
        for (auto it = den_.begin(); it != den_.end();) {
            const LaurentPoly b = q_bracket(it->first);
            while (it->second > 0) {
                std::vector<LaurentPoly> divided;
                divided.reserve(num_.size());
                bool ok = true;
                for (const auto& v : num_) {
                    auto r = try_exact_div(v, b);
                    if (!r) {
                        ok = false;
                        break;
                    }
                    divided.push_back(std::move(*r));
                }
                if (!ok) break;
                num_ = std::move(divided);
                --it->second;
            }
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
    }

    std::size_t dim_ = 0;
    std::vector<LaurentPoly> num_;
    std::map<int, int> den_;
};

/// Generator matrices of an irrep of H_n(q) in the seminormal chain basis.
struct IrrepMatrices {
    Partition shape;
    int dim = 0;
    std::vector<DiagramChain> chains;
    std::vector<FractionMatrix> generators; ///< generators[i - 1] is g_i

    int n() const { return shape.size(); }
    const FractionMatrix& generator(int i) const { return generators.at(static_cast<std::size_t>(i - 1)); }
};

/// Seminormal form.  With d the content of the box added at step p+1 minus
/// that at step p, g_p acts on the chain T as
///   q on T                                         if d = 1 (same row)
///   -1 on T                                        if d = -1 (same column)
///   a_d T + b T'                                   otherwise,
/// T' being T with steps p, p+1 exchanged and a_d = (q-1) q^d / (q^d - 1).
/// The off-diagonal pair satisfies b_T b_T' = a_d a_{-d} + q
/// = q [|d|+1][|d|-1] / [|d|]^2; the factor 1 sits on the chain whose step
/// p+1 has the larger content.
inline IrrepMatrices build_irrep(const Partition& g) {
    IrrepMatrices m;
    m.shape = g;
    m.chains = chains_of(g);
    m.dim = static_cast<int>(m.chains.size());
    const int n = g.size();
    const std::size_t dim = m.chains.size();

    std::map<std::vector<Box>, std::size_t> index;
    for (std::size_t t = 0; t < dim; ++t) index.emplace(m.chains[t].added_boxes, t);

    // Common denominator prod_{e=2}^{n-1} [e]^2; num(e) = denominator / [e]^2, etc.
    std::map<int, int> exps;
    LaurentPoly common(1);
    for (int e = 2; e <= n - 1; ++e) {
        exps[e] = 2;
        common *= q_bracket(e).pow(2);
    }
    auto over_common = [&](const LaurentPoly& num, int e, int power) {
        // num / [e]^power expressed over `common`
        return exact_div(common, q_bracket(e).pow(static_cast<unsigned>(power))) * num;
    };

    for (int p = 1; p <= n - 1; ++p) {
        std::vector<LaurentPoly> num(dim * dim);
        for (std::size_t t = 0; t < dim; ++t) {
            const DiagramChain& c = m.chains[t];
            const int d = c.content_at(p + 1) - c.content_at(p);
            if (d == 1 || d == -1) {
                num[t * dim + t] = common * LaurentPoly(d == 1 ? LaurentPoly::q() : LaurentPoly(-1));
                continue;
            }
            const int e = d > 0 ? d : -d;
            if (e < 2 || e > n - 1) throw ConstructionFailed("axial distance " + std::to_string(d) + " in " + g.to_string());
            // diagonal: q^d / [d] for d > 0, -1 / [-d] for d < 0
            num[t * dim + t] = over_common(d > 0 ? LaurentPoly::q(d) : LaurentPoly(-1), e, 1);
            std::vector<Box> swapped = c.added_boxes;
            std::swap(swapped[static_cast<std::size_t>(p - 1)], swapped[static_cast<std::size_t>(p)]);
            auto it = index.find(swapped);
            if (it == index.end()) throw ConstructionFailed("exchanged chain missing in " + g.to_string());
            const std::size_t u = it->second;
            // g_p e_t = a e_t + b e_u: column t, row u
            num[u * dim + t] = d > 0 ? common
                                     : over_common(q_bracket(e + 1) * q_bracket(e - 1) * LaurentPoly::q(), e, 2);
        }
        m.generators.push_back(FractionMatrix::from_numerators(dim, std::move(num), exps));
    }
    return m;
}

/// L_p by L_2 = g_1, L_{p+1} = q^{-1} g_p L_p g_p + g_p.
inline FractionMatrix murphy_matrix(const IrrepMatrices& m, int p) {
    if (p < 2 || p > m.n())
        throw IndexOutOfRange("L_" + std::to_string(p) + " undefined for n = " + std::to_string(m.n()));
    FractionMatrix l = m.generator(1);
    for (int k = 2; k < p; ++k) {
        const FractionMatrix& gk = m.generator(k);
        l = (gk * l * gk).scaled(LaurentPoly::q(-1)) + gk;
    }
    return l;
}

/// Hook g_i g_{i+1} ... g_{j-1} ... g_{i+1} g_i.
inline FractionMatrix hook_matrix(const IrrepMatrices& m, int i, int top) {
    FractionMatrix h = m.generator(top);
    for (int k = top - 1; k >= i; --k) h = m.generator(k) * h * m.generator(k);
    return h;
}

/// C_n = sum_{i<j} q^{-(j-i-1)} g_i ... g_{j-1} ... g_i.
inline FractionMatrix fundamental_invariant_matrix(const IrrepMatrices& m) {
    const std::size_t dim = static_cast<std::size_t>(m.dim);
    FractionMatrix c(dim);
    for (int top = 1; top <= m.n() - 1; ++top)
        for (int i = top; i >= 1; --i) c = c + hook_matrix(m, i, top).scaled(LaurentPoly::q(i - top));
    return c;
}

inline FractionMatrix word_matrix(const IrrepMatrices& m, const GWord& w) {
    FractionMatrix out = FractionMatrix::identity(static_cast<std::size_t>(m.dim));
    for (int a : w.letters) {
        if (a < 1 || a > m.n() - 1)
            throw IndexOutOfRange("g_" + std::to_string(a) + " not in H_" + std::to_string(m.n()));
        out = out * m.generator(a);
    }
    return out;
}

inline LaurentPoly word_trace(const IrrepMatrices& m, const GWord& w) { return word_matrix(m, w).trace(); }

struct CheckResult {
    std::string identity;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    void add(std::string identity, bool passed, std::string detail = {}) {
        checks.push_back({std::move(identity), passed, std::move(detail)});
    }
    void append(const VerificationReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

/// Quadratic, braid and commutation relations; Murphy matrices diagonal
/// with q-content entries; C_n equal to Lambda times the identity.
inline VerificationReport verify_relations(const IrrepMatrices& m) {
    VerificationReport r;
    const int n = m.n();
    const std::size_t dim = static_cast<std::size_t>(m.dim);
    const std::string tag = " in " + m.shape.to_string();
    const FractionMatrix id = FractionMatrix::identity(dim);
    const LaurentPoly q = LaurentPoly::q();
    for (int i = 1; i <= n - 1; ++i) {
        const FractionMatrix& g = m.generator(i);
        r.add("g" + std::to_string(i) + "^2 = (q-1)g" + std::to_string(i) + " + q" + tag,
              g * g == g.scaled(q - LaurentPoly(1)) + id.scaled(q));
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
        const FractionMatrix& a = m.generator(i);
        const FractionMatrix& b = m.generator(i + 1);
        const std::string si = std::to_string(i), sj = std::to_string(i + 1);
        r.add("g" + si + " g" + sj + " g" + si + " = g" + sj + " g" + si + " g" + sj + tag, a * b * a == b * a * b);
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            r.add("g" + std::to_string(i) + " g" + std::to_string(j) + " = g" + std::to_string(j) + " g" +
                      std::to_string(i) + tag,
                  m.generator(i) * m.generator(j) == m.generator(j) * m.generator(i));
    for (int p = 2; p <= n; ++p) {
        FractionMatrix l = murphy_matrix(m, p);
        std::vector<LaurentPoly> expected;
        for (const auto& c : m.chains) expected.push_back(q_content_added(c, p));
        bool ok = l.is_diagonal();
        std::string detail;
        for (std::size_t t = 0; ok && t < dim; ++t) {
            if (!(l.entry(t, t) == RationalFunction(expected[t]))) {
                ok = false;
                detail = "chain " + std::to_string(t) + ": " + l.entry(t, t).reduced().to_string() + " != " +
                         expected[t].to_string();
            }
        }
        r.add("L" + std::to_string(p) + " diagonal with q-contents" + tag, ok, detail);
    }
    const LaurentPoly lambda = fundamental_eigenvalue(m.shape);
    r.add("C" + std::to_string(n) + " = (" + lambda.to_string() + ") I" + tag,
          fundamental_invariant_matrix(m) == FractionMatrix::scalar(dim, lambda));
    return r;
}

/// Direct sum of the irreps a and b of the same H_n: P_g(C_n) must be the
/// identity on the g block and zero elsewhere, and the projections of all
/// partitions of n must sum to the identity.
inline VerificationReport verify_projection(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw SizeMismatch(a.to_string() + " and " + b.to_string() + " differ in size");
    const int n = a.size();
    VerificationReport r;
    IrrepMatrices ma = build_irrep(a), mb = build_irrep(b);
    IrrepMatrices sum;
    sum.shape = a;
    sum.dim = ma.dim + mb.dim;
    for (int i = 1; i <= n - 1; ++i) sum.generators.push_back(direct_sum(ma.generator(i), mb.generator(i)));
    const std::size_t dim = static_cast<std::size_t>(sum.dim);
    const FractionMatrix c = fundamental_invariant_matrix(sum);

    std::vector<FractionMatrix> powers{FractionMatrix::identity(dim)};
    auto projection = [&](const Partition& g) {
        std::vector<RationalFunction> coeffs = projection_coefficients(n, g);
        while (powers.size() < coeffs.size()) powers.push_back(powers.back() * c);
        // coefficients share one denominator
        FractionMatrix acc(dim);
        for (std::size_t k = 0; k < coeffs.size(); ++k) acc = acc + powers[k].scaled(coeffs[k].numerator());
        return std::make_pair(acc, coeffs.empty() ? LaurentPoly(1) : coeffs[0].denominator());
    };
    auto block_scalar = [&](std::size_t from, std::size_t len, std::size_t total, const LaurentPoly& v) {
        std::vector<LaurentPoly> num(total * total);
        for (std::size_t i = from; i < from + len; ++i) num[i * total + i] = v;
        return FractionMatrix::from_numerators(total, std::move(num), {});
    };
    const std::size_t da = static_cast<std::size_t>(ma.dim), db = static_cast<std::size_t>(mb.dim);
    const std::string pair = " on " + a.to_string() + " + " + b.to_string();
    FractionMatrix total_scaled(dim);
    LaurentPoly total_den(1);
    for (const auto& g : partitions_of(n)) {
        auto [pg, den] = projection(g);
        FractionMatrix expected(dim);
        if (g == a) expected = expected + block_scalar(0, da, dim, den);
        if (g == b) expected = expected + block_scalar(da, db, dim, den);
        r.add("P" + g.to_string() + "(C" + std::to_string(n) + ")" + pair +
                  (g == a || g == b ? " is the block identity" : " vanishes"),
              pg == expected);
        total_scaled = total_scaled.scaled(den) + pg.scaled(total_den);
        total_den *= den;
    }
    r.add("sum of projections is the identity" + pair,
          total_scaled == FractionMatrix::scalar(dim, total_den));
    return r;
}

} // namespace hecke
