// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hecke/diagrams.hpp"
#include "hecke/laurent.hpp"
#include "hecke/memo.hpp"
#include "hecke/murphy.hpp"
#include "hecke/rational_function.hpp"
#include "hecke/reduction.hpp"
#include "hecke/word.hpp"

namespace hecke {

/// Characters of H_n(q): rows are irreps, columns are classes mu (as
/// partitions of n), entries are the traces of the class words.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> irreps;
    std::vector<Partition> classes;
    std::vector<std::vector<LaurentPoly>> entries;

    const LaurentPoly& at(std::size_t row, std::size_t col) const { return entries.at(row).at(col); }
};

/// tr(g_1 ... g_{k-1}) = (q/(q-1))^{k-2} sum_{i=0}^{k-2} (-1)^i C(k-1, i) tr(L_{k-i}).
inline LaurentPoly single_cycle_trace(const Partition& g, int k) {
    if (k < 2 || k > g.size())
        throw IndexOutOfRange("cycle length " + std::to_string(k) + " outside 2.." + std::to_string(g.size()));
    LaurentPoly sum;
    for (int i = 0; i <= k - 2; ++i)
        sum += murphy_trace(g, k - i) * Rational((i % 2 ? -1 : 1) * binomial(k - 1, i));
    const unsigned e = static_cast<unsigned>(k - 2);
    return exact_div(sum.shifted(k - 2), (LaurentPoly::q() - LaurentPoly(1)).pow(e));
}

/// tr((g_1 ... g_{k-1}) L_m) for m > k: the same inversion with every
/// Murphy trace multiplied by L_m, which commutes with H_k.
inline LaurentPoly cycle_times_murphy_trace(const Partition& g, int k, int m) {
    if (k < 2 || k > g.size())
        throw IndexOutOfRange("cycle length " + std::to_string(k) + " outside 2.." + std::to_string(g.size()));
    if (m <= k)
        throw ConsecutiveIndices("L_" + std::to_string(m) + " overlaps the run's L_2..L_" + std::to_string(k));
    if (m > g.size()) throw IndexOutOfRange("L_" + std::to_string(m) + " exceeds n = " + std::to_string(g.size()));
    LaurentPoly sum;
    for (int i = 0; i <= k - 2; ++i)
        sum += default_trace_table().increasing_product_trace(g, {k - i, m}) *
               Rational((i % 2 ? -1 : 1) * binomial(k - 1, i));
    return exact_div(sum.shifted(k - 2), (LaurentPoly::q() - LaurentPoly(1)).pow(static_cast<unsigned>(k - 2)));
}

/// Linear relations between traces of non-consecutive Murphy products and
/// class traces of H_n(q), one Murphy product per class, solved for the
/// class traces.  The coefficients are universal: they hold for every trace
/// function and do not depend on n.
struct InversionSystem {
    int n = 0;
    std::vector<Partition> classes;         ///< partitions of n, canonical order
    std::vector<Partition> shapes;          ///< the same classes with parts 1 dropped
    std::vector<MurphyIndexList> rows;      ///< Murphy product attached to each class
    std::vector<std::vector<LaurentPoly>> matrix; ///< matrix[row][class]
    std::vector<std::size_t> order;         ///< substitution order; empty if not triangular

    bool triangular() const { return !order.empty() || classes.empty(); }

    std::size_t class_index(const Partition& shape) const {
        auto it = std::find(shapes.begin(), shapes.end(), shape.without_ones());
        if (it == shapes.end()) throw SizeMismatch("class " + shape.to_string() + " not in S_" + std::to_string(n));
        return static_cast<std::size_t>(it - shapes.begin());
    }
};

namespace detail {

/// Murphy product whose leading class is the given cycle type: partial sums
/// of the parts, smallest part first.
inline MurphyIndexList leading_murphy_product(const Partition& shape) {
    std::vector<int> parts = shape.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<int> idx;
    int s = 0;
    for (int p : parts) {
        s += p;
        idx.push_back(s);
    }
    return MurphyIndexList(std::move(idx));
}

/// Topological order of classes for forward substitution, or empty.
inline std::vector<std::size_t> substitution_order(const std::vector<std::vector<LaurentPoly>>& a) {
    const std::size_t p = a.size();
    std::vector<int> state(p, 0); // 0 new, 1 active, 2 done
    std::vector<std::size_t> order;
    bool cyclic = false;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        if (cyclic || state[v] == 2) return;
        if (state[v] == 1) {
            cyclic = true;
            return;
        }
        state[v] = 1;
        for (std::size_t u = 0; u < p; ++u)
            if (u != v && !a[v][u].is_zero()) visit(u);
        state[v] = 2;
        order.push_back(v);
    };
    for (std::size_t v = 0; v < p && !cyclic; ++v) {
        if (a[v][v].is_zero()) return {};
        visit(v);
    }
    if (cyclic) return {};
    return order;
}

/// Fraction-free (Bareiss) elimination for A x = b over Q[q, 1/q], where
/// the solution is known to be Laurent.  Several right-hand sides at once.
inline std::vector<std::vector<LaurentPoly>> bareiss_solve(std::vector<std::vector<LaurentPoly>> a,
                                                           std::vector<std::vector<LaurentPoly>> rhs) {
    const std::size_t p = a.size();
    const std::size_t m = rhs.empty() ? 0 : rhs[0].size();
    LaurentPoly prev(1);
    for (std::size_t k = 0; k < p; ++k) {
        std::size_t piv = k;
        while (piv < p && a[piv][k].is_zero()) ++piv;
        if (piv == p) throw std::logic_error("Murphy inversion system is singular");
        std::swap(a[k], a[piv]);
        std::swap(rhs[k], rhs[piv]);
        for (std::size_t i = k + 1; i < p; ++i) {
            for (std::size_t j = k + 1; j < p; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            for (std::size_t j = 0; j < m; ++j) rhs[i][j] = exact_div(a[k][k] * rhs[i][j] - a[i][k] * rhs[k][j], prev);
            a[i][k] = LaurentPoly();
        }
        prev = a[k][k];
    }
    std::vector<std::vector<LaurentPoly>> x(p, std::vector<LaurentPoly>(m));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = p; i-- > 0;) {
            LaurentPoly acc = rhs[i][j];
            for (std::size_t c = i + 1; c < p; ++c) acc -= a[i][c] * x[c][j];
            x[i][j] = exact_div(acc, a[i][i]);
        }
    }
    return x;
}

} // namespace detail

/// Character pipeline: Murphy traces -> class traces -> character tables.
class CharacterEngine {
public:
    explicit CharacterEngine(TraceTable& traces = default_trace_table()) : traces_(traces) {}

    WordReducer& reducer() { return reducer_; }

    /// tr(L_{a_1} ... L_{a_l}) as a combination of class traces, valid for
    /// every trace function.  Multiplies one Murphy operator at a time,
    /// expanding it into hooks and reducing each standard-word-times-hook
    /// product back to standard words.
    TraceExpansion murphy_class_expansion(const MurphyIndexList& idx) {
        if (idx.empty()) return TraceExpansion{{Partition{}, LaurentPoly(1)}};
        if (auto hit = expansions_.find(idx)) return *hit;
        TraceExpansion below = murphy_class_expansion(idx.without_top());
        const int a = idx.top();
        TraceExpansion out;
        for (const auto& [shape, c] : below)
            for (int i = 1; i < a; ++i)
                accumulate(out, reducer_.standard_times_hook(shape, i, a), c * LaurentPoly::q(1 - a + i));
        return expansions_.insert(idx, std::move(out));
    }

    const InversionSystem& system(int n) {
        std::lock_guard lock(systems_mutex_);
        auto it = systems_.find(n);
        if (it != systems_.end()) return *it->second;
        auto sys = std::make_unique<InversionSystem>();
        sys->n = n;
        sys->classes = partitions_of(n);
        for (const auto& mu : sys->classes) sys->shapes.push_back(mu.without_ones());
        for (const auto& shape : sys->shapes) {
            MurphyIndexList row = detail::leading_murphy_product(shape);
            TraceExpansion e = murphy_class_expansion(row);
            std::vector<LaurentPoly> coeffs(sys->shapes.size());
            for (const auto& [cls, c] : e) coeffs[sys->class_index(cls)] = c;
            sys->rows.push_back(std::move(row));
            sys->matrix.push_back(std::move(coeffs));
        }
        sys->order = detail::substitution_order(sys->matrix);
        return *systems_.emplace(n, std::move(sys)).first->second;
    }

    /// All class traces of irrep g, aligned with system(|g|).classes.
    std::vector<LaurentPoly> characters_of(const Partition& g) {
        if (auto hit = characters_.find(g)) return *hit;
        const InversionSystem& sys = system(g.size());
        std::vector<LaurentPoly> y;
        for (const auto& row : sys.rows) y.push_back(traces_.product_trace(g, row));
        return characters_.insert(g, solve(sys, y));
    }

    /// Solves the system for one vector of Murphy traces.
    std::vector<LaurentPoly> solve(const InversionSystem& sys, const std::vector<LaurentPoly>& y,
                                   bool force_elimination = false) const {
        const std::size_t p = sys.classes.size();
        if (sys.triangular() && !force_elimination) {
            std::vector<LaurentPoly> x(p);
            for (std::size_t v : sys.order) {
                LaurentPoly acc = y[v];
                for (std::size_t u = 0; u < p; ++u)
                    if (u != v && !sys.matrix[v][u].is_zero()) acc -= sys.matrix[v][u] * x[u];
                x[v] = exact_div(acc, sys.matrix[v][v]);
            }
            return x;
        }
        std::vector<std::vector<LaurentPoly>> rhs;
        for (const auto& v : y) rhs.push_back({v});
        auto sol = detail::bareiss_solve(sys.matrix, rhs);
        std::vector<LaurentPoly> x;
        for (auto& r : sol) x.push_back(std::move(r[0]));
        return x;
    }

    /// Character of irrep g on the class mu.
    LaurentPoly class_character(const Partition& g, const Partition& mu) {
        if (g.size() != mu.size())
            throw SizeMismatch("irrep " + g.to_string() + " and class " + mu.to_string() + " differ in size");
        const InversionSystem& sys = system(g.size());
        return characters_of(g)[sys.class_index(mu)];
    }

    /// Reduces a word of the pipeline grammar (a standard word, optionally
    /// followed by one hook g_k .. g_m .. g_k) to class traces.
    TraceExpansion reduce_word(const GWord& w) {
        if (auto runs = standard_runs(w)) return TraceExpansion{{segment_shape(w), LaurentPoly(1)}};
        const int total = static_cast<int>(w.length());
        for (int len = total % 2 ? total : total - 1; len >= 1; len -= 2) {
            const int start = total - len;
            GWord prefix(std::vector<int>(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(start)));
            GWord tail(std::vector<int>(w.letters.begin() + static_cast<std::ptrdiff_t>(start), w.letters.end()));
            const int k = tail.letters.front();
            const int top = k + len / 2;
            if (tail != hook_word(k, top) || !is_standard(prefix)) continue;
            Partition shape = segment_shape(prefix);
            if (prefix == standard_word(shape)) return reducer_.standard_times_hook(shape, k, top + 1);
            return reducer_.word(w);
        }
        throw UnreducibleWord(w.to_string() + " is neither standard nor standard followed by a hook");
    }

    /// Trace of a pipeline word in irrep g.
    LaurentPoly reduce_word_trace(const Partition& g, const GWord& w) {
        if (w.max_letter() >= std::max(g.size(), 1))
            throw IndexOutOfRange("word " + w.to_string() + " uses generators beyond H_" + std::to_string(g.size()));
        LaurentPoly out;
        for (const auto& [shape, c] : reduce_word(w)) out += c * class_character(g, shape.padded_to(g.size()));
        return out;
    }

    /// Full table; rows are filled concurrently.
    CharacterTable character_table(int n) {
        if (n < 1) throw std::invalid_argument("character_table: n must be positive");
        CharacterTable t;
        t.n = n;
        t.irreps = partitions_of(n);
        t.classes = system(n).classes;
        t.entries.resize(t.irreps.size());
        const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                                  static_cast<unsigned>(t.irreps.size())));
        std::vector<std::future<void>> jobs;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < workers; ++w)
            jobs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t r; (r = next++) < t.irreps.size();) t.entries[r] = characters_of(t.irreps[r]);
            }));
        for (auto& j : jobs) j.get();
        return t;
    }

    /// The class trace of `shape` as a combination of Murphy product traces,
    /// read off the triangular system for H_n.
    std::map<MurphyIndexList, RationalFunction> murphy_expression(const Partition& shape, int n) {
        const InversionSystem& sys = system(n);
        if (!sys.triangular()) throw std::logic_error("Murphy inversion system is not triangular");
        std::vector<std::map<MurphyIndexList, RationalFunction>> expr(sys.classes.size());
        for (std::size_t v : sys.order) {
            std::map<MurphyIndexList, RationalFunction> acc{{sys.rows[v], RationalFunction(1)}};
            for (std::size_t u = 0; u < sys.classes.size(); ++u) {
                if (u == v || sys.matrix[v][u].is_zero()) continue;
                for (const auto& [idx, c] : expr[u]) {
                    auto [it, ins] = acc.try_emplace(idx, RationalFunction());
                    it->second = (it->second - c * RationalFunction(sys.matrix[v][u])).reduced();
                }
            }
            for (auto it = acc.begin(); it != acc.end();) {
                it->second = (it->second / RationalFunction(sys.matrix[v][v])).reduced();
                it = it->second.is_zero() ? acc.erase(it) : std::next(it);
            }
            expr[v] = std::move(acc);
        }
        return expr[sys.class_index(shape)];
    }

private:
    TraceTable& traces_;
    WordReducer reducer_;
    MemoTable<MurphyIndexList, TraceExpansion> expansions_;
    std::mutex systems_mutex_;
    std::map<int, std::unique_ptr<InversionSystem>> systems_;
    MemoTable<Partition, std::vector<LaurentPoly>> characters_;
};

inline CharacterEngine& default_character_engine() {
    static CharacterEngine engine;
    return engine;
}

inline GWord class_word_of(const Partition& mu) { return class_word(mu, mu.size()); }

inline LaurentPoly class_character(const Partition& g, const Partition& mu) {
    return default_character_engine().class_character(g, mu);
}

inline LaurentPoly reduce_word_trace(const Partition& g, const GWord& w) {
    return default_character_engine().reduce_word_trace(g, w);
}

inline CharacterTable character_table(int n) { return default_character_engine().character_table(n); }

/// Coefficients c_0 .. c_{p-1} of the Lagrange polynomial
/// P_g(x) = prod_{g' != g} (x - Lambda^{g'}) / (Lambda^g - Lambda^{g'}),
/// so that P_g(C_n) projects onto the g-isotypic part.
inline std::vector<RationalFunction> projection_coefficients(int n, const Partition& g) {
    if (g.size() != n) throw SizeMismatch(g.to_string() + " is not a partition of " + std::to_string(n));
    const LaurentPoly own = fundamental_eigenvalue(g);
    std::vector<LaurentPoly> num{LaurentPoly(1)}; // coefficients in x, lowest first
    LaurentPoly den(1);
    for (const auto& other : partitions_of(n)) {
        if (other == g) continue;
        LaurentPoly lam = fundamental_eigenvalue(other);
        if (lam == own)
            throw DegenerateEigenvalues(g.to_string() + " and " + other.to_string() + " share " + own.to_string());
        std::vector<LaurentPoly> next(num.size() + 1);
        for (std::size_t k = 0; k < num.size(); ++k) {
            next[k + 1] += num[k];
            next[k] -= num[k] * lam;
        }
        num = std::move(next);
        den *= own - lam;
    }
    std::vector<RationalFunction> out;
    for (auto& c : num) out.emplace_back(std::move(c), den);
    return out;
}

} // namespace hecke
