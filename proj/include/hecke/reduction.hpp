// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/class_polynomials.hpp"
#include "hecke/laurent.hpp"
#include "hecke/word.hpp"

namespace hecke {

struct WordTerm {
    GWord word;
    LaurentPoly coeff;
};

/// Run followed by an adjacent hook:
///   tr((g_1..g_{k-1})(g_{k+1}..g_p)(g_{p+1}..g_{p+r}..g_{p+1}))
///     = sum_{l=0}^{r-1} C(r-1, l) q^l (q-1)^{r-l-1} tr((g_1..g_{k-1})(g_{k+1}..g_{p+r-l}))
/// k = 0 drops the first factor.  Valid inside any trace.
inline std::vector<WordTerm> v_reduction(int k, int p, int r) {
    if (r < 1) throw std::invalid_argument("v_reduction: r must be positive");
    if (k < 0 || p < k) throw std::invalid_argument("v_reduction: need 0 <= k <= p");
    const LaurentPoly q_minus_1 = LaurentPoly::q() - LaurentPoly(1);
    std::vector<WordTerm> out;
    for (int l = 0; l <= r - 1; ++l) {
        LaurentPoly c = LaurentPoly::monomial(binomial(r - 1, l), l) * q_minus_1.pow(static_cast<unsigned>(r - l - 1));
        GWord w = k == 0 ? run_word(1, p + r - l) : run_word(1, k - 1) + run_word(k + 1, p + r - l);
        out.push_back({std::move(w), std::move(c)});
    }
    return out;
}

/// The V_k word of the overlap expansion, tr((g_1..g_{k-1})(g_{k+1}..g_p)(hook over p+1..p+r)).
inline GWord v_word(int k, int p, int r) {
    GWord w = k == 0 ? run_word(1, p) : run_word(1, k - 1) + run_word(k + 1, p);
    if (r >= 1) w += hook_word(p + 1, p + r);
    return w;
}

struct VTerm {
    int k;
    LaurentPoly coeff;
};

/// A run overlapped by a hook (overlap length p - l + 1):
///   tr((g_1..g_p)(g_l..g_{p+r}..g_l))
///     = (q-1) sum_{k=1}^{p-l+1} q^k f_{2(p-l+1-k)+1} V_k + f_{2(p-l+1)+1} V_0.
/// The degenerate r = 0, l = p case is g_p^2 = f_2 g_p + q f_1, i.e.
/// (q-1) V_0 + q V_p with empty hooks.
inline std::vector<VTerm> overlap_reduction(int p, int l, int r) {
    if (l < 1 || l > p) throw std::invalid_argument("overlap_reduction: need 1 <= l <= p");
    if (r == 0) {
        if (l != p) throw std::invalid_argument("overlap_reduction: r = 0 only for a single squared letter");
        auto [fp, qfp1] = power_expand(2);
        return {{0, fp}, {p, qfp1}};
    }
    if (r < 0) throw std::invalid_argument("overlap_reduction: r must be nonnegative");
    const int overlap = p - l + 1;
    const LaurentPoly q_minus_1 = LaurentPoly::q() - LaurentPoly(1);
    std::vector<VTerm> out;
    out.push_back({0, f_coeff(2 * overlap + 1)});
    for (int k = 1; k <= overlap; ++k)
        out.push_back({k, q_minus_1 * f_coeff(2 * (overlap - k) + 1).shifted(k)});
    return out;
}

/// Reduces traces of words to combinations of class traces (cycle types).
/// Words of the character pipeline - a standard word followed by one hook -
/// go through the closed-form run/hook and overlap expansions when the hook
/// overlaps at most the last run; everything else goes through the class
/// polynomial reduction in the standard basis.
class WordReducer {
public:
    /// tr(standard_word(shape) * hook(i, a)), the hook being the
    /// transposition (i, a) written g_i .. g_{a-1} .. g_i; i < a.
    TraceExpansion standard_times_hook(const Partition& shape, int i, int a) {
        if (i < 1 || a <= i) throw std::invalid_argument("standard_times_hook: need 1 <= i < a");
        const auto& parts = shape.parts();
        const int s = shape.size();
        const int r = a - i;
        TraceExpansion out;
        if (parts.empty() || i >= s + 1) {
            // hook separated from the word by a cut: V_0 with an empty run
            for (const auto& t : v_reduction(0, 0, r)) accumulate(out, with_cycle(shape, t.word.span()), t.coeff);
            return out;
        }
        const int last = parts.back();
        const int s_prefix = s - last;
        Partition prefix(std::vector<int>(parts.begin(), parts.end() - 1));
        const int p = last - 1;
        auto add_words = [&](const std::vector<WordTerm>& terms, const LaurentPoly& scale) {
            for (const auto& t : terms) {
                Partition local = segment_shape(t.word);
                std::vector<int> all = prefix.parts();
                all.insert(all.end(), local.parts().begin(), local.parts().end());
                accumulate(out, Partition::from_unsorted(std::move(all)), t.coeff * scale);
            }
        };
        if (i == s) {
            add_words(v_reduction(0, p, a - s), LaurentPoly(1));
            return out;
        }
        if (i > s_prefix && a > s) {
            const int rr = a - s;
            for (const auto& v : overlap_reduction(p, i - s_prefix, rr)) add_words(v_reduction(v.k, p, rr), v.coeff);
            return out;
        }
        ++general_calls_;
        return classes_.of_word(standard_word(shape) + hook_word(i, a - 1));
    }

    /// General reduction of any word.
    TraceExpansion word(const GWord& w) { return classes_.of_word(w); }

    ClassPolynomials& class_polynomials() { return classes_; }
    std::size_t general_calls() const { return general_calls_; }

private:
    ClassPolynomials classes_;
    std::atomic<std::size_t> general_calls_{0};
};

} // namespace hecke
