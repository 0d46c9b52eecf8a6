// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/memo.hpp"
#include "hecke/word.hpp"

namespace hecke {

/// Permutations as byte strings: perm[x] is the image of x (0-based), with
/// trailing fixed points trimmed so that S_m < S_{m+1} share keys.
using Perm = std::string;

namespace perm {

inline Perm identity(int n) {
    Perm p(static_cast<std::size_t>(n), '\0');
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<char>(i);
    return p;
}

inline Perm trimmed(Perm p) {
    while (!p.empty() && static_cast<unsigned char>(p.back()) == p.size() - 1) p.pop_back();
    return p;
}

inline int length(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (static_cast<unsigned char>(p[i]) > static_cast<unsigned char>(p[j])) ++inv;
    return inv;
}

/// Cycle lengths >= 2, sorted non-increasing.
inline Partition cycle_type(const Perm& p) {
    std::vector<int> parts;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<unsigned char>(p[j])) {
            seen[j] = true;
            ++len;
        }
        if (len > 1) parts.push_back(len);
    }
    return Partition::from_unsorted(std::move(parts));
}

inline int moved_cycle_count(const Perm& p) { return cycle_type(p).rows(); }

/// s_i w: swaps the values i and i+1 (0-based i).
inline Perm left_mul(Perm p, int i) {
    for (auto& c : p) {
        if (static_cast<unsigned char>(c) == i)
            c = static_cast<char>(i + 1);
        else if (static_cast<unsigned char>(c) == i + 1)
            c = static_cast<char>(i);
    }
    return p;
}

/// w s_i: swaps positions i and i+1.
inline Perm right_mul(Perm p, int i) {
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
    return p;
}

inline Perm from_word(const GWord& w, int n) {
    Perm p = identity(n);
    for (int a : w.letters) p = right_mul(std::move(p), a - 1);
    return p;
}

} // namespace perm

/// Linear combination of basis elements T_w.
using TBasisElement = std::unordered_map<Perm, LaurentPoly>;

/// Expands a word in the standard basis using
///   T_w T_s = T_{ws}                     if l(ws) > l(w)
///   T_w T_s = (q - 1) T_w + q T_{ws}     otherwise.
inline TBasisElement expand_in_standard_basis(const GWord& w) {
    const int n = std::max(w.span(), 1);
    TBasisElement cur{{perm::identity(n), LaurentPoly(1)}};
    const LaurentPoly q = LaurentPoly::q(), q_minus_1 = LaurentPoly::q() - LaurentPoly(1);
    for (int a : w.letters) {
        const std::size_t i = static_cast<std::size_t>(a - 1);
        TBasisElement next;
        auto add = [&](const Perm& p, const LaurentPoly& c) {
            auto [it, inserted] = next.try_emplace(p, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        for (const auto& [p, c] : cur) {
            Perm ps = perm::right_mul(p, a - 1);
            if (static_cast<unsigned char>(p[i]) < static_cast<unsigned char>(p[i + 1])) {
                add(ps, c);
            } else {
                add(p, c * q_minus_1);
                add(ps, c * q);
            }
        }
        cur = std::move(next);
    }
    TBasisElement out;
    for (auto& [p, c] : cur) out.emplace(perm::trimmed(p), std::move(c));
    return out;
}

/// Class polynomials: the trace of any T_w, for every trace function on the
/// Hecke algebra, as a combination of traces of minimal-length class
/// representatives.  Reduces by cyclic shifts (length-preserving
/// conjugations, which keep the trace) until a conjugation s w s drops the
/// length by two, where
///   tr(T_w) = (q - 1) tr(T_{sw}) + q tr(T_{sws}).
/// In type A an element is of minimal length in its class exactly when its
/// length equals its reflection length (number of points minus cycles).
class ClassPolynomials {
public:
    TraceExpansion of(const Perm& w_untrimmed) {
        const Perm w = perm::trimmed(w_untrimmed);
        if (auto hit = memo_.find(w)) return *hit;
        TraceExpansion result = compute(w);
        return memo_.insert(w, std::move(result));
    }

    /// Trace expansion of an arbitrary word.
    TraceExpansion of_word(const GWord& w) {
        TraceExpansion out;
        for (const auto& [p, c] : expand_in_standard_basis(w)) accumulate(out, of(p), c);
        return out;
    }

    std::size_t cached_entries() const { return memo_.size(); }

private:
    TraceExpansion compute(const Perm& w) {
        const int n = static_cast<int>(w.size());
        const int len = perm::length(w);
        const Partition type = perm::cycle_type(w);
        int moved = 0;
        for (int p : type.parts()) moved += p;
        // reflection length = sum over cycles of (length - 1)
        if (len == moved - type.rows()) return TraceExpansion{{type, LaurentPoly(1)}};

        std::deque<Perm> queue{w};
        std::unordered_set<Perm> visited{w};
        while (!queue.empty()) {
            Perm x = std::move(queue.front());
            queue.pop_front();
            for (int i = 0; i + 1 < n; ++i) {
                Perm sx = perm::left_mul(x, i);
                Perm y = perm::right_mul(sx, i);
                int ly = perm::length(y);
                if (ly == len - 2) {
                    TraceExpansion out;
                    accumulate(out, of(sx), LaurentPoly::q() - LaurentPoly(1));
                    accumulate(out, of(y), LaurentPoly::q());
                    for (const Perm& v : visited)
                        if (v != w) memo_.insert(perm::trimmed(v), out);
                    return out;
                }
                if (ly == len && visited.insert(y).second) queue.push_back(std::move(y));
            }
        }
        throw std::logic_error("class polynomial reduction stalled at a non-minimal element");
    }

    MemoTable<Perm, TraceExpansion> memo_;
};

} // namespace hecke
