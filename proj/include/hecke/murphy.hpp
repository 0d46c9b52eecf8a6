// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/diagrams.hpp"
#include "hecke/laurent.hpp"
#include "hecke/memo.hpp"

namespace hecke {

/// Sorted Murphy indices a_1 < a_2 < ... with a_1 >= 2 and a_{i+1} >= a_i + 2.
class MurphyIndexList {
public:
    MurphyIndexList() = default;
    explicit MurphyIndexList(std::vector<int> indices) : indices_(std::move(indices)) {
        std::sort(indices_.begin(), indices_.end());
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (indices_[i] < 2) throw IndexOutOfRange("Murphy index " + std::to_string(indices_[i]) + " < 2");
            if (i > 0 && indices_[i] < indices_[i - 1] + 2)
                throw ConsecutiveIndices("Murphy indices " + std::to_string(indices_[i - 1]) + " and " +
                                         std::to_string(indices_[i]) + " are not separated by 2");
        }
    }
    MurphyIndexList(std::initializer_list<int> indices) : MurphyIndexList(std::vector<int>(indices)) {}

    const std::vector<int>& indices() const { return indices_; }
    bool empty() const { return indices_.empty(); }
    std::size_t size() const { return indices_.size(); }
    int top() const { return indices_.empty() ? 0 : indices_.back(); }

    MurphyIndexList without_top() const {
        MurphyIndexList r;
        r.indices_.assign(indices_.begin(), indices_.end() - 1);
        return r;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < indices_.size(); ++i) s += (i ? "," : "") + std::to_string(indices_[i]);
        return s + ")";
    }

    friend bool operator==(const MurphyIndexList&, const MurphyIndexList&) = default;
    friend auto operator<=>(const MurphyIndexList& a, const MurphyIndexList& b) { return a.indices_ <=> b.indices_; }

private:
    std::vector<int> indices_;
};

/// All non-consecutive index lists drawn from {2, ..., n}, the empty list included.
inline std::vector<MurphyIndexList> non_consecutive_lists(int n) {
    std::vector<MurphyIndexList> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        out.emplace_back(cur);
        for (int a = from; a <= n; ++a) {
            cur.push_back(a);
            rec(a + 2);
            cur.pop_back();
        }
    };
    rec(2);
    return out;
}

struct TraceKey {
    Partition shape;
    MurphyIndexList indices;
    friend bool operator==(const TraceKey&, const TraceKey&) = default;
};

} // namespace hecke

template <>
struct std::hash<hecke::TraceKey> {
    std::size_t operator()(const hecke::TraceKey& k) const noexcept {
        std::size_t h = std::hash<hecke::Partition>{}(k.shape);
        for (int a : k.indices.indices()) h = (h ^ static_cast<std::size_t>(a)) * 0x100000001b3ULL;
        return h;
    }
};

template <>
struct std::hash<hecke::MurphyIndexList> {
    std::size_t operator()(const hecke::MurphyIndexList& m) const noexcept {
        std::size_t h = 0x84222325ULL;
        for (int a : m.indices()) h = (h ^ static_cast<std::size_t>(a)) * 0x100000001b3ULL;
        return h;
    }
};

namespace hecke {

/// Memoized traces of products of non-consecutive Murphy operators in the
/// irreducible representations, from the branching recursions over diagram
/// chains:
///   top index below n  : tr(prod L)_G = sum_{G' < G} tr(prod L)_{G'}
///   top index equal n  : tr(prod L)_G = sum_{G' < G} {G \ G'}_q tr(prod' L)_{G'}
/// with the empty product giving the dimension.
class TraceTable {
public:
    LaurentPoly product_trace(const Partition& g, const MurphyIndexList& idx) {
        if (idx.top() > g.size())
            throw IndexOutOfRange("Murphy index " + std::to_string(idx.top()) + " exceeds n = " +
                                  std::to_string(g.size()) + " for " + g.to_string());
        return lookup(g, idx);
    }

    LaurentPoly trace(const Partition& g, int i) {
        if (i < 2 || i > g.size())
            throw IndexOutOfRange("L_" + std::to_string(i) + " undefined for n = " + std::to_string(g.size()));
        return lookup(g, MurphyIndexList{i});
    }

    /// Trace of L_{a_1} ... L_{a_l} for any strictly increasing indices,
    /// consecutive ones included (the operators commute, and the chain
    /// recursion does not need the gaps).
    LaurentPoly increasing_product_trace(const Partition& g, const std::vector<int>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 2 || idx[i] > g.size())
                throw IndexOutOfRange("Murphy index " + std::to_string(idx[i]) + " outside 2.." +
                                      std::to_string(g.size()));
            if (i > 0 && idx[i] <= idx[i - 1])
                throw ConsecutiveIndices("Murphy indices must be strictly increasing");
        }
        std::map<std::pair<Partition, std::size_t>, LaurentPoly> local;
        std::function<LaurentPoly(const Partition&, std::size_t)> rec = [&](const Partition& h, std::size_t used) {
            if (used == 0) return LaurentPoly(Rational(dimension(h)));
            auto key = std::make_pair(h, used);
            if (auto it = local.find(key); it != local.end()) return it->second;
            const bool top_here = idx[used - 1] == h.size();
            LaurentPoly out;
            for (int r : h.removable_rows()) {
                LaurentPoly sub = rec(h.remove_box(r), top_here ? used - 1 : used);
                if (top_here) sub *= q_content(h.row(r) - (r + 1));
                out += sub;
            }
            return local.emplace(key, std::move(out)).first->second;
        };
        return rec(g, idx.size());
    }

    std::size_t cached_entries() const { return memo_.size(); }

private:
    LaurentPoly lookup(const Partition& g, const MurphyIndexList& idx) {
        if (idx.empty()) return LaurentPoly(Rational(dimension(g)));
        TraceKey key{g, idx};
        if (auto hit = memo_.find(key)) return *hit;
        LaurentPoly out;
        const bool top_here = idx.top() == g.size();
        const MurphyIndexList rest = top_here ? idx.without_top() : idx;
        for (int r : g.removable_rows()) {
            Partition smaller = g.remove_box(r);
            LaurentPoly sub = lookup(smaller, rest);
            if (top_here) sub *= q_content(g.row(r) - (r + 1));
            out += sub;
        }
        return memo_.insert(key, std::move(out));
    }

    MemoTable<TraceKey, LaurentPoly> memo_;
};

inline TraceTable& default_trace_table() {
    static TraceTable table;
    return table;
}

/// tr(L_i) in the irrep g.
inline LaurentPoly murphy_trace(const Partition& g, int i) { return default_trace_table().trace(g, i); }

/// tr(L_{a_1} ... L_{a_l}) in the irrep g; the empty product is dim g.
inline LaurentPoly murphy_product_trace(const Partition& g, const MurphyIndexList& idx) {
    return default_trace_table().product_trace(g, idx);
}

} // namespace hecke
