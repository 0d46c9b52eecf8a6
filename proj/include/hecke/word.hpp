// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// A word g_{i_1} g_{i_2} ... in the Hecke generators (1-based indices).
struct GWord {
    std::vector<int> letters;

    GWord() = default;
    GWord(std::initializer_list<int> l) : letters(l) {}
    explicit GWord(std::vector<int> l) : letters(std::move(l)) {}

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    int max_letter() const {
        int m = 0;
        for (int a : letters) m = std::max(m, a);
        return m;
    }
    /// Number of points the word acts on: 1 + largest generator index.
    int span() const { return empty() ? 0 : max_letter() + 1; }

    GWord& operator+=(const GWord& o) {
        letters.insert(letters.end(), o.letters.begin(), o.letters.end());
        return *this;
    }
    friend GWord operator+(GWord a, const GWord& b) { return a += b; }
    friend bool operator==(const GWord&, const GWord&) = default;
    friend auto operator<=>(const GWord& a, const GWord& b) { return a.letters <=> b.letters; }

    /// Shifts every index by k.
    GWord shifted(int k) const {
        GWord w = *this;
        for (int& a : w.letters) a += k;
        return w;
    }

    std::string to_string() const {
        if (letters.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? " g" : "g") + std::to_string(letters[i]);
        return s;
    }
};

/// Ascending run g_first g_{first+1} ... g_last (empty when last < first).
inline GWord run_word(int first, int last) {
    GWord w;
    for (int a = first; a <= last; ++a) w.letters.push_back(a);
    return w;
}

/// Hook g_i g_{i+1} ... g_{top} ... g_{i+1} g_i, the transposition (i, top+1).
inline GWord hook_word(int i, int top) {
    GWord w = run_word(i, top);
    for (int a = top - 1; a >= i; --a) w.letters.push_back(a);
    return w;
}

struct Run {
    int first;
    int last;
    int letters() const { return last - first + 1; }
    friend bool operator==(const Run&, const Run&) = default;
};

/// Splits a standard word (disjoint ascending runs, each separated from the
/// next by at least one missing index) into its runs; nullopt otherwise.
inline std::optional<std::vector<Run>> standard_runs(const GWord& w) {
    std::vector<Run> runs;
    for (int a : w.letters) {
        if (a < 1) return std::nullopt;
        if (!runs.empty() && a == runs.back().last + 1) {
            runs.back().last = a;
            continue;
        }
        if (!runs.empty() && a < runs.back().last + 2) return std::nullopt;
        runs.push_back(Run{a, a});
    }
    return runs;
}

inline bool is_standard(const GWord& w) { return standard_runs(w).has_value(); }

/// Class type of a standard word as a multiset of cycle lengths (>= 2):
/// a run of m letters is an (m+1)-cycle.
inline Partition segment_shape(const GWord& w) {
    auto runs = standard_runs(w);
    if (!runs) throw std::invalid_argument("segment_shape: not a standard word: " + w.to_string());
    std::vector<int> parts;
    for (const Run& r : *runs) parts.push_back(r.letters() + 1);
    return Partition::from_unsorted(std::move(parts));
}

/// Canonical standard word of a cycle type: parts left to right in
/// non-increasing order, one skipped index between consecutive runs, parts
/// equal to 1 contributing nothing.
inline GWord standard_word(const Partition& shape) {
    GWord w;
    int s = 0;
    for (int p : shape.parts()) {
        w += run_word(s + 1, s + p - 1);
        s += p;
    }
    return w;
}

/// Class representative word for the class mu of S_n.
inline GWord class_word(const Partition& mu, int n) {
    if (mu.size() != n)
        throw SizeMismatch("class " + mu.to_string() + " is not a partition of " + std::to_string(n));
    return standard_word(mu);
}

/// Formal combination of class traces: cycle type (parts >= 2) -> coefficient.
using TraceExpansion = std::map<Partition, LaurentPoly>;

inline void accumulate(TraceExpansion& into, const Partition& shape, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = into.try_emplace(shape, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

inline void accumulate(TraceExpansion& into, const TraceExpansion& from, const LaurentPoly& scale) {
    for (const auto& [shape, c] : from) accumulate(into, shape, c * scale);
}

/// Adds a cycle of the given length (no-op for length 1) to a cycle type.
inline Partition with_cycle(const Partition& shape, int length) {
    if (length < 2) return shape;
    std::vector<int> parts = shape.parts();
    parts.push_back(length);
    return Partition::from_unsorted(std::move(parts));
}

inline std::string to_string(const TraceExpansion& e) {
    if (e.empty()) return "0";
    std::string s;
    for (const auto& [shape, c] : e) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*tr" + shape.to_string();
    }
    return s;
}

} // namespace hecke
