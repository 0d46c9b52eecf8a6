// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/memo.hpp"
#include "hecke/partition.hpp"
#include "hecke/series.hpp"

namespace hecke {

/// Box coordinates are 1-based (row, column); content = column - row.
struct Box {
    int row = 1;
    int col = 1;
    int content() const { return col - row; }
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// Contents j - i of all boxes, row by row.
inline std::vector<int> contents(const Partition& g) {
    std::vector<int> out;
    for (int i = 1; i <= g.rows(); ++i)
        for (int j = 1; j <= g.row(i - 1); ++j) out.push_back(j - i);
    return out;
}

/// Eigenvalue of the class sum of p-cycles of S_n on the irrep g, p in {2, 3}.
inline Rational classical_eigenvalue(const Partition& g, int p) {
    Rational sum = 0;
    switch (p) {
    case 2:
        for (int c : contents(g)) sum += c;
        return sum;
    case 3: {
        for (int c : contents(g)) sum += c * c;
        const long n = g.size();
        return sum - n * (n - 1) / 2;
    }
    default:
        throw UnsupportedOrder("class-sum eigenvalue only for p = 2 or 3, got " + std::to_string(p));
    }
}

/// Eigenvalue of the fundamental invariant C_n on irrep g: the sum of the
/// q-contents q [j - i]_q over all boxes.
inline LaurentPoly fundamental_eigenvalue(const Partition& g) {
    std::map<int, int> diag;
    for (int c : contents(g)) ++diag[c];
    LaurentPoly out;
    for (auto [c, count] : diag) out += q_content(c) * Rational(count);
    return out;
}

/// Tail sums of the diagonal box counts: pi[k] (k >= 1) counts boxes with
/// content >= k, nu[k] (k <= -1) counts boxes with content <= k.
struct ContentProfile {
    std::map<int, int> pi;
    std::map<int, int> nu;

    /// sum_{k>0} q^k pi_k - sum_{k<0} q^{k+1} nu_k
    LaurentPoly eigenvalue() const {
        LaurentPoly out;
        for (auto [k, v] : pi) out += LaurentPoly::monomial(v, k);
        for (auto [k, v] : nu) out -= LaurentPoly::monomial(v, k + 1);
        return out;
    }
    friend bool operator==(const ContentProfile&, const ContentProfile&) = default;
};

inline ContentProfile content_profile(const Partition& g) {
    ContentProfile p;
    for (int c : contents(g)) {
        for (int k = 1; k <= c; ++k) ++p.pi[k];
        for (int k = -1; k >= c; --k) ++p.nu[k];
    }
    return p;
}

/// Inverts fundamental_eigenvalue on partitions of n.  Coefficients of q^k
/// (k >= 1) are pi_k, coefficients of q^{k+1} (k <= -1) are -nu_k; the
/// diagonal counts follow by differencing and the diagram is rebuilt
/// diagonal by diagonal.
inline Partition reconstruct_from_eigenvalue(const LaurentPoly& v, int n) {
    auto fail = [&](const std::string& why) {
        return NoSuchDiagram(v.to_string() + " for n = " + std::to_string(n) + ": " + why);
    };
    if (n < 1) throw fail("n must be positive");
    if (!v.is_zero() && (v.high_exponent() > n || v.low_exponent() < 1 - n)) throw fail("exponent out of range");

    auto as_count = [&](const Rational& c) {
        if (c.get_den() != 1 || c < 0 || c > n) throw fail("coefficient is not a box count");
        return static_cast<int>(c.get_num().get_si());
    };
    std::map<int, int> pi, nu; // tail sums
    for (int k = 1; k <= n; ++k) pi[k] = as_count(v.coeff(k));
    for (int k = -1; k >= -n; --k) nu[k] = as_count(-v.coeff(k + 1));

    std::map<int, int> diag;
    int off_diagonal = 0;
    for (int k = 1; k <= n; ++k) {
        int next = k + 1 <= n ? pi[k + 1] : 0;
        diag[k] = pi[k] - next;
        off_diagonal += diag[k];
    }
    for (int k = -1; k >= -n; --k) {
        int next = k - 1 >= -n ? nu[k - 1] : 0;
        diag[k] = nu[k] - next;
        off_diagonal += diag[k];
    }
    for (auto& [k, d] : diag)
        if (d < 0) throw fail("tail sums are not monotone");
    diag[0] = n - off_diagonal;
    if (diag[0] < 0) throw fail("more off-diagonal boxes than n");

    // Diagonal c >= 0 holds boxes (i, i + c) for i = 1..d_c; diagonal c < 0
    // holds rows 1 - c .. d_c - c.
    std::vector<int> rows;
    for (int i = 1; i <= n; ++i) {
        int len = 0;
        for (auto [c, d] : diag) {
            bool present = c >= 0 ? i <= d : (i >= 1 - c && i <= d - c);
            if (present) ++len;
        }
        if (len == 0) break;
        rows.push_back(len);
    }
    Partition g;
    try {
        g = Partition(rows);
    } catch (const InvalidPartition&) {
        throw fail("diagonal counts do not form a diagram");
    }
    if (g.size() != n || fundamental_eigenvalue(g) != v) throw fail("not the eigenvalue of any diagram");
    return g;
}

/// A maximal chain Gamma_1 < Gamma_2 < ... < Gamma_n adding one box per step;
/// equivalently a standard Young tableau.
struct DiagramChain {
    std::vector<Partition> shapes;
    std::vector<Box> added_boxes;

    int size() const { return static_cast<int>(added_boxes.size()); }
    const Partition& shape() const { return shapes.back(); }
    /// Content of the box added at 1-based step i.
    int content_at(int step) const { return added_boxes.at(static_cast<std::size_t>(step - 1)).content(); }
    friend bool operator==(const DiagramChain& a, const DiagramChain& b) { return a.added_boxes == b.added_boxes; }
};

namespace detail {

/// Grows chains towards g, trying rows from the top down at every step.
inline void visit_chains(const Partition& g, Partition& cur, DiagramChain& chain,
                         const std::function<void(const DiagramChain&)>& visit) {
    if (cur.size() == g.size()) {
        visit(chain);
        return;
    }
    for (int r : cur.addable_rows()) {
        if (r >= g.rows() || cur.row(r) >= g.row(r)) continue;
        Partition next = cur.add_box(r);
        chain.added_boxes.push_back(Box{r + 1, next.row(r)});
        chain.shapes.push_back(next);
        std::swap(cur, next);
        visit_chains(g, cur, chain, visit);
        std::swap(cur, next);
        chain.shapes.pop_back();
        chain.added_boxes.pop_back();
    }
}

} // namespace detail

inline constexpr int kMaxMaterializedChainSize = 12;

/// Lazily visits all chains ending at g, lexicographically by the rows of
/// the added boxes (the chain filling the top rows first comes first).
inline void for_each_chain(const Partition& g, const std::function<void(const DiagramChain&)>& visit) {
    Partition cur;
    DiagramChain chain;
    detail::visit_chains(g, cur, chain, visit);
}

/// All chains ending at g; refuses shapes larger than 12 boxes.
inline std::vector<DiagramChain> chains_of(const Partition& g) {
    if (g.size() > kMaxMaterializedChainSize)
        throw TooLarge("chains are only materialized for n <= 12, got " + g.to_string());
    std::vector<DiagramChain> out;
    for_each_chain(g, [&](const DiagramChain& c) { out.push_back(c); });
    return out;
}

/// Number of chains, by the branching recursion |Gamma| = sum |Gamma'| over
/// one-box-smaller Gamma'.
inline Integer dimension(const Partition& g) {
    static MemoTable<Partition, Integer> memo;
    if (g.size() <= 1) return 1;
    if (auto hit = memo.find(g)) return *hit;
    Integer d = 0;
    for (int r : g.removable_rows()) d += dimension(g.remove_box(r));
    return memo.insert(g, d);
}

/// q-content q [col - row]_q of the box added at step i (2 <= i <= n).
inline LaurentPoly q_content_added(const DiagramChain& chain, int step) {
    if (step < 2 || step > chain.size())
        throw IndexOutOfRange("step " + std::to_string(step) + " outside 2.." + std::to_string(chain.size()));
    return q_content(chain.content_at(step));
}

/// delta-series of ((q - 1)/q) * Lambda under q = e^delta.
inline DeltaSeries scaled_invariant_series(const Partition& g, int order) {
    LaurentPoly scale = LaurentPoly(1) - LaurentPoly::q(-1);
    return to_delta_series(scale * fundamental_eigenvalue(g), order);
}

} // namespace hecke
