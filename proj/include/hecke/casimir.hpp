// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/diagrams.hpp"
#include "hecke/laurent.hpp"
#include "hecke/partition.hpp"
#include "hecke/series.hpp"

namespace hecke {

namespace detail {

inline void check_rank(const Partition& g, int N) {
    if (N < 2) throw std::invalid_argument("SU_q(N) needs N >= 2, got " + std::to_string(N));
    if (g.rows() >= N)
        throw TooManyRows(g.to_string() + " has " + std::to_string(g.rows()) + " rows; SU_q(" + std::to_string(N) +
                          ") allows at most " + std::to_string(N - 1));
}

} // namespace detail

/// sum_{k=1}^{N-1} q^{2(l_k - k)}, l_k the length of row k (0 past the last row).
inline LaurentPoly casimir_eigenvalue(const Partition& g, int N) {
    detail::check_rank(g, N);
    LaurentPoly v;
    for (int k = 1; k <= N - 1; ++k) {
        const int l = k <= g.rows() ? g.row(k - 1) : 0;
        v += LaurentPoly::q(2 * (l - k));
    }
    return v;
}

/// Inverse of casimir_eigenvalue: N-1 distinct even exponents 2 L_k with
/// unit coefficients give rows l_k = L_k + k.
inline Partition decode_spectrum(const LaurentPoly& v, int N) {
    if (N < 2) throw MalformedSpectrum("N must be at least 2, got " + std::to_string(N));
    const auto terms = v.terms(); // decreasing exponents
    std::vector<int> rows;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [e, c] = terms[i];
        if (c != 1) throw MalformedSpectrum("coefficient " + rational_to_text(c) + " of q^" + std::to_string(e) + " is not 1");
        if (e % 2 != 0) throw MalformedSpectrum("exponent " + std::to_string(e) + " is odd");
        rows.push_back(e / 2 + static_cast<int>(i) + 1);
    }
    if (static_cast<int>(terms.size()) != N - 1)
        throw MalformedSpectrum(v.to_string() + " has " + std::to_string(terms.size()) + " terms, expected " +
                                std::to_string(N - 1));
    if (!rows.empty() && rows.back() < 0)
        throw MalformedSpectrum(v.to_string() + " gives a negative row length " + std::to_string(rows.back()));
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i] < rows[i + 1]) throw MalformedSpectrum(v.to_string() + " gives increasing row lengths");
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

struct BlockDecoding {
    std::vector<std::optional<Partition>> diagrams; ///< one entry per block, empty on failure
    std::vector<std::pair<std::size_t, std::string>> errors;

    bool ok() const { return errors.empty(); }
};

/// Decodes each unit-matrix block of a reducible representation separately.
inline BlockDecoding decode_blocks(const std::vector<LaurentPoly>& blocks, int N) {
    BlockDecoding out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        try {
            out.diagrams.emplace_back(decode_spectrum(blocks[i], N));
        } catch (const MalformedSpectrum& e) {
            out.diagrams.emplace_back(std::nullopt);
            out.errors.emplace_back(i, e.what());
        }
    }
    return out;
}

/// delta-series of the Casimir eigenvalue under q = e^delta.
inline DeltaSeries casimir_delta_series(const Partition& g, int N, int order) {
    return to_delta_series(casimir_eigenvalue(g, N), order);
}

struct CasimirRelation {
    Partition shape;
    int N = 0;
    LaurentPoly lhs; ///< ((q^2-1)/q^2)^2 Lambda(q^2) + ((q^2-1)/q^2) n
    LaurentPoly rhs; ///< Casimir eigenvalue + (q^{-2(N-1)} - 1)/(q^2 - 1)
    bool holds = false;
};

/// Both sides of the relation between the Hecke fundamental invariant at
/// q^2 and the SU_q(N) Casimir.  Each side is a Laurent polynomial, so the
/// comparison is exact.
inline CasimirRelation hecke_casimir_relation_check(const Partition& g, int N) {
    detail::check_rank(g, N);
    CasimirRelation r;
    r.shape = g;
    r.N = N;
    const LaurentPoly t = LaurentPoly(1) - LaurentPoly::q(-2); // (q^2 - 1)/q^2
    r.lhs = t * t * fundamental_eigenvalue(g).substitute_power(2) + t * LaurentPoly(g.size());
    // (q^{-2(N-1)} - 1)/(q^2 - 1) = -q^{-2(N-1)} (1 + q^2 + ... + q^{2(N-2)})
    LaurentPoly geometric;
    for (int j = 0; j <= N - 2; ++j) geometric += LaurentPoly::q(2 * j);
    r.rhs = casimir_eigenvalue(g, N) - geometric.shifted(-2 * (N - 1));
    r.holds = r.lhs == r.rhs;
    return r;
}

} // namespace hecke
