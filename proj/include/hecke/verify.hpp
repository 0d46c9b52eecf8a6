// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <string>

#include "hecke/casimir.hpp"
#include "hecke/characters.hpp"
#include "hecke/oracle.hpp"

namespace hecke {

struct VerifyOptions {
    int max_rank = 5; ///< N range for the Hecke/Casimir relation sweep
    bool inject_fault = false; ///< perturb one generator entry of the first irrep with n >= 2
};

/// Everything checkable for H_n(q) against the matrix oracle: the defining
/// relations, Murphy spectra and C_n of every irrep; Murphy traces;
/// pipeline characters against oracle word traces; the Hecke/Casimir
/// relation for every partition of n.
inline VerificationReport verify_all(int n, const VerifyOptions& opts = {}) {
    VerificationReport report;
    bool faulted = false;
    for (const auto& g : partitions_of(n)) {
        IrrepMatrices m = build_irrep(g);
        if (opts.inject_fault && !faulted && n >= 2) {
            FractionMatrix& g1 = m.generators[0];
            g1.set_numerator(0, 0, g1.numerator(0, 0) + LaurentPoly::q());
            faulted = true;
        }
        report.append(verify_relations(m));
        auto guarded = [&](const std::string& identity, auto&& check) {
            try {
                check();
            } catch (const Error& e) {
                report.add(identity, false, e.what());
            }
        };
        for (int p = 2; p <= n; ++p) {
            const std::string id = "tr L" + std::to_string(p) + " matches the branching recursion in " + g.to_string();
            guarded(id, [&] { report.add(id, murphy_matrix(m, p).trace() == murphy_trace(g, p)); });
        }
        for (const auto& mu : partitions_of(n)) {
            const std::string id = "character " + g.to_string() + " on " + mu.to_string() + " matches the oracle";
            guarded(id, [&] {
                const LaurentPoly oracle = word_trace(m, class_word(mu, n));
                const LaurentPoly pipeline = class_character(g, mu);
                report.add(id, oracle == pipeline,
                           oracle == pipeline ? "" : pipeline.to_string() + " != " + oracle.to_string());
            });
        }
        for (int N = std::max(g.rows() + 1, 2); N <= opts.max_rank; ++N)
            report.add("Hecke/Casimir relation for " + g.to_string() + ", N = " + std::to_string(N),
                       hecke_casimir_relation_check(g, N).holds);
    }
    return report;
}

} // namespace hecke
