// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "hecke/hecke.hpp"
#include "support/classical.hpp"

using namespace hecke;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
    void expect(bool ok, const std::function<std::string()>& why) {
        if (!ok) fail(why());
    }
};

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

Outcome eigenvalue_examples() {
    Outcome o;
    const LaurentPoly a = fundamental_eigenvalue(Partition({4, 1, 1}));
    const LaurentPoly b = fundamental_eigenvalue(Partition({3, 3}));
    o.expect(a == P("q^3+2*q^2+3*q-2-q^-1"), [&] { return "[4,1,1] gave " + a.to_string(); });
    o.expect(b == P("q^2+3*q-1"), [&] { return "[3,3] gave " + b.to_string(); });
    o.expect(a.eval_at(1) == 3 && b.eval_at(1) == 3, [] { return "values at q=1 differ from 3"; });
    return o;
}

Outcome injectivity() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        std::set<std::string> generic;
        std::map<Rational, std::vector<Partition>> classical;
        for (const auto& g : partitions_of(n)) {
            const LaurentPoly v = fundamental_eigenvalue(g);
            o.expect(generic.insert(v.to_string()).second, [&] { return "generic collision at " + g.to_string(); });
            o.expect(reconstruct_from_eigenvalue(v, n) == g, [&] { return "round trip failed for " + g.to_string(); });
            classical[v.eval_at(1)].push_back(g);
        }
        bool collided = false;
        for (const auto& [value, shapes] : classical) collided = collided || shapes.size() > 1;
        if (n <= 5) o.expect(!collided, [&] { return "q=1 collision for n = " + std::to_string(n); });
        if (n == 6) {
            auto it = classical.find(Rational(3));
            const bool pair = it != classical.end() &&
                              std::count(it->second.begin(), it->second.end(), Partition({4, 1, 1})) == 1 &&
                              std::count(it->second.begin(), it->second.end(), Partition({3, 3})) == 1;
            o.expect(pair, [] { return "[4,1,1] and [3,3] do not collide at q=1"; });
        }
    }
    return o;
}

Outcome oracle_relations() {
    Outcome o;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : partitions_of(n)) {
            VerificationReport r = verify_relations(build_irrep(g));
            o.expect(r.all_passed(), [&] { return r.first_failure()->identity; });
        }
    return o;
}

Outcome pipeline_equality() {
    Outcome o;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : partitions_of(n)) {
            IrrepMatrices m = build_irrep(g);
            for (const auto& mu : partitions_of(n)) {
                const LaurentPoly a = class_character(g, mu), b = word_trace(m, class_word(mu, n));
                o.expect(a == b, [&] { return g.to_string() + " on " + mu.to_string() + ": " + a.to_string() + " vs " + b.to_string(); });
            }
            const LaurentPoly q = LaurentPoly::q(), one(1);
            const LaurentPoly l2 = n >= 2 ? murphy_trace(g, 2) : LaurentPoly();
            for (int i = 1; i <= n - 1; ++i)
                o.expect(reduce_word_trace(g, GWord{i}) == l2, [&] { return "tr(g_i) identity, i = " + std::to_string(i); });
            if (n >= 3) {
                const LaurentPoly l3 = murphy_trace(g, 3);
                for (int i = 1; i <= n - 2; ++i)
                    o.expect(RationalFunction(reduce_word_trace(g, GWord{i, i + 1}) * (q - one)) ==
                                 RationalFunction(q * (l3 - l2 * Rational(2))),
                             [&] { return "tr(g_i g_i+1) identity in " + g.to_string(); });
            }
            if (n >= 4) {
                const LaurentPoly rhs = l2 * P("-2*q") + murphy_trace(g, 3) * P("q^2+2*q+1") -
                                        murphy_trace(g, 4) * P("1+q^2") + murphy_product_trace(g, {2, 4}) * P("q-1");
                for (int i = 1; i <= n - 3; ++i)
                    o.expect(reduce_word_trace(g, GWord{i, i + 2}) * (q - one) == rhs,
                             [&] { return "tr(g_i g_i+2) identity in " + g.to_string(); });
            }
        }
    return o;
}

Outcome classical_limit() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        classical::SymmetricGroupCharacters sn(n);
        CharacterTable t = character_table(n);
        o.expect(t.classes == sn.classes(), [] { return "class order differs"; });
        std::vector<std::vector<mpq_class>> rows;
        for (std::size_t r = 0; r < t.irreps.size(); ++r) {
            rows.emplace_back();
            for (std::size_t c = 0; c < t.classes.size(); ++c) {
                rows.back().push_back(t.at(r, c).eval_at(1));
                o.expect(rows.back().back() == sn.at(r, c),
                         [&] { return t.irreps[r].to_string() + " on " + t.classes[c].to_string(); });
            }
        }
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < rows.size(); ++b)
                o.expect(sn.inner(rows[a], rows[b]) == (a == b ? 1 : 0), [&] { return "orthogonality, n = " + std::to_string(n); });
    }
    return o;
}

Outcome series_bridges() {
    Outcome o;
    for (int n = 1; n <= 8; ++n)
        for (const auto& g : partitions_of(n)) {
            DeltaSeries s = scaled_invariant_series(g, 2);
            o.expect(s[1] == classical_eigenvalue(g, 2), [&] { return "first-order term for " + g.to_string(); });
            o.expect(2 * s[2] == classical_eigenvalue(g, 3) + n * (n - 1) / 2,
                     [&] { return "second-order term for " + g.to_string(); });
        }
    for (int N = 2; N <= 6; ++N)
        for (int n = 0; n <= 12; ++n)
            for (const auto& g : n == 0 ? std::vector<Partition>{Partition()} : partitions_of(n)) {
                if (g.rows() > N - 1) continue;
                DeltaSeries s = casimir_delta_series(g, N, 2);
                Rational sum = 0, squares = 0;
                for (int k = 1; k <= N - 1; ++k) {
                    const int L = g.row(k - 1) - k;
                    sum += L;
                    squares += L * L;
                }
                o.expect(s[1] == 2 * sum && s[2] == 2 * squares,
                         [&] { return "Casimir series for " + g.to_string() + ", N = " + std::to_string(N); });
            }
    return o;
}

Outcome casimir_relation() {
    Outcome o;
    for (int N = 2; N <= 5; ++N)
        for (int n = 1; n <= 8; ++n)
            for (const auto& g : partitions_of(n)) {
                if (g.rows() > N - 1) continue;
                CasimirRelation r = hecke_casimir_relation_check(g, N);
                o.expect(r.holds, [&] {
                    return g.to_string() + ", N = " + std::to_string(N) + ": " + r.lhs.to_string() + " vs " + r.rhs.to_string();
                });
            }
    return o;
}

Outcome casimir_decoder() {
    Outcome o;
    for (int N = 2; N <= 6; ++N)
        for (int n = 0; n <= 12; ++n)
            for (const auto& g : n == 0 ? std::vector<Partition>{Partition()} : partitions_of(n)) {
                if (g.rows() > N - 1) continue;
                o.expect(decode_spectrum(casimir_eigenvalue(g, N), N) == g,
                         [&] { return "round trip for " + g.to_string() + ", N = " + std::to_string(N); });
            }
    const std::vector<std::pair<const char*, int>> malformed{
        {"q^2+q^2", 3}, {"2*q^2", 2}, {"q", 2}, {"q^2+1", 2}, {"q^2", 3}, {"q^-4", 2}, {"q+1", 2}};
    for (const auto& [text, N] : malformed) {
        bool rejected = false;
        try {
            decode_spectrum(P(text), N);
        } catch (const MalformedSpectrum&) {
            rejected = true;
        }
        o.expect(rejected, [&] { return std::string(text) + " was accepted"; });
    }
    BlockDecoding blocks = decode_blocks({LaurentPoly(1), LaurentPoly::q(2), P("q+1")}, 2);
    o.expect(blocks.errors.size() == 1 && blocks.errors[0].first == 2 && *blocks.diagrams[1] == Partition({2}),
             [] { return "block decoding"; });
    return o;
}

Outcome projections() {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        std::vector<RationalFunction> sum;
        for (const auto& g : parts) {
            auto c = projection_coefficients(n, g);
            sum.resize(c.size());
            for (std::size_t k = 0; k < c.size(); ++k) sum[k] = (sum[k] + c[k]).reduced();
        }
        o.expect(sum[0] == RationalFunction(1), [&] { return "constant term, n = " + std::to_string(n); });
        for (std::size_t k = 1; k < sum.size(); ++k)
            o.expect(sum[k].is_zero(), [&] { return "partition of unity, n = " + std::to_string(n); });
        if (n > 5) continue;
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b) {
                VerificationReport r = verify_projection(parts[a], parts[b]);
                o.expect(r.all_passed(), [&] { return r.first_failure()->identity; });
            }
    }
    return o;
}

/// Random standard word whose runs have the given letter counts, in a random
/// order, separated by random gaps of at least one index.
GWord random_standard_word(std::vector<int> runs, int n, std::mt19937& rng) {
    std::shuffle(runs.begin(), runs.end(), rng);
    int used = 0;
    for (int r : runs) used += r;
    used += static_cast<int>(runs.size()) - 1;
    std::vector<int> gaps(runs.size() + 1, 0);
    for (int slack = n - 1 - used; slack > 0; --slack)
        ++gaps[std::uniform_int_distribution<std::size_t>(0, gaps.size() - 1)(rng)];
    GWord w;
    int next = 1 + gaps[0];
    for (std::size_t i = 0; i < runs.size(); ++i) {
        w += run_word(next, next + runs[i] - 1);
        next += runs[i] + 1 + gaps[i + 1];
    }
    return w;
}

Outcome fundamental_lemma() {
    Outcome o;
    std::mt19937 rng(20261018);
    for (int n = 2; n <= 6; ++n) {
        std::vector<IrrepMatrices> irreps;
        for (const auto& g : partitions_of(n)) irreps.push_back(build_irrep(g));
        const auto classes = partitions_of(n);
        for (int t = 0; t < 200; ++t) {
            const Partition mu = classes[std::uniform_int_distribution<std::size_t>(0, classes.size() - 1)(rng)];
            std::vector<int> runs;
            const Partition cycles = mu.without_ones();
            for (int p : cycles.parts()) runs.push_back(p - 1);
            const GWord a = random_standard_word(runs, n, rng), b = random_standard_word(runs, n, rng);
            o.expect(is_standard(a) && is_standard(b) && segment_shape(a) == segment_shape(b),
                     [&] { return "generator produced " + a.to_string() + " / " + b.to_string(); });
            for (const auto& m : irreps) {
                o.expect(word_trace(m, a) == word_trace(m, b),
                         [&] { return a.to_string() + " vs " + b.to_string() + " in " + m.shape.to_string(); });
                o.expect(reduce_word_trace(m.shape, a) == word_trace(m, a),
                         [&] { return "pipeline trace of " + a.to_string() + " in " + m.shape.to_string(); });
            }
        }
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"fundamental invariant eigenvalues of [4,1,1] and [3,3]", eigenvalue_examples},
        {"eigenvalue injectivity and reconstruction up to n = 12", injectivity},
        {"matrix representations satisfy the defining relations up to n = 6", oracle_relations},
        {"class characters equal matrix traces up to n = 6", pipeline_equality},
        {"q = 1 table equals the symmetric group table up to n = 5", classical_limit},
        {"low-order series coefficients", series_bridges},
        {"fundamental invariant and quantum Casimir relation", casimir_relation},
        {"Casimir spectrum decoding", casimir_decoder},
        {"projection operators", projections},
        {"equal cycle types give equal traces (200 random pairs per n)", fundamental_lemma},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu: %s  %s (%.2f s)%s%s\n", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    secs, o.passed ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
