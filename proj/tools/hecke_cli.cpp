// SPDX-License-Identifier: Apache-2.0
//
// hecke: character tables, eigenvalue reports, Casimir decoding and oracle
// verification for the Hecke algebra H_n(q).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hecke/hecke.hpp"
#include "hecke/io.hpp"

namespace {

using namespace hecke;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultLimit = 10;
constexpr const char* kOutputDirEnv = "HECKE_OUTPUT_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "json";
    std::string path;
};

/// Writes to --out, else into $HECKE_OUTPUT_DIR/<default_name>, else stdout.
void emit(const Output& out, const std::string& default_name, const std::string& text) {
    std::string path = out.path;
    if (path.empty()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir)
            path = (std::filesystem::path(dir) / default_name).string();
    }
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_n(int n, int limit) {
    if (n < 1) throw UsageError("n must be at least 1");
    if (n > limit) throw UsageError("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit) +
                                    " (raise it with --limit)");
}

int cmd_characters(int n, const Output& out, int limit) {
    check_n(n, limit);
    CharacterTable t = character_table(n);
    for (std::size_t r = 0; r < t.irreps.size(); ++r) {
        if (t.entries[r].back() != LaurentPoly(Rational(dimension(t.irreps[r])))) {
            std::cerr << "identity column of " << t.irreps[r] << " is not the dimension\n";
            return kExitVerifyFailed;
        }
    }
    const std::string name = "characters_" + std::to_string(n) + "." + out.format;
    emit(out, name, out.format == "csv" ? to_csv(t) : dump(to_json(t)));
    return kExitOk;
}

int cmd_eigenvalues(int n, const Output& out) {
    if (n < 1) throw UsageError("n must be at least 1");
    const auto parts = partitions_of(n);
    std::map<std::string, std::vector<std::string>> generic; // canonical text is unique
    std::map<Rational, std::vector<std::string>> classical;
    Json rows = Json::array();
    std::string csv = "partition,eigenvalue,value_at_1\n";
    for (const auto& g : parts) {
        const LaurentPoly v = fundamental_eigenvalue(g);
        const Rational at1 = v.coefficient_sum();
        generic[v.to_string()].push_back(g.to_string());
        classical[at1].push_back(g.to_string());
        rows.push_back(Json{{"partition", g.to_string()},
                            {"eigenvalue", to_json(v)},
                            {"text", v.to_string()},
                            {"value_at_1", rational_to_text(at1)}});
        csv += "\"" + g.to_string() + "\"," + v.to_string() + "," + rational_to_text(at1) + "\n";
    }
    auto collisions = [&](const auto& groups) {
        Json c = Json::array();
        for (const auto& g : parts) {
            for (const auto& [key, members] : groups) {
                if (members.size() > 1 && members.front() == g.to_string()) c.push_back(members);
            }
        }
        return c;
    };
    Json j{{"n", n},
           {"eigenvalues", std::move(rows)},
           {"collisions", Json{{"generic_q", collisions(generic)}, {"q_equals_1", collisions(classical)}}}};
    const std::string name = "eigenvalues_" + std::to_string(n) + "." + out.format;
    emit(out, name, out.format == "csv" ? csv : dump(j));
    return kExitOk;
}

int cmd_verify(int n, const Output& out, int limit, bool inject_fault) {
    check_n(n, limit);
    VerifyOptions opts;
    opts.inject_fault = inject_fault;
    VerificationReport report = verify_all(n, opts);
    emit(out, "verify_" + std::to_string(n) + ".json", dump(to_json(report)));
    if (const CheckResult* bad = report.first_failure()) {
        std::cerr << "verification failed: " << bad->identity;
        if (!bad->detail.empty()) std::cerr << " (" << bad->detail << ")";
        std::cerr << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_casimir(int N, const std::string& partition, const std::string& decode, int order, const Output& out) {
    if (N < 2) throw UsageError("N must be at least 2");
    if (!decode.empty()) {
        LaurentPoly v;
        Partition g;
        try {
            v = LaurentPoly::parse(decode);
            g = decode_spectrum(v, N);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        } catch (const MalformedSpectrum& e) {
            throw UsageError(e.what());
        }
        emit(out, "casimir_decode.json", dump(Json{{"N", N}, {"spectrum", v.to_string()}, {"partition", g.to_string()}}));
        return kExitOk;
    }
    if (partition.empty()) throw UsageError("casimir needs a partition or --decode");
    if (order < 0) throw UsageError("--order must be nonnegative");
    Partition g;
    try {
        g = Partition::parse(partition);
        casimir_eigenvalue(g, N);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const LaurentPoly v = casimir_eigenvalue(g, N);
    const CasimirRelation rel = hecke_casimir_relation_check(g, N);
    Json j{{"N", N},
           {"partition", g.to_string()},
           {"eigenvalue", to_json(v)},
           {"text", v.to_string()},
           {"series", to_json(casimir_delta_series(g, N, order))},
           {"relation", to_json(rel)}};
    emit(out, "casimir.json", dump(j));
    return rel.holds ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters and invariants of the Hecke algebra H_n(q)"};
    app.require_subcommand(1);

    Output out;
    int limit = kDefaultLimit;
    int order = 2;
    auto add_output = [&](CLI::App* sub, bool with_format) {
        if (with_format)
            sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out.path, "Output file (default: stdout, or $HECKE_OUTPUT_DIR)");
    };

    int n = 0;
    auto* characters = app.add_subcommand("characters", "Character table of H_n(q)");
    characters->add_option("n", n, "Size n")->required();
    characters->add_option("--limit", limit, "Largest n accepted");
    add_output(characters, true);

    auto* eigenvalues = app.add_subcommand("eigenvalues", "Eigenvalues of C_n with collision report");
    eigenvalues->add_option("n", n, "Size n")->required();
    add_output(eigenvalues, true);

    int verify_n = 6;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "Check everything against the matrix oracle");
    verify->add_option("n", verify_n, "Size n");
    verify->add_option("--limit", limit, "Largest n accepted");
    verify->add_flag("--inject-fault", inject_fault, "Perturb one generator matrix (the run must fail)");
    add_output(verify, false);

    int N = 0;
    std::string partition, decode;
    auto* casimir = app.add_subcommand("casimir", "SU_q(N) Casimir eigenvalue, series and relation check");
    casimir->add_option("N", N, "Rank parameter N")->required();
    casimir->add_option("partition", partition, "Diagram, e.g. [2,1]");
    casimir->add_option("--decode", decode, "Recover the diagram from an eigenvalue polynomial");
    casimir->add_option("--order", order, "Series truncation order");
    add_output(casimir, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (limit != kDefaultLimit)
        std::cerr << "warning: size limit changed from " << kDefaultLimit << " to " << limit
                  << "; large n may take very long\n";

    try {
        if (*characters) return cmd_characters(n, out, limit);
        if (*eigenvalues) return cmd_eigenvalues(n, out);
        if (*verify) return cmd_verify(verify_n, out, limit, inject_fault);
        if (*casimir) return cmd_casimir(N, partition, decode, order, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hecke::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
