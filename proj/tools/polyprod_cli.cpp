// polyprod: analyze and verify wedge decompositions of polyhedral products
// over shifted complexes, with integer homology and Lie-algebra oracles.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyprod/corpus.hpp"
#include "polyprod/decomposition.hpp"
#include "polyprod/graded_lie.hpp"
#include "polyprod/json_io.hpp"
#include "polyprod/sign_polynomial.hpp"
#include "polyprod/whitehead.hpp"

using nlohmann::json;
using namespace polyprod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

struct CommonOpts {
    std::string input_path;
    std::string inline_complex;
    std::string spheres;
    std::string format = "human";
    std::uint64_t seed = 0;
    std::size_t size = 0;
    int m = 0;
    int max_m = kMaxVertices;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--input", opts.input_path, "path to a complex in the interchange format");
    cmd->add_option("--inline", opts.inline_complex, "inline complex, e.g. '{\"m\":3,\"facets\":[[1,2]]}'");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"human", "structured"}));
    cmd->add_option("--max-m", opts.max_m, "guard on the ambient vertex count");
}

SimplicialComplex load_complex(const CommonOpts& opts) {
    json j;
    if (!opts.inline_complex.empty()) {
        j = json::parse(opts.inline_complex);
    } else if (!opts.input_path.empty()) {
        std::ifstream in(opts.input_path);
        if (!in) throw std::invalid_argument("cannot open " + opts.input_path);
        in >> j;
    } else {
        throw std::invalid_argument("no complex given (use --input or --inline)");
    }
    return complex_from_json(j);
}

SphereAssignment load_spheres(const CommonOpts& opts, int m) {
    if (opts.spheres.empty()) return SphereAssignment::constant(m, 1);
    SphereAssignment X;
    std::stringstream ss(opts.spheres);
    std::string tok;
    while (std::getline(ss, tok, ',')) X.n.push_back(std::stoi(tok));
    if (X.size() != m) throw std::invalid_argument("--spheres needs one entry per vertex");
    X.validate();
    return X;
}

void emit(const CommonOpts& opts, const json& report, const std::string& human) {
    if (opts.format == "structured")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

int run_analyze(const CommonOpts& opts) {
    SimplicialComplex K;
    try {
        K = load_complex(opts);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (K.ambient_vertices() > opts.max_m) {
        std::cerr << "guard: m exceeds --max-m\n";
        return kExitGuard;
    }
    SphereAssignment X;
    try {
        X = load_spheres(opts, K.ambient_vertices());
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    json report;
    report["complex"] = complex_to_json(K);
    report["shifted"] = K.is_shifted();
    std::ostringstream human;
    human << "complex: " << complex_to_json(K).dump() << "\n";
    human << "shifted: " << (K.is_shifted() ? "yes" : "no") << "\n";
    const int m = K.ambient_vertices();
    json table = json::array();
    for (Face I = 1; I < (Face{1} << m); ++I) {
        auto mnf = minimal_nonfaces_max(K.induced(I), face_max_vertex(I));
        if (mnf.empty()) continue;
        json row{{"I", face_to_json(I)}, {"mnf", json::array()}};
        for (Face F : mnf) row["mnf"].push_back(face_to_json(F));
        table.push_back(row);
    }
    report["mnf_table"] = table;
    if (K.is_shifted()) {
        json summands = json::array(), exprs = json::array();
        for (const auto& [s, e] : full_pinch_map(K, X)) {
            summands.push_back(summand_to_json(s, X));
            exprs.push_back(expr_to_json(e, m));
            human << "summand I=" << face_to_json(s.I).dump() << " F=" << face_to_json(s.F).dump()
                  << " dim=" << summand_dimension(s, X) << "  " << render_expr(e) << "\n";
        }
        report["summands"] = summands;
        report["expressions"] = exprs;
    } else {
        report["note"] = "complex is not shifted; the wedge decomposition does not apply";
        human << "note: complex is not shifted; the wedge decomposition does not apply\n";
    }
    emit(opts, report, human.str());
    return kExitOk;
}

json verify_one(const SimplicialComplex& K, std::uint64_t seed, bool corrupt, bool& all_ok) {
    json entry;
    entry["complex"] = complex_to_json(K);
    entry["shifted"] = K.is_shifted();
    if (!K.is_shifted()) {
        // Nothing the decomposition theorems claim; cross-check the Hochster
        // profile against a Euler-characteristic count only.
        auto profile = hochster_cross_check(K);
        long long chi = 0;
        const int m = K.ambient_vertices();
        for (Face I = 1; I < (Face{1} << m); ++I) {
            long long sub = 0;
            auto KI = K.induced(I);
            for (Face f : KI.faces())
                if (f != 0) sub += face_card(f) % 2 == 1 ? 1 : -1;
            // reduced Euler characteristic of K_I, shifted by |I| + 1
            chi += (face_card(I) % 2 == 1 ? 1 : -1) * (sub - 1);
        }
        bool ok = profile.euler_characteristic() == chi;
        entry["euler_consistent"] = ok;
        entry["note"] = "not shifted; only the Euler cross-check applies";
        all_ok = all_ok && ok;
        return entry;
    }
    auto report = verify_wedge_equivalence(K);
    if (corrupt && !report.per_subset.empty()) {
        report.per_subset.front().rhs.groups[0].betti += 1;
        report.per_subset.front().ok =
            report.per_subset.front().lhs == report.per_subset.front().rhs;
        report.ok = std::all_of(report.per_subset.begin(), report.per_subset.end(),
                                [](const PerSubsetCheck& c) { return c.ok; });
    }
    entry["wedge"] = wedge_report_to_json(report);
    const int m = K.ambient_vertices();
    auto ones = SphereAssignment::constant(m, 1);
    bool hochster_ok = total_homology(K, ones) == hochster_cross_check(K);
    entry["hochster_agrees"] = hochster_ok;
    // Degree bookkeeping across a family of sphere assignments.
    bool degrees_ok = true;
    std::vector<SphereAssignment> assignments{ones, SphereAssignment::constant(m, 2),
                                              SphereAssignment::constant(m, 3)};
    std::uint64_t state = seed ^ 0x5bf03635ULL;
    for (int t = 0; t < 3; ++t) {
        SphereAssignment X;
        for (int v = 0; v < m; ++v) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            X.n.push_back(1 + static_cast<int>(state >> 33 & 3) % 3);
        }
        assignments.push_back(std::move(X));
    }
    for (const auto& X : assignments)
        for (const auto& [s, e] : full_pinch_map(K, X))
            if (degree_of(e, X) != summand_dimension(s, X)) degrees_ok = false;
    entry["degrees_consistent"] = degrees_ok;
    bool ok = report.ok && hochster_ok && degrees_ok;
    entry["ok"] = ok;
    all_ok = all_ok && ok;
    return entry;
}

int run_verify(const CommonOpts& opts, bool corrupt) {
    std::vector<SimplicialComplex> corpus;
    if (!opts.inline_complex.empty() || !opts.input_path.empty()) {
        try {
            corpus.push_back(load_complex(opts));
        } catch (const std::exception& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return kExitInputError;
        }
    } else if (opts.m > 0) {
        if (opts.m > opts.max_m || opts.m > kMaxVertices) {
            std::cerr << "guard: m exceeds --max-m\n";
            return kExitGuard;
        }
        corpus = random_shifted_corpus(opts.m, opts.size ? opts.size : 100, opts.seed);
    } else {
        std::cerr << "input error: give a complex or a corpus spec (--m/--size/--seed)\n";
        return kExitInputError;
    }
    for (const auto& K : corpus)
        if (K.ambient_vertices() > opts.max_m) {
            std::cerr << "guard: m exceeds --max-m\n";
            return kExitGuard;
        }
    bool all_ok = true;
    json entries = json::array();
    for (const auto& K : corpus) entries.push_back(verify_one(K, opts.seed, corrupt, all_ok));
    json report{{"count", corpus.size()}, {"entries", entries}, {"ok", all_ok}};
    std::ostringstream human;
    human << "verified " << corpus.size() << " complex(es)\n";
    for (const auto& e : entries)
        human << "  " << e["complex"]["facets"].dump() << " -> "
              << (e.value("ok", e.value("euler_consistent", false)) ? "pass" : "FAIL") << "\n";
    human << (all_ok ? "all pass\n" : "FAILURES present\n");
    emit(opts, report, human.str());
    return all_ok ? kExitOk : kExitVerifyFail;
}

int run_jacobi(const CommonOpts& opts, const ProofCheckOptions& proof_opts, bool mutate_dict) {
    if (opts.m != 0 && opts.m < 3) {
        std::cerr << "input error: the Jacobi identity needs m >= 3\n";
        return kExitInputError;
    }
    const int m = opts.m == 0 ? 3 : opts.m;
    json report;
    auto sum = jacobi_sum(m);
    json terms = json::array();
    std::ostringstream human;
    human << "jacobi identity, m = " << m << ":\n";
    for (const auto& [coeff, e] : sum.terms) {
        json t = expr_to_json(e, m);
        t["coefficient"] = coeff;
        terms.push_back(t);
        human << "  " << (coeff > 0 ? "+" : "-") << " " << render_expr(e) << "\n";
    }
    report["m"] = m;
    report["terms"] = terms;
    bool proof_ok = corollary_proof_check(proof_opts);
    report["proof_check"] = proof_ok;
    json residuals = json::array();
    bool residuals_ok = true;
    for (int p = 2; p <= 8; ++p)
        for (int q = 2; q <= 8; ++q)
            for (int r = 2; r <= 8; ++r) {
                bool zero = whitehead_jacobi_residual(p, q, r, !mutate_dict).zero();
                residuals.push_back(json{{"pqr", {p, q, r}}, {"residual_zero", zero}});
                residuals_ok = residuals_ok && zero;
            }
    report["residuals"] = residuals;
    bool ok = proof_ok && residuals_ok;
    report["ok"] = ok;
    human << "proof arithmetic: " << (proof_ok ? "pass" : "FAIL") << "\n";
    human << "residual sweep 2..8: " << (residuals_ok ? "pass" : "FAIL") << "\n";
    emit(opts, report, human.str());
    return ok ? kExitOk : kExitVerifyFail;
}

int run_generate(const CommonOpts& opts, const std::string& output_path) {
    if (opts.m < 1 || opts.m > kMaxVertices || opts.m > opts.max_m) {
        std::cerr << "guard: m out of range\n";
        return kExitGuard;
    }
    auto corpus = random_shifted_corpus(opts.m, opts.size, opts.seed);
    json complexes = json::array();
    for (const auto& K : corpus) complexes.push_back(complex_to_json(K));
    json report{{"m", opts.m}, {"seed", opts.seed}, {"size", corpus.size()},
                {"complexes", complexes}};
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        out << report.dump(2) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wedge decompositions of polyhedral products over shifted complexes"};
    app.require_subcommand(1);

    CommonOpts analyze_opts, verify_opts, jacobi_opts, generate_opts;
    bool corrupt = false, mutate_dict = false;
    ProofCheckOptions proof_opts;
    std::string output_path;

    auto* analyze = app.add_subcommand("analyze", "decomposition and pinch-map report");
    add_common(analyze, analyze_opts);
    analyze->add_option("--spheres", analyze_opts.spheres, "comma list of sphere dimensions");

    auto* verify = app.add_subcommand("verify", "run the homology verification suites");
    add_common(verify, verify_opts);
    verify->add_option("--seed", verify_opts.seed, "corpus seed");
    verify->add_option("--size", verify_opts.size, "corpus size");
    verify->add_option("--m", verify_opts.m, "corpus vertex count");
    verify->add_flag("--corrupt", corrupt, "test hook: corrupt one expected profile")
        ->group("");

    auto* jacobi = app.add_subcommand("jacobi", "Jacobi identities and sign checks");
    add_common(jacobi, jacobi_opts);
    jacobi->add_option("--m", jacobi_opts.m, "number of terms (>= 3)");
    jacobi->add_flag("--mutate-antisym", proof_opts.flip_antisymmetry_sign,
                     "test hook: flip the antisymmetry rewrite sign")
        ->group("");
    jacobi->add_flag("--mutate-mult", proof_opts.drop_multiplier,
                     "test hook: drop the (-1)^{pr} multiplier")
        ->group("");
    jacobi->add_flag("--mutate-dict", mutate_dict,
                     "test hook: drop the desuspension dictionary sign")
        ->group("");

    auto* generate = app.add_subcommand("generate", "emit a seeded corpus of shifted complexes");
    add_common(generate, generate_opts);
    generate->add_option("--seed", generate_opts.seed, "corpus seed");
    generate->add_option("--size", generate_opts.size, "corpus size");
    generate->add_option("--m", generate_opts.m, "vertex count")->required();
    generate->add_option("--output", output_path, "output file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(analyze_opts);
        if (verify->parsed()) return run_verify(verify_opts, corrupt);
        if (jacobi->parsed()) return run_jacobi(jacobi_opts, proof_opts, mutate_dict);
        if (generate->parsed()) return run_generate(generate_opts, output_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
