// pathpower: command-line front end for the P_m^k toolkit.
//
// Exit codes: 0 success / all checks pass, 1 check failure or runtime error,
// 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathpower/constructions.hpp"
#include "pathpower/grid.hpp"
#include "pathpower/report.hpp"
#include "pathpower/search.hpp"
#include "pathpower/signed_matrix.hpp"
#include "pathpower/spectral.hpp"

namespace {

using nlohmann::json;
using namespace pathpower;

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Globals {
    Rank size_cap = kDefaultSizeCap;
    double tol = kGroupTol;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format = "json";
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot open output file '" + g.out + "'");
    f << text;
}

void emit_json(const Globals& g, const json& j) {
    if (g.format != "json") throw usage_error("this command only supports --format json");
    emit(g, j.dump(2) + "\n");
}

json spectrum_json(const SpectrumReport& s) {
    json j{{"eigenvalues", s.eigenvalues}, {"zero_multiplicity", s.zero_multiplicity}};
    j["min_positive"] = s.min_positive ? json(*s.min_positive) : json(nullptr);
    return j;
}

std::vector<Rank> ranks_of(const std::optional<VertexSet>& s) {
    return s ? s->ranks() : std::vector<Rank>{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence numbers, witness sets, signed spectra and f(P_m^k) for Cartesian path powers"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--size-cap", g.size_cap, "Maximum number of vertices m^k")->check(CLI::PositiveNumber);
    app.add_option("--tol", g.tol, "Comparison / grouping tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized checks");
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    // construct
    auto* construct = app.add_subcommand("construct", "Build V_k, its complement, X_k or its complement");
    std::string kind;
    int cm = 0, ck = 0;
    construct->add_option("--kind", kind, "vk|vkc|xk|xkc")->required()->check(CLI::IsMember({"vk", "vkc", "xk", "xkc"}));
    construct->add_option("--m", cm, "Path length")->required();
    construct->add_option("--k", ck, "Number of factors")->required();

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Write the signed matrix A_k in Matrix Market format");
    std::string parity;
    int mn = 1, mk = 0;
    matrix->add_option("--parity", parity, "odd3|even")->required()->check(CLI::IsMember({"odd3", "even"}));
    matrix->add_option("--n", mn, "Half path length for the even family");
    matrix->add_option("--k", mk, "Order")->required();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of A_k");
    std::string sparity;
    int sn = 1, sk = 0;
    bool compose = false, dense = false;
    spectrum->add_option("--parity", sparity, "odd3|even")->required()->check(CLI::IsMember({"odd3", "even"}));
    spectrum->add_option("--n", sn, "Half path length for the even family");
    spectrum->add_option("--k", sk, "Order")->required();
    spectrum->add_flag("--compose", compose, "Compose the spectrum recursively instead of a dense solve");
    spectrum->add_flag("--dense", dense, "Dense solve (default); with --compose prints both");

    // beta
    auto* beta_cmd = app.add_subcommand("beta", "Smallest positive root of g_n");
    int bn = 0;
    double btol = 1e-12;
    beta_cmd->add_option("--n", bn, "Index n")->required()->check(CLI::PositiveNumber);
    beta_cmd->add_option("--tol", btol, "Root tolerance")->check(CLI::PositiveNumber);

    // alpha
    auto* alpha = app.add_subcommand("alpha", "Independence number of P_m^k");
    int am = 0, ak = 0;
    bool abrute = false;
    alpha->add_option("--m", am, "Path length")->required();
    alpha->add_option("--k", ak, "Number of factors")->required();
    alpha->add_flag("--brute", abrute, "Confirm by exact branch-and-bound search");

    // f
    auto* fcmd = app.add_subcommand("f", "Minimum induced maximum degree over (alpha+s)-subsets");
    int fm = 0, fk = 0, fs = 1;
    bool fbrute = false, no_spectral_exit = false;
    SearchBudget budget;
    fcmd->add_option("--m", fm, "Path length")->required();
    fcmd->add_option("--k", fk, "Number of factors")->required();
    fcmd->add_option("--s", fs, "Subset size excess over alpha")->check(CLI::PositiveNumber);
    fcmd->add_flag("--brute", fbrute, "Exact search instead of the closed-form value");
    fcmd->add_option("--workers", budget.workers, "Search threads")->check(CLI::PositiveNumber);
    fcmd->add_option("--max-subsets", budget.max_subsets, "Enumeration cap");
    fcmd->add_option("--max-seconds", budget.max_seconds, "Time cap")->check(CLI::PositiveNumber);
    fcmd->add_flag("--no-spectral-exit", no_spectral_exit,
                   "Do not stop early at the spectral lower bound (even m)");

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "Run every verification check");
    VerifyOptions vopts;
    verify->add_option("--max-size", vopts.max_size, "Largest instance (vertices)")->check(CLI::PositiveNumber);
    verify->add_option("--workers", vopts.workers, "Search threads")->check(CLI::PositiveNumber);

    // export-table
    auto* table = app.add_subcommand("export-table", "Tables of f bounds, beta_n or alpha");
    std::string tkind;
    int from = 1, to = 1, kfrom = 1, kto = 1;
    table->add_option("--kind", tkind, "bounds|beta|alpha")->required()->check(CLI::IsMember({"bounds", "beta", "alpha"}));
    table->add_option("--from", from, "First m (bounds, alpha) or n (beta)")->required();
    table->add_option("--to", to, "Last m (bounds, alpha) or n (beta)")->required();
    table->add_option("--k-from", kfrom, "First k");
    table->add_option("--k-to", kto, "Last k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*construct) {
            const VertexSet s = build({cm, ck, parse_construction_kind(kind)}, g.size_cap);
            json j = to_json(s);
            j["kind"] = kind;
            j["size"] = s.size();
            j["induced_max_degree"] = s.empty() ? 0 : induced_max_degree(s);
            emit_json(g, j);
        } else if (*matrix) {
            if (g.format != "json") throw usage_error("matrix writes Matrix Market only");
            const SignedMatrix a = build_ak(parse_parity(parity), mn, mk, g.size_cap);
            std::ostringstream os;
            write_matrix_market(os, a);
            emit(g, os.str());
        } else if (*spectrum) {
            const Parity p = parse_parity(sparity);
            std::optional<SpectrumReport> d, c;
            if (dense || !compose) d = eigenvalues_sym(build_ak(p, sn, sk, g.size_cap), {.group_tol = g.tol});
            if (compose) {
                (void)build_ak(p, sn, 1, g.size_cap).graph().with_k(sk);
                c = p == Parity::Odd3 ? composed_spectrum_odd3(sk, g.tol) : composed_spectrum_even(sn, sk, g.tol);
            }
            json j;
            if (d && c) {
                j = {{"dense", spectrum_json(*d)}, {"composed", spectrum_json(*c)},
                     {"multiset_distance", multiset_distance(*d, *c)}};
            } else {
                j = spectrum_json(d ? *d : *c);
            }
            emit_json(g, j);
        } else if (*beta_cmd) {
            emit_json(g, {{"n", bn}, {"beta", beta(bn, btol)}, {"tol", btol}});
        } else if (*alpha) {
            const PathPower graph(am, ak, g.size_cap);
            json j{{"m", am}, {"k", ak}, {"alpha", alpha_formula(am, ak)}, {"kind", "formula"}};
            if (abrute) {
                const MisResult r = max_independent_set(graph);
                j["search"] = {{"alpha", r.size},
                               {"proven_optimal", r.proven_optimal},
                               {"witness", r.witness.ranks()},
                               {"nodes", r.nodes}};
            }
            emit_json(g, j);
        } else if (*fcmd) {
            const PathPower graph(fm, fk, g.size_cap);
            const TheoremValue t = f_value_theorem(fm, fk);
            json j{{"m", fm}, {"k", fk}, {"s", fs}, {"seed", g.seed}};
            j["theorem"] = {{"value", t.value}, {"kind", to_string(t.kind)}};
            if (fbrute) {
                const FResult r = brute_force_f(graph, fs, budget, {.spectral_early_exit = !no_spectral_exit});
                j["value"] = r.value ? json(*r.value) : json(nullptr);
                j["kind"] = to_string(r.kind);
                j["witness"] = ranks_of(r.witness);
                j["subsets_examined"] = r.subsets_examined;
                j["early_exit"] = r.early_exit;
            } else {
                if (fs != 1) throw usage_error("--s other than 1 requires --brute");
                j["value"] = t.value;
                j["kind"] = to_string(t.kind);
                j["witness"] = json::array();
                if (fm % 2 == 1) j["witness"] = build_xk((fm - 1) / 2, fk, g.size_cap).ranks();
                j["subsets_examined"] = 0;
            }
            emit_json(g, j);
        } else if (*verify) {
            vopts.tol = g.tol;
            vopts.seed = g.seed;
            const Report r = run_verify_all(vopts);
            emit(g, g.format == "csv" ? r.to_csv() : r.to_json().dump(2) + "\n");
            for (const auto& c : r.checks) {
                std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name
                          << (c.error.empty() ? "" : " (" + c.error + ")") << '\n';
            }
            return r.pass() ? 0 : 1;
        } else if (*table) {
            const json rows = export_table(parse_table_kind(tkind), {from, to}, {kfrom, kto}, g.size_cap);
            emit(g, g.format == "csv" ? table_to_csv(rows) : rows.dump(2) + "\n");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
