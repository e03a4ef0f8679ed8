#include <chrono>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "dca/errors.hpp"
#include "dca/gen.hpp"
#include "dca/graph.hpp"
#include "dca/grid.hpp"
#include "dca/json_io.hpp"
#include "dca/mcmf.hpp"
#include "dca/poset.hpp"
#include "dca/report.hpp"
#include "dca/semilattice.hpp"
#include "dca/zeroext.hpp"

using namespace dca;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Exactly one report per run, on stdout; exit status mirrors report.status.
int emit(RunReport& r, const Timer& t, bool as_json) {
    finalize_status(r);
    r.elapsed_ms = t.ms();
    if (as_json)
        std::cout << report_to_json(r).dump(2) << "\n";
    else
        std::cout << report_to_text(r);
    return r.status;
}

int cmd_mcmf_solve(const std::string& file, bool verify, std::optional<long long> dual_radius,
                   bool as_json) {
    Timer t;
    MultiflowInstance inst = mcmf_from_json(load_json_file(file));
    RunReport r;
    r.command = "mcmf solve";
    r.instance_digest = fnv1a_hex(mcmf_to_json(inst).dump());
    McmfResult sol = solve_mcmf(inst);
    if (sol.status != 0) {
        r.status = 1;
        r.message = sol.message;
        return emit(r, t, as_json);
    }
    r.payload = mcmf_solution_to_json(sol);
    if (verify) {
        VerifyReport vr = verify_optimality(inst, sol.flow, sol.potential);
        if (vr.ok())
            r.verifications.push_back("optimality certificate: ok");
        else
            for (const std::string& v : vr.violations)
                r.verifications.push_back("optimality certificate: FAILED (" + v + ")");
    }
    if (dual_radius) {
        DualScan scan = dual_brute_force(inst, *dual_radius);
        r.payload["dual_minimum"] = scan.best.str();
        bool match = -scan.best == sol.cost;
        r.verifications.push_back(std::string("exhaustive dual scan matches the cost: ") +
                                  (match ? "ok" : "FAILED (radius " +
                                                      std::to_string(*dual_radius) +
                                                      " scan found " + scan.best.str() + ")"));
    }
    return emit(r, t, as_json);
}

int cmd_zeroext_solve(const std::string& file, bool brute, bool as_json) {
    Timer t;
    ZeroExtInstance inst = zeroext_from_json(load_json_file(file));
    RunReport r;
    r.command = "zeroext solve";
    r.instance_digest = fnv1a_hex(zeroext_to_json(inst).dump());
    if (brute) {
        auto [argmin, value] = brute_force_solve(inst);
        r.payload["method"] = "exhaustive";
        r.payload["argmin"] = Json(argmin);
        r.payload["value"] = value.str();
        return emit(r, t, as_json);
    }
    auto res = sda_solve(inst);
    if (const auto* rej = std::get_if<ZeroExtRejection>(&res)) {
        r.status = 1;
        r.message = rej->reason +
                    "; exact minimization is intractable on such graphs, use --brute at desk scale";
        return emit(r, t, as_json);
    }
    const ZeroExtSolution& s = std::get<ZeroExtSolution>(res);
    r.payload["method"] = "steepest-descent";
    r.payload["argmin"] = Json(s.argmin);
    r.payload["value"] = s.value.str();
    r.payload["iterations"] = s.iterations;
    return emit(r, t, as_json);
}

template <class GridT>
void check_gridfn(const GridT& grid, const std::vector<ExtRat>& values, RunReport& r) {
    if ((long long)values.size() != grid.point_count())
        throw input_error("value table size does not match the grid point count");
    std::vector<long long> pts(values.size());
    std::iota(pts.begin(), pts.end(), 0LL);
    GridFunction fn(pts, values);
    bool chain = is_chain_connected(grid, fn);
    bool midpoint = is_lconvex(grid, fn);
    r.payload["points"] = grid.point_count();
    r.payload["chain_connected"] = chain;
    r.payload["midpoint_convex"] = midpoint;
    r.payload["lconvex"] = chain && midpoint;
    r.verifications.push_back(
        std::string("effective domain is chain-connected: ") +
        (chain ? "ok" : "FAILED (some pair of finite points admits no unit-step chain)"));
    r.verifications.push_back(
        std::string("discrete midpoint inequality: ") +
        (midpoint ? "ok" : "FAILED (some pair violates g(x)+g(y) >= g(mid)+g(mid))"));
}

int cmd_lconvex_verify(const std::string& file, bool as_json) {
    Timer t;
    GridFnFile f = gridfn_from_json(load_json_file(file));
    RunReport r;
    r.command = "lconvex verify";
    r.instance_digest = fnv1a_hex(gridfn_to_json(f).dump());
    if (f.h) {
        TwistedTreeGrid grid(ZigzagTree(f.g, f.black_g), ZigzagTree(*f.h, f.black_h), f.n);
        check_gridfn(grid, f.values, r);
    } else {
        TreeGrid grid(ZigzagTree(f.g, f.black_g), f.n);
        check_gridfn(grid, f.values, r);
    }
    return emit(r, t, as_json);
}

int cmd_semilattice_check(const std::string& file, bool as_json) {
    Timer t;
    Json doc = load_json_file(file);
    FinitePoset p = poset_from_json(doc);
    RunReport r;
    r.command = "semilattice check";
    std::string digest_src = poset_to_json(p).dump();
    if (doc.contains("values")) digest_src += doc["values"].dump();
    r.instance_digest = fnv1a_hex(digest_src);
    bool modular = is_modular_semilattice(p);
    r.payload["elements"] = p.size();
    r.payload["modular_semilattice"] = modular;
    r.verifications.push_back(
        std::string("modular meet-semilattice axioms: ") +
        (modular ? "ok" : "FAILED (missing meets, unbounded joinable triples, or rank defect)"));
    if (doc.contains("values")) {
        std::vector<ExtRat> table = table_from_json(doc);
        if ((int)table.size() != p.size())
            throw input_error("values table size does not match the element count");
        if (modular) {
            bool sub = is_submodular(ModularSemilattice(p), table);
            r.payload["submodular"] = sub;
            r.verifications.push_back(
                std::string("submodularity on fractional joins: ") +
                (sub ? "ok" : "FAILED (some pair violates f(p)+f(q) >= f(p meet q)+E[f(join)])"));
        } else {
            r.verifications.push_back(
                "submodularity on fractional joins: FAILED (requires a modular semilattice)");
        }
    }
    return emit(r, t, as_json);
}

int cmd_gen(const std::string& kind, std::uint64_t seed, const GenParams& params,
            const std::string& out) {
    Json j = generate_instance(kind, seed, params);
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json_file(out, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for discrete convex optimization on graph structures"};
    app.require_subcommand(1);

    auto* mcmf = app.add_subcommand("mcmf", "minimum-cost node-demand multiflow");
    mcmf->require_subcommand(1);
    auto* ms = mcmf->add_subcommand("solve", "solve an instance and print a report");
    std::string ms_file;
    bool ms_verify = false, ms_json = false, ms_text = false;
    long long ms_radius = 0;
    ms->add_option("file", ms_file, "instance JSON file")->required();
    ms->add_flag("--verify", ms_verify, "check the optimality certificate");
    CLI::Option* ms_dual =
        ms->add_option("--dual-brute", ms_radius, "exhaustive dual scan within this hop radius");
    CLI::Option* ms_jopt = ms->add_flag("--json", ms_json, "emit the report as JSON");
    ms->add_flag("--text", ms_text, "emit the report as plain text (default)")
        ->excludes(ms_jopt);

    auto* zx = app.add_subcommand("zeroext", "minimum 0-extension");
    zx->require_subcommand(1);
    auto* zs = zx->add_subcommand("solve", "solve an instance and print a report");
    std::string zs_file;
    bool zs_brute = false, zs_json = false;
    zs->add_option("file", zs_file, "instance JSON file")->required();
    zs->add_flag("--brute", zs_brute, "exhaustive assignment search instead of descent");
    zs->add_flag("--json", zs_json, "emit the report as JSON");

    auto* lc = app.add_subcommand("lconvex", "discrete convexity checks");
    lc->require_subcommand(1);
    auto* lv = lc->add_subcommand("verify", "verify a grid function table");
    std::string lv_file;
    bool lv_json = false;
    lv->add_option("file", lv_file, "grid function JSON file")->required();
    lv->add_flag("--json", lv_json, "emit the report as JSON");

    auto* sl = app.add_subcommand("semilattice", "order-theoretic checks");
    sl->require_subcommand(1);
    auto* sc = sl->add_subcommand("check", "check poset axioms and optional value table");
    std::string sc_file;
    bool sc_json = false;
    sc->add_option("file", sc_file, "poset JSON file, optionally with values")->required();
    sc->add_flag("--json", sc_json, "emit the report as JSON");

    auto* gn = app.add_subcommand("gen", "generate a deterministic instance");
    std::string gn_kind, gn_out;
    std::uint64_t gn_seed = 1;
    GenParams gn_params;
    gn->add_option("kind", gn_kind, "mcmf, zeroext, gridfn, or poset")->required();
    gn->add_option("--seed", gn_seed, "64-bit generator seed");
    gn->add_option("--n", gn_params.n, "size knob (nodes / variables / dimension)");
    gn->add_option("--k", gn_params.k, "terminal count (mcmf)");
    gn->add_option("--graph", gn_params.graph, "zeroext family: p4 k13 c4 grid33 q3 k3 k4");
    gn->add_option("--out", gn_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (ms->parsed())
            return cmd_mcmf_solve(
                ms_file, ms_verify,
                ms_dual->count() ? std::optional<long long>(ms_radius) : std::nullopt, ms_json);
        if (zs->parsed()) return cmd_zeroext_solve(zs_file, zs_brute, zs_json);
        if (lv->parsed()) return cmd_lconvex_verify(lv_file, lv_json);
        if (sc->parsed()) return cmd_semilattice_check(sc_file, sc_json);
        if (gn->parsed()) return cmd_gen(gn_kind, gn_seed, gn_params, gn_out);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 3;
}
