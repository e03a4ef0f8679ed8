#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dca/errors.hpp"
#include "dca/gen.hpp"
#include "dca/json_io.hpp"
#include "dca/mcmf.hpp"
#include "dca/report.hpp"
#include "dca/zeroext.hpp"
#include "doctest.h"

using namespace dca;
namespace fs = std::filesystem;

namespace {

std::string data_path(const std::string& name) {
    return std::string(DCA_TEST_DATA) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Exit status of the installed CLI binary; output is discarded unless
// redirected inside args.
int run_cli(const std::string& args) {
    std::string cmd = std::string(DCA_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("graph, poset, table, and network documents round-trip") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {Rat(1), Rat(1, 2), Rat(3), Rat(1)});
    Graph g2 = graph_from_json(graph_to_json(g));
    CHECK(g2.vertex_count() == 4);
    CHECK(g2.edge_count() == 4);
    CHECK(g2.length(1) == Rat(1, 2));

    FinitePoset p = poset_from_json(parse_json(slurp(data_path("diamond_rank.json"))));
    CHECK(p.size() == 4);
    Json pj = poset_to_json(p);
    FinitePoset p2 = poset_from_json(pj);
    CHECK(p2.leq(0, 3));
    CHECK(!p2.leq(1, 2));

    std::vector<ExtRat> tbl{ExtRat(Rat(1, 3)), ExtRat::pos_inf(), ExtRat(Rat(-2))};
    std::vector<ExtRat> tbl2 = table_from_json(table_to_json(tbl));
    REQUIRE(tbl2.size() == 3);
    CHECK(tbl2[0] == ExtRat(Rat(1, 3)));
    CHECK(tbl2[1].is_pos_inf());
    CHECK(tbl2[2] == ExtRat(Rat(-2)));

    FlowNetwork net(3, {{0, 1, Rat(1, 2), ExtRat(Rat(2))}, {1, 2, Rat(0), ExtRat::pos_inf()}});
    FlowNetwork net2 = network_from_json(network_to_json(net));
    REQUIRE(net2.edge_count() == 2);
    CHECK(net2.edges()[0].lo == Rat(1, 2));
    CHECK(net2.edges()[1].hi.is_pos_inf());
}

TEST_CASE("multiflow instances and solutions round-trip") {
    MultiflowInstance inst = mcmf_from_json(parse_json(slurp(data_path("triangle.json"))));
    CHECK(inst.node_count() == 3);
    CHECK(inst.edges().size() == 3);
    CHECK(inst.terminals().size() == 3);

    MultiflowInstance inst2 = mcmf_from_json(mcmf_to_json(inst));
    CHECK(mcmf_to_json(inst2) == mcmf_to_json(inst));

    McmfResult sol = solve_mcmf(inst);
    REQUIRE(sol.status == 0);
    Json sj = mcmf_solution_to_json(sol);
    CHECK(sj["cost"] == "3/2");
    Multiflow flow = multiflow_from_json(sj["paths"]);
    REQUIRE(flow.size() == sol.flow.size());
    CHECK(flow[0].nodes == sol.flow[0].nodes);
    CHECK(flow[0].value == sol.flow[0].value);
    Potential pot = potential_from_json(sj["potential"]);
    REQUIRE(pot.size() == sol.potential.size());
    CHECK(pot[2] == sol.potential[2]);
}

TEST_CASE("zeroext and grid function documents round-trip") {
    ZeroExtInstance inst = zeroext_from_json(parse_json(slurp(data_path("c4_zeroext.json"))));
    CHECK(inst.variables() == 2);
    CHECK(inst.pull(0, 0) == Rat(3));
    CHECK(inst.coupling(0, 1) == Rat(1));
    CHECK(zeroext_to_json(zeroext_from_json(zeroext_to_json(inst))) == zeroext_to_json(inst));

    GridFnFile f = gridfn_from_json(parse_json(slurp(data_path("path3_vee.json"))));
    CHECK(!f.h.has_value());
    CHECK(f.n == 1);
    REQUIRE(f.values.size() == 3);
    CHECK(f.values[1] == ExtRat(Rat(0)));
    CHECK(gridfn_from_json(gridfn_to_json(f)).values == f.values);

    GridFnFile tw{Graph(2, {{0, 1}}), Graph(2, {{0, 1}}), 0, 1, 2,
                  std::vector<ExtRat>(16, ExtRat(Rat(0)))};
    Json twj = gridfn_to_json(tw);
    CHECK(twj["kind"] == "twisted_grid");
    GridFnFile tw2 = gridfn_from_json(twj);
    REQUIRE(tw2.h.has_value());
    CHECK(tw2.black_h == 1);
    CHECK(tw2.values.size() == 16);
}

TEST_CASE("invalid documents are rejected with input errors") {
    CHECK_THROWS_AS(parse_json(slurp(data_path("malformed.json"))), input_error);
    CHECK_THROWS_AS(load_json_file(data_path("no_such_file.json")), input_error);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"edges": []})")), input_error);
    CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 2, "edges": [[0, 5]]})")), input_error);
    CHECK_THROWS_AS(rat_from_json(Json("7/0")), input_error);
    CHECK_THROWS_AS(mcmf_from_json(parse_json(R"({"n": 1, "edges": [], "terminals": []})")),
                    input_error);
    CHECK_THROWS_AS(
        zeroext_from_json(parse_json(
            R"({"graph": {"n": 2, "edges": [[0, 1]]}, "n": 1, "b": [[0, 9, "1"]], "c": []})")),
        input_error);
    CHECK_THROWS_AS(
        gridfn_from_json(parse_json(R"({"kind": "banana", "n": 1, "values": []})")),
        input_error);
}

TEST_CASE("instance generation is deterministic and matches the frozen files") {
    for (const char* kind : {"mcmf", "zeroext", "gridfn", "poset"}) {
        GenParams p;
        Json a = generate_instance(kind, 42, p);
        Json b = generate_instance(kind, 42, p);
        CHECK(a == b);
        CHECK(a != generate_instance(kind, 43, p));
    }

    CHECK(generate_instance("mcmf", 1, {}).dump(2) + "\n" ==
          slurp(data_path("golden_mcmf_seed1.json")));
    GenParams zp;
    zp.n = 2;
    zp.graph = "c4";
    CHECK(generate_instance("zeroext", 7, zp).dump(2) + "\n" ==
          slurp(data_path("golden_zeroext_seed7.json")));
    GenParams gp;
    gp.n = 1;
    CHECK(generate_instance("gridfn", 2, gp).dump(2) + "\n" ==
          slurp(data_path("golden_gridfn_seed2.json")));
    CHECK(generate_instance("poset", 3, {}).dump(2) + "\n" ==
          slurp(data_path("golden_poset_seed3.json")));

    CHECK_THROWS_AS(generate_instance("banana", 1, {}), input_error);
    GenParams bad;
    bad.n = 40;
    CHECK_THROWS_AS(generate_instance("mcmf", 1, bad), input_error);
}

TEST_CASE("generated multiflow instances always route their demands") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenParams p;
        p.n = 2 + (int)(seed % 5);
        p.k = 2 + (int)(seed % (std::uint64_t)std::min(p.n - 1, 3));
        MultiflowInstance inst = mcmf_from_json(generate_instance("mcmf", seed, p));
        McmfResult sol = solve_mcmf(inst);
        CHECK(sol.status == 0);
    }
}

TEST_CASE("reports digest, render, and finalize deterministically") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("hello") == fnv1a_hex("hello"));
    CHECK(fnv1a_hex("hello") != fnv1a_hex("hellp"));

    RunReport r;
    r.command = "mcmf solve";
    r.instance_digest = fnv1a_hex("x");
    r.payload["cost"] = "3/2";
    r.verifications.push_back("optimality certificate: ok");
    finalize_status(r);
    CHECK(r.status == 0);
    std::string text = report_to_text(r);
    CHECK(text.find("command: mcmf solve\n") != std::string::npos);
    CHECK(text.find("cost: 3/2\n") != std::string::npos);
    CHECK(text.find("verified optimality certificate: ok\n") != std::string::npos);
    Json j = report_to_json(r);
    CHECK(j["status"] == 0);
    CHECK(j["result"]["cost"] == "3/2");

    r.verifications.push_back("exhaustive dual scan matches the cost: FAILED (radius 2)");
    finalize_status(r);
    CHECK(r.status == 2);
    CHECK(report_to_json(r)["message"] == "verification failed");
}

TEST_CASE("cli exit statuses cover success, infeasibility, failure, and bad input") {
    CHECK(run_cli("mcmf solve " + data_path("triangle.json") + " --verify --dual-brute 4") == 0);
    CHECK(run_cli("mcmf solve " + data_path("triangle.json") + " --json") == 0);
    CHECK(run_cli("zeroext solve " + data_path("c4_zeroext.json")) == 0);
    CHECK(run_cli("zeroext solve " + data_path("k3_zeroext.json")) == 1);
    CHECK(run_cli("zeroext solve " + data_path("k3_zeroext.json") + " --brute") == 0);
    CHECK(run_cli("lconvex verify " + data_path("path3_vee.json")) == 0);
    CHECK(run_cli("lconvex verify " + data_path("zigzag_path.json")) == 2);
    CHECK(run_cli("semilattice check " + data_path("diamond_rank.json")) == 0);
    CHECK(run_cli("mcmf solve " + data_path("malformed.json")) == 3);
    CHECK(run_cli("mcmf solve " + data_path("no_such_file.json")) == 3);
    CHECK(run_cli("frobnicate") == 3);
}

TEST_CASE("cli generation writes byte-identical files per seed") {
    fs::path dir = fs::temp_directory_path() / "dca_io_cli_test";
    fs::create_directories(dir);
    fs::path a = dir / "a.json", b = dir / "b.json";
    CHECK(run_cli("gen mcmf --seed 5 --n 4 --k 2 --out " + a.string()) == 0);
    CHECK(run_cli("gen mcmf --seed 5 --n 4 --k 2 --out " + b.string()) == 0);
    CHECK(slurp(a.string()) == slurp(b.string()));
    CHECK(run_cli("mcmf solve " + a.string()) == 0);
    CHECK(run_cli("gen zeroext --seed 9 --graph q3 --n 2 --out " + a.string()) == 0);
    CHECK(run_cli("zeroext solve " + a.string()) == 0);
    CHECK(run_cli("gen gridfn --seed 4 --n 2 --out " + a.string()) == 0);
    int st = run_cli("lconvex verify " + a.string());
    CHECK((st == 0 || st == 2));
    CHECK(run_cli("gen poset --seed 11 --out " + a.string()) == 0);
    CHECK(run_cli("semilattice check " + a.string()) == 0);
    fs::remove_all(dir);
}
