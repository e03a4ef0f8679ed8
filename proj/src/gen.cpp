#include "dca/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dca/errors.hpp"
#include "dca/flow.hpp"
#include "dca/graph.hpp"
#include "dca/grid.hpp"
#include "dca/mcmf.hpp"
#include "dca/zeroext.hpp"

namespace dca {
namespace {

// All draws go through pick() so the byte stream is pinned by the standard
// mt19937_64 sequence and nothing else.
long long pick(std::mt19937_64& rng, long long bound) { return (long long)(rng() % (std::uint64_t)bound); }

// Largest total flow terminal s can push to the other terminals through the
// undirected capacities; clamping demands to this keeps instances routable.
long long connectivity_bound(int n, const std::vector<MultiflowEdge>& edges,
                             const std::vector<int>& terminals, int s) {
    std::vector<FlowEdge> arcs;
    for (const MultiflowEdge& e : edges) {
        arcs.push_back({e.u, e.v, Rat(0), ExtRat(Rat(e.cap))});
        arcs.push_back({e.v, e.u, Rat(0), ExtRat(Rat(e.cap))});
    }
    int sink = n;
    for (int t : terminals)
        if (t != s) arcs.push_back({t, sink, Rat(0), ExtRat::pos_inf()});
    MaxFlowResult mf = max_flow(FlowNetwork(n + 1, std::move(arcs)), s, sink);
    return mf.value.num() / mf.value.den();
}

Json gen_mcmf(std::mt19937_64& rng, int n, int k) {
    if (n == 0) n = 3;
    if (k == 0) k = std::min(3, n);
    if (n < 2 || n > 8) throw input_error("mcmf generator: n must be in [2, 8]");
    if (k < 2 || k > std::min(n, 4)) throw input_error("mcmf generator: k must be in [2, min(n, 4)]");

    std::vector<MultiflowEdge> edges;
    for (int i = 1; i < n; ++i) {
        int p = (int)pick(rng, i);
        edges.push_back({p, i, 1 + pick(rng, 2), 1 + pick(rng, 2)});
    }
    int extras = (int)pick(rng, 3);
    for (int e = 0; e < extras; ++e) {
        int u = (int)pick(rng, n), v = (int)pick(rng, n);
        if (u == v) continue;
        edges.push_back({u, v, 1 + pick(rng, 2), 1 + pick(rng, 2)});
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = 0; i < k; ++i) std::swap(order[i], order[i + pick(rng, n - i)]);
    std::vector<int> nodes(order.begin(), order.begin() + k);
    std::sort(nodes.begin(), nodes.end());

    std::vector<TerminalDemand> terminals;
    for (int t : nodes) {
        long long d = pick(rng, 3);
        d = std::min(d, connectivity_bound(n, edges, nodes, t));
        terminals.push_back({t, d});
    }
    return mcmf_to_json(MultiflowInstance(n, std::move(edges), std::move(terminals)));
}

Graph named_family(const std::string& name) {
    if (name == "p4") return Graph(4, {{0, 1}, {1, 2}, {2, 3}});
    if (name == "k13") return Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    if (name == "c4") return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    if (name == "k3") return Graph(3, {{0, 1}, {1, 2}, {2, 0}});
    if (name == "k4") return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "grid33") {
        std::vector<std::pair<int, int>> es;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                if (c + 1 < 3) es.push_back({3 * r + c, 3 * r + c + 1});
                if (r + 1 < 3) es.push_back({3 * r + c, 3 * (r + 1) + c});
            }
        return Graph(9, es);
    }
    if (name == "q3") {
        std::vector<std::pair<int, int>> es;
        for (int v = 0; v < 8; ++v)
            for (int b = 0; b < 3; ++b)
                if (!(v & (1 << b))) es.push_back({v, v | (1 << b)});
        return Graph(8, es);
    }
    throw input_error("unknown graph family: " + name);
}

Json gen_zeroext(std::mt19937_64& rng, int n, const std::string& family) {
    if (n == 0) n = 2;
    if (n < 1 || n > 3) throw input_error("zeroext generator: n must be in [1, 3]");
    Graph g = named_family(family.empty() ? "c4" : family);
    int m = g.vertex_count();
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < m; ++v) b[i][v] = Rat(pick(rng, 4));
    std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c[i][j] = c[j][i] = Rat(pick(rng, 3));
    return zeroext_to_json(ZeroExtInstance(g, n, std::move(b), std::move(c)));
}

Json gen_gridfn(std::mt19937_64& rng, int n) {
    if (n == 0) n = 1;
    if (n < 1 || n > 3) throw input_error("gridfn generator: n must be in [1, 3]");
    GridFnFile f{Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), std::nullopt, 0, 0, n, {}};
    TreeGrid grid(ZigzagTree(f.g, f.black_g), n);
    f.values.resize(grid.point_count());
    for (long long p = 0; p < grid.point_count(); ++p) {
        if (p > 0 && pick(rng, 8) == 0)
            f.values[p] = ExtRat::pos_inf();
        else
            f.values[p] = ExtRat(Rat(pick(rng, 5)));
    }
    return gridfn_to_json(f);
}

Json gen_poset(std::mt19937_64& rng, int n) {
    if (n == 0) n = (int)(5 + pick(rng, 4));
    if (n < 2 || n > 12) throw input_error("poset generator: n must be in [2, 12]");
    std::vector<std::pair<int, int>> hasse;
    std::vector<int> depth(n, 0);
    for (int i = 1; i < n; ++i) {
        int p = (int)pick(rng, i);
        hasse.push_back({p, i});
        depth[i] = depth[p] + 1;
    }
    FinitePoset poset(n, hasse);
    Json j = poset_to_json(poset);
    std::vector<ExtRat> values;
    for (int i = 0; i < n; ++i) values.push_back(ExtRat(Rat(depth[i])));
    j["values"] = table_to_json(values)["values"];
    return j;
}

}  // namespace

Json generate_instance(const std::string& kind, std::uint64_t seed, const GenParams& params) {
    std::mt19937_64 rng(seed);
    if (kind == "mcmf") return gen_mcmf(rng, params.n, params.k);
    if (kind == "zeroext") return gen_zeroext(rng, params.n, params.graph);
    if (kind == "gridfn") return gen_gridfn(rng, params.n);
    if (kind == "poset") return gen_poset(rng, params.n);
    throw input_error("unknown instance kind: " + kind);
}

}  // namespace dca
