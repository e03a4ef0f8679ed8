#include <doctest.h>

#include <random>
#include <variant>

#include "dca/flow.hpp"

using namespace dca;

namespace {

FlowEdge fe(int u, int v, Rat lo, ExtRat hi) { return {u, v, lo, hi}; }
FlowEdge cap(int u, int v, Rat hi) { return {u, v, Rat(0), ExtRat(hi)}; }

// Independent maximum-flow oracle: plain depth-first augmentation on a
// residual matrix, any path, until none remains.
Rat ff_oracle(const FlowNetwork& net, int s, int t) {
    int n = net.node_count();
    std::vector<std::vector<ExtRat>> res(n, std::vector<ExtRat>(n, ExtRat(Rat(0))));
    for (auto& e : net.edges()) res[e.u][e.v] = res[e.u][e.v] + e.hi;
    Rat total(0);
    for (;;) {
        std::vector<int> prev(n, -1);
        std::vector<bool> vis(n, false);
        std::vector<int> stack{s};
        vis[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (!vis[v] && res[u][v] > ExtRat(Rat(0))) {
                    vis[v] = true;
                    prev[v] = u;
                    stack.push_back(v);
                }
        }
        if (!vis[t]) return total;
        ExtRat b = ExtRat::pos_inf();
        for (int v = t; v != s; v = prev[v])
            if (res[prev[v]][v] < b) b = res[prev[v]][v];
        REQUIRE(b.finite());
        for (int v = t; v != s; v = prev[v]) {
            res[prev[v]][v] = res[prev[v]][v] - b;
            res[v][prev[v]] = res[v][prev[v]] + b;
        }
        total += b.value();
    }
}

// Independent cut valuation for the Hoffman checks.
ExtRat kappa_oracle(const FlowNetwork& net, unsigned mask) {
    Rat in(0), out(0);
    for (auto& e : net.edges()) {
        bool xu = (mask >> e.u) & 1, xv = (mask >> e.v) & 1;
        if (!xu && xv) in += e.lo;
        if (xu && !xv) {
            if (!e.hi.finite()) return ExtRat::neg_inf();
            out += e.hi.value();
        }
    }
    return ExtRat(in - out);
}

void check_flow_valid(const FlowNetwork& net, const std::vector<Rat>& f, int s, int t,
                      const Rat& value) {
    std::vector<Rat> net_out(net.node_count(), Rat(0));
    for (size_t i = 0; i < f.size(); ++i) {
        auto& e = net.edges()[i];
        CHECK(f[i] >= Rat(0));
        CHECK(ExtRat(f[i]) <= e.hi);
        net_out[e.u] += f[i];
        net_out[e.v] -= f[i];
    }
    for (int v = 0; v < net.node_count(); ++v) {
        if (v == s)
            CHECK(net_out[v] == value);
        else if (v == t)
            CHECK(net_out[v] == -value);
        else
            CHECK(net_out[v] == Rat(0));
    }
}

void check_circulation_valid(const FlowNetwork& net, const std::vector<Rat>& f) {
    std::vector<Rat> net_out(net.node_count(), Rat(0));
    for (size_t i = 0; i < f.size(); ++i) {
        auto& e = net.edges()[i];
        CHECK(f[i] >= e.lo);
        CHECK(ExtRat(f[i]) <= e.hi);
        net_out[e.u] += f[i];
        net_out[e.v] -= f[i];
    }
    for (int v = 0; v < net.node_count(); ++v) CHECK(net_out[v] == Rat(0));
}

}  // namespace

TEST_CASE("flow network validation") {
    CHECK_THROWS_AS(FlowNetwork(2, {fe(0, 5, Rat(0), ExtRat(Rat(1)))}), input_error);
    CHECK_THROWS_AS(FlowNetwork(2, {fe(0, 1, Rat(-1), ExtRat(Rat(1)))}), input_error);
    CHECK_THROWS_AS(FlowNetwork(2, {fe(0, 1, Rat(2), ExtRat(Rat(1)))}), input_error);
    FlowNetwork ok(2, {fe(0, 1, Rat(1), ExtRat::pos_inf())});
    CHECK(ok.edge_count() == 1);
}

TEST_CASE("maximum flow on tiny networks") {
    auto single = max_flow(FlowNetwork(2, {cap(0, 1, Rat(1))}), 0, 1);
    CHECK(single.value == Rat(1));
    CHECK(single.flow == std::vector<Rat>{Rat(1)});
    CHECK(single.cut == std::vector<bool>{true, false});

    auto diamond = max_flow(FlowNetwork(4, {cap(0, 1, Rat(1)), cap(0, 2, Rat(1)),
                                            cap(1, 3, Rat(1)), cap(2, 3, Rat(1))}),
                            0, 3);
    CHECK(diamond.value == Rat(2));

    auto frac = max_flow(FlowNetwork(3, {cap(0, 1, Rat(1, 2)), cap(0, 1, Rat(1, 3)),
                                         cap(1, 2, Rat(3, 4))}),
                         0, 2);
    CHECK(frac.value == Rat(3, 4));

    auto blocked = max_flow(FlowNetwork(3, {cap(0, 1, Rat(5))}), 0, 2);
    CHECK(blocked.value == Rat(0));

    CHECK_THROWS_AS(max_flow(FlowNetwork(2, {cap(0, 1, Rat(1))}), 0, 0), input_error);
    CHECK_THROWS_AS(max_flow(FlowNetwork(2, {fe(0, 1, Rat(1), ExtRat(Rat(1)))}), 0, 1),
                    input_error);
    CHECK_THROWS_AS(max_flow(FlowNetwork(2, {fe(0, 1, Rat(0), ExtRat::pos_inf())}), 0, 1),
                    input_error);
}

TEST_CASE("maximum flow agrees with depth-first augmentation") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 120; ++it) {
        int n = 2 + (int)(rng() % 7);
        int m = 1 + (int)(rng() % 16);
        std::vector<FlowEdge> es;
        bool integral = true;
        for (int i = 0; i < m; ++i) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v) continue;
            Rat c;
            switch (rng() % 4) {
                case 0: c = Rat(rng() % 4); break;
                case 1: c = Rat(1 + rng() % 5); break;
                case 2: c = Rat(1 + rng() % 5, 2); integral = false; break;
                default: c = Rat(1 + rng() % 7, 3); integral = false; break;
            }
            es.push_back(cap(u, v, c));
        }
        FlowNetwork net(n, es);
        int s = 0, t = n - 1;
        auto r = max_flow(net, s, t);
        CHECK(r.value == ff_oracle(net, s, t));
        check_flow_valid(net, r.flow, s, t, r.value);
        // The reported cut certifies the value.
        CHECK(r.cut[s]);
        CHECK_FALSE(r.cut[t]);
        Rat crossing(0);
        for (auto& e : net.edges())
            if (r.cut[e.u] && !r.cut[e.v]) crossing += e.hi.value();
        CHECK(crossing == r.value);
        if (integral)
            for (auto& f : r.flow) CHECK(f.is_integer());
    }
}

TEST_CASE("cut valuation formula") {
    FlowNetwork net(2, {fe(0, 1, Rat(1), ExtRat(Rat(1)))});
    CHECK(kappa(net, {false, false}) == ExtRat(Rat(0)));
    CHECK(kappa(net, {true, true}) == ExtRat(Rat(0)));
    CHECK(kappa(net, {false, true}) == ExtRat(Rat(1)));
    CHECK(kappa(net, {true, false}) == ExtRat(Rat(-1)));
    FlowNetwork inf(2, {fe(0, 1, Rat(1), ExtRat::pos_inf())});
    CHECK(kappa(inf, {true, false}).is_neg_inf());
    CHECK(kappa(inf, {false, true}) == ExtRat(Rat(1)));
    CHECK_THROWS_AS(kappa(net, {true}), input_error);
}

TEST_CASE("circulation feasibility on tiny networks") {
    auto zero = find_circulation(FlowNetwork(3, {cap(0, 1, Rat(0)), cap(1, 2, Rat(0))}));
    REQUIRE(std::holds_alternative<Circulation>(zero));
    for (auto& f : std::get<Circulation>(zero).flow) CHECK(f == Rat(0));

    // Forced edge with no way back.
    auto stuck = find_circulation(FlowNetwork(2, {fe(0, 1, Rat(1), ExtRat(Rat(1)))}));
    REQUIRE(std::holds_alternative<ViolatingCut>(stuck));
    auto& vc = std::get<ViolatingCut>(stuck);
    CHECK(vc.cut == std::vector<bool>{false, true});
    CHECK(vc.kappa_value == Rat(1));

    // Two-cycle with overlapping intervals is feasible.
    auto cyc = find_circulation(FlowNetwork(2, {fe(0, 1, Rat(1), ExtRat(Rat(2))),
                                                fe(1, 0, Rat(1), ExtRat(Rat(2)))}));
    REQUIRE(std::holds_alternative<Circulation>(cyc));
    check_circulation_valid(FlowNetwork(2, {fe(0, 1, Rat(1), ExtRat(Rat(2))),
                                            fe(1, 0, Rat(1), ExtRat(Rat(2)))}),
                            std::get<Circulation>(cyc).flow);
}

TEST_CASE("circulation feasibility matches exhaustive cut enumeration") {
    std::mt19937_64 rng(777);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int it = 0; it < 160; ++it) {
        int n = 2 + (int)(rng() % 6);
        int m = 1 + (int)(rng() % 12);
        std::vector<FlowEdge> es;
        bool integral = true;
        for (int i = 0; i < m; ++i) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v) continue;
            Rat lo;
            switch (rng() % 4) {
                case 0: lo = Rat(0); break;
                case 1: lo = Rat(1); break;
                case 2: lo = Rat(2); break;
                default: lo = Rat(1, 2); integral = false; break;
            }
            ExtRat hi = rng() % 5 == 0 ? ExtRat::pos_inf() : ExtRat(lo + Rat(rng() % 3));
            es.push_back(fe(u, v, lo, hi));
        }
        FlowNetwork net(n, es);

        ExtRat best = ExtRat(Rat(0));
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            auto k = kappa_oracle(net, mask);
            if (best < k) best = k;
        }
        auto res = find_circulation(net);
        if (best <= ExtRat(Rat(0))) {
            REQUIRE(std::holds_alternative<Circulation>(res));
            auto& f = std::get<Circulation>(res).flow;
            check_circulation_valid(net, f);
            if (integral)
                for (auto& x : f) CHECK(x.is_integer());
            ++feasible_seen;
        } else {
            REQUIRE(std::holds_alternative<ViolatingCut>(res));
            auto& vc = std::get<ViolatingCut>(res);
            CHECK(ExtRat(vc.kappa_value) == best);
            CHECK(kappa(net, vc.cut) == best);
            // The reported cut must be the intersection of every maximizer.
            unsigned inter = (1u << n) - 1;
            for (unsigned mask = 0; mask < (1u << n); ++mask)
                if (kappa_oracle(net, mask) == best) inter &= mask;
            CHECK(kappa_oracle(net, inter) == best);  // maximizers form a lattice
            for (int v = 0; v < n; ++v) CHECK(vc.cut[v] == (bool)((inter >> v) & 1));
            ++infeasible_seen;
        }
    }
    CHECK(feasible_seen > 20);
    CHECK(infeasible_seen > 20);
}
