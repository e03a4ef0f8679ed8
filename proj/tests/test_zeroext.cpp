#include "dca/zeroext.hpp"

#include <random>

#include "dca/errors.hpp"
#include "dca/semilattice.hpp"
#include "doctest.h"

using namespace dca;

namespace {

Graph path4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
Graph cycle4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Graph k3() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph grid33() {
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (c + 1 < 3) edges.push_back({3 * r + c, 3 * r + c + 1});
            if (r + 1 < 3) edges.push_back({3 * r + c, 3 * (r + 1) + c});
        }
    return Graph(9, edges);
}

Graph cube() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit)
            if (!(v & (1 << bit))) edges.push_back({v, v | (1 << bit)});
    return Graph(8, edges);
}

std::vector<std::vector<Rat>> zeros(int rows, int cols) {
    return std::vector<std::vector<Rat>>(rows, std::vector<Rat>(cols, Rat(0)));
}

ZeroExtInstance plain(Graph g, int n) {
    int m = g.vertex_count();
    return ZeroExtInstance(std::move(g), n, zeros(n, m), zeros(n, n));
}

long long diameter(const Graph& g) {
    std::vector<std::vector<Rat>> d = metric(g);
    Rat best(0);
    for (const auto& row : d)
        for (const Rat& x : row) best = std::max(best, x);
    return best.num();
}

// Induced localization at a vertex: the upward set with the inherited
// order, or the downward set turned upside down.
ModularSemilattice localized(const OrientedOrder& ord, const std::vector<int>& elems,
                             bool reversed) {
    const int m = (int)elems.size();
    auto le = [&](int a, int b) {
        return reversed ? ord.leq[elems[b]][elems[a]] : ord.leq[elems[a]][elems[b]];
    };
    std::vector<std::pair<int, int>> hasse;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b || !le(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < m && cover; ++c)
                cover = c == a || c == b || !(le(a, c) && le(c, b));
            if (cover) hasse.push_back({a, b});
        }
    return ModularSemilattice(FinitePoset(m, hasse));
}

}  // namespace

TEST_CASE("zeroext: instance validation") {
    Graph g = path4();
    CHECK_THROWS_AS(ZeroExtInstance(g, 0, {}, {}), input_error);
    CHECK_THROWS_AS(ZeroExtInstance(g, 1, zeros(2, 4), zeros(1, 1)), input_error);
    CHECK_THROWS_AS(ZeroExtInstance(g, 1, zeros(1, 3), zeros(1, 1)), input_error);
    auto neg_b = zeros(1, 4);
    neg_b[0][2] = Rat(-1);
    CHECK_THROWS_AS(ZeroExtInstance(g, 1, neg_b, zeros(1, 1)), input_error);
    auto bad_c = zeros(2, 2);
    bad_c[0][1] = Rat(1);
    CHECK_THROWS_AS(ZeroExtInstance(g, 2, zeros(2, 4), bad_c), input_error);
    bad_c[1][0] = Rat(1);
    bad_c[0][0] = Rat(2);
    CHECK_THROWS_AS(ZeroExtInstance(g, 2, zeros(2, 4), bad_c), input_error);
    CHECK_THROWS_AS(
        ZeroExtInstance(Graph(2, {{0, 1}}, {Rat(1, 2)}), 1, zeros(1, 2), zeros(1, 1)),
        input_error);
    CHECK_THROWS_AS(ZeroExtInstance(Graph(2, {}), 1, zeros(1, 2), zeros(1, 1)), input_error);
}

TEST_CASE("zeroext: objective formula") {
    CHECK(objective(plain(path4(), 2), {0, 3}) == Rat(0));

    auto b = zeros(1, 2);
    b[0][0] = Rat(2);
    b[0][1] = Rat(1);
    ZeroExtInstance two(Graph(2, {{0, 1}}), 1, b, zeros(1, 1));
    CHECK(objective(two, {0}) == Rat(1));
    CHECK(objective(two, {1}) == Rat(2));

    auto c = zeros(2, 2);
    c[0][1] = c[1][0] = Rat(1);
    ZeroExtInstance pair(path4(), 2, zeros(2, 4), c);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            CHECK(objective(pair, {u, v}) == Rat(std::abs(u - v)));

    CHECK_THROWS_AS(objective(pair, {0}), input_error);
    CHECK_THROWS_AS(objective(pair, {0, 4}), input_error);
}

TEST_CASE("zeroext: brute force") {
    auto b = zeros(1, 2);
    b[0][0] = Rat(2);
    b[0][1] = Rat(1);
    auto [arg, val] = brute_force_solve(ZeroExtInstance(Graph(2, {{0, 1}}), 1, b, zeros(1, 1)));
    CHECK(arg == std::vector<int>{0});
    CHECK(val == Rat(1));

    auto c = zeros(2, 2);
    c[0][1] = c[1][0] = Rat(3);
    auto [carg, cval] = brute_force_solve(ZeroExtInstance(cycle4(), 2, zeros(2, 4), c));
    CHECK(carg == std::vector<int>{0, 0});
    CHECK(cval == Rat(0));

    auto pin = zeros(2, 4);
    pin[0][0] = Rat(100);
    pin[1][2] = Rat(3);
    auto cc = zeros(2, 2);
    cc[0][1] = cc[1][0] = Rat(2);
    auto [parg, pval] = brute_force_solve(ZeroExtInstance(cycle4(), 2, pin, cc));
    CHECK(parg == std::vector<int>{0, 2});
    CHECK(pval == Rat(4));

    CHECK_THROWS_AS(brute_force_solve(plain(cycle4(), 4), 100), cap_exceeded);
}

TEST_CASE("zeroext: oriented order structure") {
    for (const Graph& g : {path4(), claw(), cycle4(), grid33(), cube()}) {
        auto ord = oriented_order(g);
        REQUIRE(ord.has_value());
        CHECK(orientation_satisfies_cycle_rule(g, ord->orientation));
        CHECK(orientation_is_acyclic(g, ord->orientation));
        for (const auto& [tail, head] : ord->orientation.arcs) {
            CHECK(ord->leq[tail][head]);
            CHECK_FALSE(ord->leq[head][tail]);
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(std::is_sorted(ord->ideal[v].begin(), ord->ideal[v].end()));
            CHECK(std::is_sorted(ord->filter[v].begin(), ord->filter[v].end()));
            for (int u : ord->ideal[v]) CHECK(ord->leq[u][v]);
            for (int u : ord->filter[v]) CHECK(ord->leq[v][u]);
        }
    }
}

TEST_CASE("zeroext: intractable graphs are rejected") {
    for (const Graph& g : {k3(), k4()}) {
        CHECK_FALSE(is_modular_graph(g));
        auto out = sda_solve(plain(g, 1));
        REQUIRE(std::holds_alternative<ZeroExtRejection>(out));
        CHECK(std::get<ZeroExtRejection>(out).reason == "graph is not modular");
    }
}

TEST_CASE("zeroext: trivial pulls solve in one round") {
    auto c = zeros(2, 2);
    c[0][1] = c[1][0] = Rat(5);
    auto out = sda_solve(ZeroExtInstance(path4(), 2, zeros(2, 4), c));
    REQUIRE(std::holds_alternative<ZeroExtSolution>(out));
    const ZeroExtSolution& sol = std::get<ZeroExtSolution>(out);
    CHECK(sol.argmin == std::vector<int>{0, 0});
    CHECK(sol.value == Rat(0));
    CHECK(sol.iterations == 1);
}

TEST_CASE("zeroext: descent matches enumeration on accepted families") {
    const Graph graphs[] = {path4(), claw(), cycle4(), grid33(), cube()};
    std::mt19937_64 rng(0x0e27);
    for (const Graph& g : graphs) {
        CHECK(is_modular_graph(g));
        long long diam = diameter(g);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + (int)(rng() % 3);
            int m = g.vertex_count();
            auto b = zeros(n, m);
            for (int i = 0; i < n; ++i)
                for (int v = 0; v < m; ++v) b[i][v] = Rat((long long)(rng() % 4));
            auto c = zeros(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) c[i][j] = c[j][i] = Rat((long long)(rng() % 3));
            ZeroExtInstance inst(g, n, b, c);
            auto out = sda_solve(inst);
            REQUIRE(std::holds_alternative<ZeroExtSolution>(out));
            const ZeroExtSolution& sol = std::get<ZeroExtSolution>(out);
            auto [barg, bval] = brute_force_solve(inst);
            CHECK(sol.value == bval);
            CHECK(objective(inst, sol.argmin) == sol.value);
            CHECK(sol.iterations >= 1);
            CHECK(sol.iterations <= diam + 2);
        }
    }
}

TEST_CASE("zeroext: the metric is submodular on every localization of the square") {
    for (const Graph& g : {path4(), claw(), cycle4(), grid33(), cube()}) {
        auto ord = oriented_order(g);
        REQUIRE(ord.has_value());
        std::vector<std::vector<Rat>> d = metric(g);
        const int m = g.vertex_count();
        for (int x1 = 0; x1 < m; ++x1)
            for (int x2 = 0; x2 < m; ++x2)
                for (int side = 0; side < 2; ++side) {
                    const auto& box = side == 0 ? ord->ideal : ord->filter;
                    const std::vector<int>& e1 = box[x1];
                    const std::vector<int>& e2 = box[x2];
                    ProductDomain dom({localized(*ord, e1, side == 0),
                                       localized(*ord, e2, side == 0)});
                    std::vector<ExtRat> table;
                    table.reserve(e1.size() * e2.size());
                    for (int u : e1)
                        for (int v : e2) table.push_back(ExtRat(d[u][v]));
                    CHECK(is_submodular(dom, table));
                }
    }
}
