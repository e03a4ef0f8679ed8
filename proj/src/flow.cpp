#include "dca/flow.hpp"

#include <deque>

#include "dca/errors.hpp"

namespace dca {

FlowNetwork::FlowNetwork(int n, std::vector<FlowEdge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw input_error("negative node count");
    for (const FlowEdge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw input_error("flow edge endpoint out of range");
        if (e.lo < Rat(0)) throw input_error("negative lower capacity");
        if (e.hi < ExtRat(e.lo)) throw input_error("upper capacity below lower capacity");
    }
}

MaxFlowResult max_flow(const FlowNetwork& net, int s, int t) {
    const int n = net.node_count();
    if (s < 0 || s >= n || t < 0 || t >= n || s == t)
        throw input_error("bad max-flow terminals");
    for (const FlowEdge& e : net.edges())
        if (!(e.lo == Rat(0))) throw input_error("max flow requires zero lower capacities");

    // Arc 2e carries the remaining capacity of edge e, arc 2e+1 the flow.
    const int m = net.edge_count();
    std::vector<ExtRat> res(2 * m);
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < m; ++e) {
        res[2 * e] = net.edges()[e].hi;
        res[2 * e + 1] = ExtRat(Rat(0));
        out[net.edges()[e].u].push_back(2 * e);
        out[net.edges()[e].v].push_back(2 * e + 1);
    }
    auto arc_head = [&](int a) {
        const FlowEdge& e = net.edges()[a / 2];
        return (a & 1) ? e.u : e.v;
    };
    auto arc_tail = [&](int a) {
        const FlowEdge& e = net.edges()[a / 2];
        return (a & 1) ? e.v : e.u;
    };

    const ExtRat zero{Rat(0)};
    Rat value(0);
    std::vector<bool> seen(n);
    for (;;) {
        // Shortest augmenting path by arc count.
        std::vector<int> par(n, -1);
        seen.assign(n, false);
        seen[s] = true;
        std::deque<int> q{s};
        while (!q.empty() && !seen[t]) {
            int u = q.front();
            q.pop_front();
            for (int a : out[u]) {
                int w = arc_head(a);
                if (seen[w] || !(res[a] > zero)) continue;
                seen[w] = true;
                par[w] = a;
                q.push_back(w);
            }
        }
        if (!seen[t]) break;
        ExtRat bottleneck = ExtRat::pos_inf();
        for (int v = t; v != s; v = arc_tail(par[v]))
            if (res[par[v]] < bottleneck) bottleneck = res[par[v]];
        if (!bottleneck.finite()) throw input_error("maximum flow is unbounded");
        const Rat b = bottleneck.value();
        for (int v = t; v != s; v = arc_tail(par[v])) {
            int a = par[v];
            res[a] = res[a] - ExtRat(b);
            res[a ^ 1] = res[a ^ 1] + ExtRat(b);
        }
        value += b;
    }

    MaxFlowResult r;
    r.value = value;
    r.flow.reserve(m);
    for (int e = 0; e < m; ++e) r.flow.push_back(res[2 * e + 1].value());
    r.cut = seen;  // the s-reachable residual set is the minimal minimum cut
    return r;
}

ExtRat kappa(const FlowNetwork& net, const std::vector<bool>& x) {
    if ((int)x.size() != net.node_count()) throw input_error("cut size mismatch");
    Rat in(0), out(0);
    for (const FlowEdge& e : net.edges()) {
        if (!x[e.u] && x[e.v]) in += e.lo;
        if (x[e.u] && !x[e.v]) {
            if (!e.hi.finite()) return ExtRat::neg_inf();
            out += e.hi.value();
        }
    }
    return ExtRat(in - out);
}

std::variant<Circulation, ViolatingCut> find_circulation(const FlowNetwork& net) {
    const int n = net.node_count(), m = net.edge_count();
    const int sigma = n, tau = n + 1;

    // Shift each edge down to [0, hi-lo] and route the displaced lower
    // bounds through an excess/deficit source and sink.
    std::vector<FlowEdge> aux;
    aux.reserve(m + n);
    for (const FlowEdge& e : net.edges())
        aux.push_back({e.u, e.v, Rat(0), e.hi - ExtRat(e.lo)});
    std::vector<Rat> b(n, Rat(0));
    for (const FlowEdge& e : net.edges()) {
        b[e.v] += e.lo;
        b[e.u] -= e.lo;
    }
    Rat demand(0);
    for (int v = 0; v < n; ++v) {
        if (b[v] > Rat(0)) {
            aux.push_back({sigma, v, Rat(0), ExtRat(b[v])});
            demand += b[v];
        } else if (b[v] < Rat(0)) {
            aux.push_back({v, tau, Rat(0), ExtRat(-b[v])});
        }
    }
    auto r = max_flow(FlowNetwork(n + 2, std::move(aux)), sigma, tau);

    if (r.value == demand) {
        Circulation c;
        c.flow.reserve(m);
        for (int e = 0; e < m; ++e) c.flow.push_back(net.edges()[e].lo + r.flow[e]);
        return c;
    }
    ViolatingCut cut;
    cut.cut.assign(r.cut.begin(), r.cut.begin() + n);
    cut.kappa_value = demand - r.value;
    if (!(kappa(net, cut.cut) == ExtRat(cut.kappa_value)))
        throw internal_error("violating cut fails its own certificate");
    return cut;
}

}  // namespace dca
