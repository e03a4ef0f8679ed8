#include "dca/mcmf.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

#include "dca/errors.hpp"

namespace dca {

namespace {

void validate_potential(const MultiflowInstance& inst, const Potential& p) {
    if ((int)p.size() != inst.node_count()) throw input_error("potential size mismatch");
    for (const StarVertex& x : p) {
        if (x.t < 0) throw input_error("negative ray position in potential");
        if (x.t == 0) {
            if (x.ray != -1) throw input_error("center coordinates must use ray -1");
        } else if (x.ray < 0 || x.ray >= inst.terminal_count()) {
            throw input_error("potential ray out of range");
        }
    }
}

bool respects_rays(const MultiflowInstance& inst, const Potential& p) {
    for (const TerminalDemand& td : inst.terminals()) {
        const StarVertex& x = p[td.node];
        if (!x.is_center() && x.ray != inst.ray_of(td.node)) return false;
    }
    return true;
}

long long doubled_omega(const MultiflowInstance& inst, const Potential& p) {
    long long w2 = 0;
    for (const TerminalDemand& td : inst.terminals()) w2 -= td.demand * p[td.node].t;
    for (const MultiflowEdge& e : inst.edges()) {
        long long d2 = star_hops(p[e.u], p[e.v]);
        if (d2 > 2 * e.cost) w2 += e.cap * (d2 - 2 * e.cost);
    }
    return w2;
}

}  // namespace

MultiflowInstance::MultiflowInstance(int n, std::vector<MultiflowEdge> edges,
                                     std::vector<TerminalDemand> terminals)
    : n_(n), edges_(std::move(edges)), terminals_(std::move(terminals)) {
    if (n_ <= 0) throw input_error("instance needs at least one node");
    for (const MultiflowEdge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw input_error("edge endpoint out of range");
        if (e.u == e.v) throw input_error("self-loops are not allowed");
        if (e.cap < 1) throw input_error("edge capacities must be positive integers");
        if (e.cost < 1) throw input_error("edge costs must be positive integers");
    }
    if ((int)terminals_.size() < 2) throw input_error("at least two terminals required");
    std::sort(terminals_.begin(), terminals_.end(),
              [](const TerminalDemand& a, const TerminalDemand& b) { return a.node < b.node; });
    ray_of_.assign(n_, -1);
    for (int s = 0; s < (int)terminals_.size(); ++s) {
        const TerminalDemand& td = terminals_[s];
        if (td.node < 0 || td.node >= n_) throw input_error("terminal out of range");
        if (ray_of_[td.node] != -1) throw input_error("duplicate terminal");
        if (td.demand < 0) throw input_error("negative demand");
        ray_of_[td.node] = s;
    }
    max_cost_ = 1;
    for (const MultiflowEdge& e : edges_) max_cost_ = std::max(max_cost_, e.cost);
    std::vector<std::vector<int>> adj(n_);
    for (const MultiflowEdge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != n_) throw input_error("instance graph is not connected");
}

long long star_hops(const StarVertex& x, const StarVertex& y) {
    if (x.ray == y.ray) return x.t >= y.t ? x.t - y.t : y.t - x.t;
    return x.t + y.t;
}

long long potential_hop_distance(const Potential& a, const Potential& b) {
    if (a.size() != b.size()) throw input_error("potential size mismatch");
    long long d = 0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, star_hops(a[i], b[i]));
    return d;
}

ExtRat omega(const MultiflowInstance& inst, const Potential& p) {
    validate_potential(inst, p);
    if (!respects_rays(inst, p)) return ExtRat::pos_inf();
    return ExtRat(Rat(doubled_omega(inst, p), 2));
}

DpNetwork build_dp(const MultiflowInstance& inst, const Potential& p) {
    validate_potential(inst, p);
    if (!respects_rays(inst, p))
        throw input_error("potential violates the terminal-ray constraints");
    const int n = inst.node_count(), k = inst.terminal_count();

    std::vector<DpNetwork::Port> ports;
    std::vector<std::vector<int>> ports_of(n);
    std::vector<int> self_port(k, -1);
    for (int i = 0; i < n; ++i) {
        int ray = inst.ray_of(i);
        if (p[i].is_center()) {
            for (int s = 0; s < k; ++s) {
                ports_of[i].push_back((int)ports.size());
                ports.push_back({i, s});
            }
            if (ray >= 0) {
                self_port[ray] = (int)ports.size();
                ports_of[i].push_back((int)ports.size());
                ports.push_back({i, DpNetwork::kSelf});
            }
        } else {
            if (ray >= 0) self_port[ray] = (int)ports.size();
            ports_of[i].push_back((int)ports.size());
            ports.push_back({i, DpNetwork::kAway});
            ports_of[i].push_back((int)ports.size());
            ports.push_back({i, DpNetwork::kOSide});
        }
    }

    std::vector<DpNetwork::BiEdge> bi;
    for (int i = 0; i < n; ++i)
        for (size_t a = 0; a < ports_of[i].size(); ++a)
            for (size_t b = a + 1; b < ports_of[i].size(); ++b)
                bi.push_back({ports_of[i][a], ports_of[i][b], 0, -1});

    // A kept network edge descends from the deeper endpoint's center-side
    // port to the port of the shallower endpoint facing the deeper ray.
    for (int e = 0; e < (int)inst.edges().size(); ++e) {
        const MultiflowEdge& me = inst.edges()[e];
        long long d2 = star_hops(p[me.u], p[me.v]);
        if (d2 < 2 * me.cost) continue;
        int cls = d2 == 2 * me.cost ? 1 : 2;
        int i = me.u, j = me.v;
        if (!p[i].is_center() && !p[j].is_center() && p[i].ray != p[j].ray) {
            bi.push_back({ports_of[i][1], ports_of[j][1], cls, e});
            continue;
        }
        if (p[i].t < p[j].t) std::swap(i, j);
        int facing = p[j].is_center() ? ports_of[j][p[i].ray] : ports_of[j][0];
        bi.push_back({ports_of[i][1], facing, cls, e});
    }

    auto plus_node = [](int port) { return 2 * port; };
    auto minus_node = [](int port) { return 2 * port + 1; };
    std::vector<FlowEdge> fe;
    fe.reserve(2 * bi.size() + k);
    for (const DpNetwork::BiEdge& b : bi) {
        if (b.cls == 0) {
            fe.push_back({plus_node(b.u), minus_node(b.v), Rat(0), ExtRat::pos_inf()});
            fe.push_back({plus_node(b.v), minus_node(b.u), Rat(0), ExtRat::pos_inf()});
        } else {
            Rat c(inst.edges()[b.inst_edge].cap);
            Rat lo = b.cls == 2 ? c : Rat(0);
            fe.push_back({minus_node(b.u), plus_node(b.v), lo, ExtRat(c)});
            fe.push_back({minus_node(b.v), plus_node(b.u), lo, ExtRat(c)});
        }
    }
    for (int s = 0; s < k; ++s) {
        Rat r(inst.terminals()[s].demand);
        bool at_center = p[inst.terminals()[s].node].is_center();
        fe.push_back({minus_node(self_port[s]), plus_node(self_port[s]), r,
                      at_center ? ExtRat::pos_inf() : ExtRat(r)});
    }

    std::vector<bool> in_vi(ports.size());
    for (size_t q = 0; q < ports.size(); ++q) in_vi[q] = (p[ports[q].node].t % 2) == 1;

    return DpNetwork{FlowNetwork(2 * (int)ports.size(), std::move(fe)), std::move(ports),
                     std::move(ports_of), std::move(self_port), std::move(bi),
                     std::move(in_vi)};
}

std::vector<Rat> recover_support(const DpNetwork& dp, const Circulation& phi) {
    if ((int)phi.flow.size() != dp.net.edge_count())
        throw input_error("circulation size mismatch");
    std::vector<Rat> excess(dp.net.node_count(), Rat(0));
    for (int e = 0; e < dp.net.edge_count(); ++e) {
        const FlowEdge& fe = dp.net.edges()[e];
        if (phi.flow[e] < fe.lo || fe.hi < ExtRat(phi.flow[e]))
            throw input_error("circulation violates capacity bounds");
        excess[fe.u] += phi.flow[e];
        excess[fe.v] -= phi.flow[e];
    }
    for (const Rat& x : excess)
        if (!(x == Rat(0))) throw input_error("circulation violates conservation");
    std::vector<Rat> psi(dp.bi.size());
    for (size_t b = 0; b < dp.bi.size(); ++b) {
        Rat avg = (phi.flow[2 * b] + phi.flow[2 * b + 1]) / Rat(2);
        psi[b] = dp.bi[b].cls == 0 ? -avg : avg;
    }
    return psi;
}

namespace {

// Alternating-walk extraction; all masses are doubled support values.
Multiflow decompose_with(const MultiflowInstance& inst, const DpNetwork& dp,
                         const std::vector<Rat>& psi) {
    const int k = inst.terminal_count();
    if (psi.size() != dp.bi.size()) throw input_error("support size mismatch");

    std::vector<long long> mass(dp.bi.size());
    for (size_t b = 0; b < dp.bi.size(); ++b) {
        Rat two = Rat(2) * psi[b];
        if (!two.is_integer()) throw input_error("support is not half-integral");
        const DpNetwork::BiEdge& be = dp.bi[b];
        if (be.cls == 0) {
            if (psi[b] > Rat(0)) throw input_error("support positive on a link edge");
            mass[b] = -two.num();
        } else {
            long long c = inst.edges()[be.inst_edge].cap;
            if (be.cls == 2 && !(psi[b] == Rat(c)))
                throw input_error("support must saturate a stretched edge");
            if (psi[b] < Rat(0) || psi[b] > Rat(c))
                throw input_error("support outside edge capacity");
            mass[b] = two.num();
        }
    }

    std::vector<std::vector<int>> inc_minus(dp.ports.size()), inc_net(dp.ports.size());
    for (size_t b = 0; b < dp.bi.size(); ++b) {
        auto& lists = dp.bi[b].cls == 0 ? inc_minus : inc_net;
        lists[dp.bi[b].u].push_back((int)b);
        lists[dp.bi[b].v].push_back((int)b);
    }
    std::vector<int> self_of(dp.ports.size(), -1);
    for (int s = 0; s < k; ++s) self_of[dp.self_port[s]] = s;

    std::vector<long long> ends2(k, 0);
    for (int s = 0; s < k; ++s) {
        for (int b : inc_minus[dp.self_port[s]]) ends2[s] += mass[b];
        for (int b : inc_net[dp.self_port[s]]) ends2[s] -= mass[b];
    }
    for (int s = 0; s < k; ++s) {
        long long need = 2 * inst.terminals()[s].demand;
        bool at_center = dp.ports[dp.self_port[s]].kind == DpNetwork::kSelf;
        if (ends2[s] < need || (!at_center && ends2[s] != need))
            throw input_error("support violates the demand conditions");
    }
    for (size_t q = 0; q < dp.ports.size(); ++q) {
        if (self_of[q] >= 0) continue;
        long long bal = 0;
        for (int b : inc_net[q]) bal += mass[b];
        for (int b : inc_minus[q]) bal -= mass[b];
        if (bal != 0) throw input_error("support violates conservation");
    }

    std::map<std::vector<int>, long long> acc;
    for (int s0 = 0; s0 < k; ++s0) {
        while (ends2[s0] > 0) {
            std::vector<int> nodes{inst.terminals()[s0].node};
            std::vector<int> trail;
            int cur = dp.self_port[s0];
            bool want_minus = true;
            int end_terminal = -1;
            for (int step = 0;; ++step) {
                if (step > 4 * (int)dp.ports.size())
                    throw internal_error("support decomposition does not terminate");
                int pick = -1, pick_other = INT_MAX;
                for (int b : want_minus ? inc_minus[cur] : inc_net[cur]) {
                    if (mass[b] <= 0) continue;
                    int other = dp.bi[b].u == cur ? dp.bi[b].v : dp.bi[b].u;
                    if (other < pick_other) {
                        pick_other = other;
                        pick = b;
                    }
                }
                if (pick < 0) throw internal_error("support decomposition is stuck");
                trail.push_back(pick);
                cur = pick_other;
                if (want_minus) {
                    want_minus = false;
                    int t = self_of[cur];
                    if (t >= 0 && ends2[t] > 0) {
                        end_terminal = t;
                        break;
                    }
                } else {
                    int node = dp.ports[cur].node;
                    if (std::find(nodes.begin(), nodes.end(), node) != nodes.end())
                        throw internal_error("support decomposition revisits a node");
                    nodes.push_back(node);
                    want_minus = true;
                }
            }
            long long w = std::min(ends2[s0], ends2[end_terminal]);
            for (int b : trail) w = std::min(w, mass[b]);
            ends2[s0] -= w;
            ends2[end_terminal] -= w;
            for (int b : trail) mass[b] -= w;
            if (nodes.back() < nodes.front()) std::reverse(nodes.begin(), nodes.end());
            acc[nodes] += w;
        }
    }
    for (long long m : mass)
        if (m != 0) throw internal_error("support decomposition left a residue");

    Multiflow out;
    out.reserve(acc.size());
    for (const auto& [nodes, w] : acc) out.push_back({nodes, Rat(w, 2)});
    return out;
}

// Reads one cluster's movable pattern and applies the corresponding move.
Potential apply_movable(const MultiflowInstance& inst, const Potential& p, const DpNetwork& dp,
                        const std::vector<bool>& x) {
    Potential q = p;
    for (int i = 0; i < inst.node_count(); ++i) {
        std::vector<int> plus_in;
        int minus_in = 0;
        bool own_minus = false;
        for (int port : dp.ports_of[i]) {
            if (x[2 * port]) plus_in.push_back(port);
            if (x[2 * port + 1]) {
                ++minus_in;
                if (!plus_in.empty() && plus_in.back() == port) own_minus = true;
            }
        }
        if (plus_in.empty() && minus_in == 0) continue;
        if (plus_in.size() != 1 || own_minus ||
            minus_in != (int)dp.ports_of[i].size() - 1)
            throw internal_error("violating cut is not movable");
        int kind = dp.ports[plus_in[0]].kind;
        if (kind == DpNetwork::kOSide) {
            if (--q[i].t == 0) q[i].ray = -1;
        } else if (kind == DpNetwork::kAway) {
            ++q[i].t;
        } else {
            q[i] = {kind == DpNetwork::kSelf ? inst.ray_of(i) : kind, 1};
        }
        if (q[i].t > inst.truncation())
            throw internal_error("potential escaped the truncated grid");
    }
    return q;
}

std::variant<Circulation, Potential> step_with(const MultiflowInstance& inst,
                                               const Potential& p, const DpNetwork& dp) {
    auto res = find_circulation(dp.net);
    if (std::holds_alternative<Circulation>(res))
        return std::get<Circulation>(std::move(res));

    const ViolatingCut& vc = std::get<ViolatingCut>(res);
    std::vector<bool> xi(vc.cut.size(), false), xf(vc.cut.size(), false);
    for (size_t d = 0; d < vc.cut.size(); ++d)
        if (vc.cut[d]) (dp.port_in_vi[d / 2] ? xi : xf)[d] = true;
    Potential qi = apply_movable(inst, p, dp, xi);
    Potential qf = apply_movable(inst, p, dp, xf);
    ExtRat wi = omega(inst, qi), wf = omega(inst, qf);
    Potential& next = wf <= wi ? qf : qi;
    if (!(omega(inst, next) < omega(inst, p)))
        throw internal_error("descent step failed to improve the objective");
    return std::move(next);
}

// Removes circulation mass riding directed cycles of slack arcs, so the
// support carries only terminal-to-terminal paths.
Circulation cancel_slack_cycles(const FlowNetwork& net, Circulation phi) {
    const int n = net.node_count();
    for (;;) {
        std::vector<std::vector<std::pair<int, int>>> adj(n);
        for (int e = 0; e < net.edge_count(); ++e)
            if (phi.flow[e] > net.edges()[e].lo)
                adj[net.edges()[e].u].push_back({net.edges()[e].v, e});
        std::vector<int> color(n, 0), par_node(n, -1), par_edge(n, -1);
        int cycle_from = -1, cycle_to = -1, closing = -1;
        for (int root = 0; root < n && cycle_from < 0; ++root) {
            if (color[root]) continue;
            std::vector<std::pair<int, size_t>> stack{{root, 0}};
            color[root] = 1;
            while (!stack.empty() && cycle_from < 0) {
                auto& [u, idx] = stack.back();
                if (idx == adj[u].size()) {
                    color[u] = 2;
                    stack.pop_back();
                    continue;
                }
                auto [v, e] = adj[u][idx++];
                if (color[v] == 0) {
                    color[v] = 1;
                    par_node[v] = u;
                    par_edge[v] = e;
                    stack.push_back({v, 0});
                } else if (color[v] == 1) {
                    cycle_from = v;
                    cycle_to = u;
                    closing = e;
                }
            }
        }
        if (cycle_from < 0) return phi;
        std::vector<int> cyc{closing};
        for (int u = cycle_to; u != cycle_from; u = par_node[u]) cyc.push_back(par_edge[u]);
        Rat slack = phi.flow[cyc[0]] - net.edges()[cyc[0]].lo;
        for (int e : cyc) slack = std::min(slack, phi.flow[e] - net.edges()[e].lo);
        for (int e : cyc) phi.flow[e] -= slack;
    }
}

}  // namespace

Multiflow decompose_support(const MultiflowInstance& inst, const Potential& p,
                            const std::vector<Rat>& psi) {
    return decompose_with(inst, build_dp(inst, p), psi);
}

std::variant<Circulation, Potential> steepest_direction(const MultiflowInstance& inst,
                                                        const Potential& p) {
    return step_with(inst, p, build_dp(inst, p));
}

namespace {

// Largest routable amount from terminal s to the other terminals.
Rat terminal_connectivity(const MultiflowInstance& inst, int s) {
    const int n = inst.node_count(), sink = n;
    std::vector<FlowEdge> fe;
    for (const MultiflowEdge& e : inst.edges()) {
        fe.push_back({e.u, e.v, Rat(0), ExtRat(Rat(e.cap))});
        fe.push_back({e.v, e.u, Rat(0), ExtRat(Rat(e.cap))});
    }
    for (const TerminalDemand& td : inst.terminals())
        if (inst.ray_of(td.node) != s)
            fe.push_back({td.node, sink, Rat(0), ExtRat::pos_inf()});
    return max_flow(FlowNetwork(n + 1, std::move(fe)), inst.terminals()[s].node, sink).value;
}

}  // namespace

McmfResult solve_mcmf(const MultiflowInstance& inst) {
    McmfResult out;
    for (int s = 0; s < inst.terminal_count(); ++s) {
        const TerminalDemand& td = inst.terminals()[s];
        if (td.demand == 0) continue;
        Rat reach = terminal_connectivity(inst, s);
        if (reach < Rat(td.demand)) {
            std::ostringstream msg;
            msg << "terminal " << td.node << " can route only " << reach.str() << " of "
                << td.demand << " demanded units";
            out.status = 1;
            out.message = msg.str();
            return out;
        }
    }

    Potential p(inst.node_count());
    const long long guard = 4 * (inst.truncation() + 4);
    out.iterations = 1;
    for (;;) {
        if (out.iterations > guard) throw internal_error("descent failed to terminate");
        DpNetwork dp = build_dp(inst, p);
        auto step = step_with(inst, p, dp);
        if (std::holds_alternative<Potential>(step)) {
            p = std::get<Potential>(std::move(step));
            ++out.iterations;
            continue;
        }
        Circulation phi =
            cancel_slack_cycles(dp.net, std::get<Circulation>(std::move(step)));
        std::vector<Rat> psi = recover_support(dp, phi);
        out.flow = decompose_with(inst, dp, psi);
        out.potential = p;
        out.cost = -omega(inst, p).value();
        for (const StarVertex& x : p)
            if (x.t >= inst.truncation())
                throw internal_error("optimal potential touched the grid truncation");
        Rat primal(0);
        std::map<std::pair<int, int>, Rat> load;
        for (const FlowPath& fp : out.flow) {
            if (!(Rat(2) * fp.value).is_integer())
                throw internal_error("multiflow is not half-integral");
            for (size_t j = 0; j + 1 < fp.nodes.size(); ++j) {
                int a = std::min(fp.nodes[j], fp.nodes[j + 1]);
                int b = std::max(fp.nodes[j], fp.nodes[j + 1]);
                load[{a, b}] += fp.value;
            }
        }
        for (const MultiflowEdge& e : inst.edges()) {
            auto it = load.find({std::min(e.u, e.v), std::max(e.u, e.v)});
            if (it == load.end()) continue;
            long long d2 = star_hops(p[e.u], p[e.v]);
            if (d2 < 2 * e.cost) continue;
            // Stretched edges carry exactly their capacity; the rest of the
            // pair load sits on tight edges whose cost is half the stretch.
            if (d2 > 2 * e.cost) {
                primal += Rat(e.cost * e.cap);
                it->second -= Rat(e.cap);
            }
        }
        for (const auto& [uv, rest] : load) {
            if (rest == Rat(0)) continue;
            long long d2 = star_hops(p[uv.first], p[uv.second]);
            primal += rest * Rat(d2, 2);
        }
        if (!(primal == out.cost))
            throw internal_error("primal cost does not match the dual value");
        return out;
    }
}

VerifyReport verify_optimality(const MultiflowInstance& inst, const Multiflow& flow,
                               const Potential& p) {
    VerifyReport rep;
    auto add = [&](const std::string& s) { rep.violations.push_back(s); };
    validate_potential(inst, p);
    if (!respects_rays(inst, p)) add("potential violates the terminal-ray constraints");

    // Parallel edges are indistinguishable in a node-sequence path, so loads
    // and slackness are checked per node pair.
    std::map<std::pair<int, int>, Rat> load;
    std::vector<Rat> ends(inst.terminal_count(), Rat(0));
    for (size_t pi = 0; pi < flow.size(); ++pi) {
        const FlowPath& fp = flow[pi];
        std::ostringstream tag;
        tag << "path " << pi;
        if (fp.nodes.size() < 2) {
            add(tag.str() + " has fewer than two nodes");
            continue;
        }
        int s = inst.ray_of(fp.nodes.front()), t = inst.ray_of(fp.nodes.back());
        if (s < 0 || t < 0 || fp.nodes.front() == fp.nodes.back())
            add(tag.str() + " does not connect two distinct terminals");
        if (!(fp.value > Rat(0))) add(tag.str() + " has a nonpositive value");
        if (!(Rat(2) * fp.value).is_integer()) add(tag.str() + " value is not half-integral");
        if (s >= 0) ends[s] += fp.value;
        if (t >= 0 && fp.nodes.front() != fp.nodes.back()) ends[t] += fp.value;
        long long total2 = 0;
        for (size_t j = 0; j + 1 < fp.nodes.size(); ++j) {
            int a = fp.nodes[j], b = fp.nodes[j + 1];
            if (a < 0 || a >= inst.node_count() || b < 0 || b >= inst.node_count()) {
                add(tag.str() + " leaves the node range");
                break;
            }
            load[{std::min(a, b), std::max(a, b)}] += fp.value;
            total2 += star_hops(p[a], p[b]);
        }
        if (total2 != star_hops(p[fp.nodes.front()], p[fp.nodes.back()]))
            add(tag.str() + " is not geodesic under the potential embedding");
    }

    // Per-pair capacity splits by edge class.
    std::map<std::pair<int, int>, std::pair<Rat, Rat>> caps;  // {nonslack cap, forced}
    Rat dual_cost(0);
    for (const MultiflowEdge& e : inst.edges()) {
        auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        caps.emplace(key, std::make_pair(Rat(0), Rat(0)));
        long long d2 = star_hops(p[e.u], p[e.v]);
        if (d2 >= 2 * e.cost) caps[key].first += Rat(e.cap);
        if (d2 > 2 * e.cost) caps[key].second += Rat(e.cap);
    }
    for (const auto& [key, lohi] : caps) {
        Rat l = Rat(0);
        if (auto it = load.find(key); it != load.end()) l = it->second;
        std::ostringstream tag;
        tag << "edge " << key.first << "-" << key.second;
        if (l > lohi.first) add(tag.str() + " carries flow beyond its tight capacity");
        if (l < lohi.second) add(tag.str() + " is stretched but not saturated");
    }
    for (const auto& [key, l] : load)
        if (!caps.count(key))
            add("a path uses the missing edge " + std::to_string(key.first) + "-" +
                std::to_string(key.second));

    for (int s = 0; s < inst.terminal_count(); ++s) {
        const TerminalDemand& td = inst.terminals()[s];
        std::ostringstream tag;
        tag << "terminal " << td.node;
        if (ends[s] < Rat(td.demand)) add(tag.str() + " misses its demand");
        if (!p[td.node].is_center() && !(ends[s] == Rat(td.demand)))
            add(tag.str() + " is off-center but its demand is not tight");
    }

    // Duality gap: cost attribution is exact because tight parallel edges
    // share the same cost.
    Rat primal(0);
    for (const auto& [key, l] : load) {
        if (!caps.count(key)) continue;
        Rat rest = l;
        long long d2 = star_hops(p[key.first], p[key.second]);
        for (const MultiflowEdge& e : inst.edges()) {
            if (std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v)) != key) continue;
            if (star_hops(p[e.u], p[e.v]) > 2 * e.cost) {
                primal += Rat(e.cost * e.cap);
                rest -= Rat(e.cap);
            }
        }
        primal += rest * Rat(d2, 2);
    }
    ExtRat w = omega(inst, p);
    if (!w.finite() || !(primal == -w.value()))
        add("primal cost does not match the dual value");

    // Cut covering: the loads alone must route every demand.
    for (int s = 0; s < inst.terminal_count(); ++s) {
        const TerminalDemand& td = inst.terminals()[s];
        if (td.demand == 0) continue;
        std::vector<FlowEdge> fe;
        for (const auto& [key, l] : load) {
            if (!(l > Rat(0))) continue;
            fe.push_back({key.first, key.second, Rat(0), ExtRat(l)});
            fe.push_back({key.second, key.first, Rat(0), ExtRat(l)});
        }
        int sink = inst.node_count();
        for (const TerminalDemand& other : inst.terminals())
            if (other.node != td.node)
                fe.push_back({other.node, sink, Rat(0), ExtRat::pos_inf()});
        Rat reach =
            max_flow(FlowNetwork(inst.node_count() + 1, std::move(fe)), td.node, sink).value;
        if (reach < Rat(td.demand)) {
            std::ostringstream tag;
            tag << "support does not cover the demand cut at terminal " << td.node;
            add(tag.str());
        }
    }
    return rep;
}

long long default_dual_radius(const MultiflowInstance& inst) {
    return 2 * inst.node_count() * inst.max_cost();
}

DualScan dual_brute_force(const MultiflowInstance& inst, long long radius, long long cap) {
    if (radius < 0) throw input_error("negative enumeration radius");
    const int n = inst.node_count(), k = inst.terminal_count();

    std::vector<std::vector<StarVertex>> choices(n);
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<StarVertex>& c = choices[i];
        c.push_back({-1, 0});
        int ray = inst.ray_of(i);
        for (int s = 0; s < k; ++s) {
            if (ray >= 0 && s != ray) continue;
            for (long long t = 1; t <= radius; ++t) c.push_back({s, t});
        }
        if (total > cap / (long long)c.size())
            throw cap_exceeded("dual enumeration over cap");
        total *= (long long)c.size();
    }

    // Edge terms are charged when their second endpoint is placed.
    std::vector<std::vector<MultiflowEdge>> charged(n);
    for (const MultiflowEdge& e : inst.edges())
        charged[std::max(e.u, e.v)].push_back(e);

    Potential cur(n);
    long long best2 = LLONG_MAX;
    std::vector<Potential> argmins;
    auto recurse = [&](auto&& self, int i, long long w2) -> void {
        if (i == n) {
            if (w2 < best2) {
                best2 = w2;
                argmins.clear();
            }
            if (w2 == best2) argmins.push_back(cur);
            return;
        }
        int ray = inst.ray_of(i);
        long long demand = ray >= 0 ? inst.terminals()[ray].demand : 0;
        for (const StarVertex& x : choices[i]) {
            cur[i] = x;
            long long w = w2 - demand * x.t;
            for (const MultiflowEdge& e : charged[i]) {
                long long d2 = star_hops(cur[e.u], cur[e.v]);
                if (d2 > 2 * e.cost) w += e.cap * (d2 - 2 * e.cost);
            }
            self(self, i + 1, w);
        }
    };
    recurse(recurse, 0, 0);

    DualScan out;
    out.best = Rat(best2, 2);
    out.argmin = argmins.front();
    out.argmins = std::move(argmins);
    return out;
}

}  // namespace dca
