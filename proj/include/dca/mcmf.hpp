#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dca/errors.hpp"
#include "dca/flow.hpp"
#include "dca/rational.hpp"

namespace dca {

struct MultiflowEdge {
    int u = 0, v = 0;
    long long cap = 1;   // positive integer
    long long cost = 1;  // positive integer
};

struct TerminalDemand {
    int node = 0;
    long long demand = 0;  // nonnegative integer
};

// Undirected capacitated network with edge costs and terminal demands.
class MultiflowInstance {
  public:
    MultiflowInstance(int n, std::vector<MultiflowEdge> edges,
                      std::vector<TerminalDemand> terminals);

    int node_count() const { return n_; }
    const std::vector<MultiflowEdge>& edges() const { return edges_; }
    // Sorted by node id; a terminal's position here is its ray index.
    const std::vector<TerminalDemand>& terminals() const { return terminals_; }
    int terminal_count() const { return (int)terminals_.size(); }
    int ray_of(int node) const { return ray_of_[node]; }  // -1 for nonterminals
    long long max_cost() const { return max_cost_; }
    // Ray length of the truncated subdivided star the duals live on.
    long long truncation() const { return 2 * n_ * max_cost_ + 4; }

  private:
    int n_;
    std::vector<MultiflowEdge> edges_;
    std::vector<TerminalDemand> terminals_;
    std::vector<int> ray_of_;
    long long max_cost_;
};

// Vertex of the subdivided star: the center (t == 0, ray == -1) or the t-th
// vertex out on one ray.  Edges have length 1/2; t counts edges.
struct StarVertex {
    int ray = -1;
    long long t = 0;

    bool is_center() const { return t == 0; }
    friend bool operator==(const StarVertex& a, const StarVertex& b) {
        return a.ray == b.ray && a.t == b.t;
    }
    friend bool operator<(const StarVertex& a, const StarVertex& b) {
        return a.ray != b.ray ? a.ray < b.ray : a.t < b.t;
    }
};

// Star distance in edge hops, i.e. twice the metric distance.
long long star_hops(const StarVertex& x, const StarVertex& y);

// One coordinate per original node; terminal coordinates stay on their ray.
using Potential = std::vector<StarVertex>;

// Dual objective: minus the collected demand profit plus the congestion
// charge on edges stretched beyond their cost; +infinity off the
// terminal-ray constraint set.
ExtRat omega(const MultiflowInstance& inst, const Potential& p);

struct FlowPath {
    std::vector<int> nodes;  // endpoints are distinct terminals
    Rat value;               // positive, half-integral
};
using Multiflow = std::vector<FlowPath>;

// Split-node circulation network certifying optimality of a potential.
// Each original node becomes a cluster of ports; each port u becomes the
// directed pair u+ = 2*port, u- = 2*port+1.
struct DpNetwork {
    // Port kinds: 0..k-1 face a ray (center clusters), kAway points away
    // from the center, kOSide toward it, kSelf is a terminal's own node in
    // a center cluster.
    static constexpr int kAway = -1, kOSide = -2, kSelf = -3;
    struct Port {
        int node;
        int kind;
    };
    // Undirected stage edges; cls 0 = link (sign --), 1 = tight network
    // edge [0, c], 2 = overtight network edge [c, c].
    struct BiEdge {
        int u, v;       // port ids
        int cls;
        int inst_edge;  // instance edge id for cls 1/2, -1 for links
    };

    FlowNetwork net;  // 2*ports nodes; edges 2b, 2b+1 per BiEdge b, then one
                      // demand edge per terminal
    std::vector<Port> ports;
    std::vector<std::vector<int>> ports_of;  // per original node
    std::vector<int> self_port;              // per terminal index
    std::vector<BiEdge> bi;
    std::vector<bool> port_in_vi;  // port belongs to V_I (coordinate in W)
};

DpNetwork build_dp(const MultiflowInstance& inst, const Potential& p);

// Per-BiEdge support values from a feasible circulation: the average of the
// two directed copies, negated on link edges.
std::vector<Rat> recover_support(const DpNetwork& dp, const Circulation& phi);

// Alternating-walk extraction of terminal-to-terminal paths whose signed
// indicator sum reproduces the support.
Multiflow decompose_support(const MultiflowInstance& inst, const Potential& p,
                            const std::vector<Rat>& psi);

// One descent step: a feasible circulation proves p optimal; otherwise the
// minimal maximum violating cut yields the improving neighbor potential.
std::variant<Circulation, Potential> steepest_direction(const MultiflowInstance& inst,
                                                        const Potential& p);

struct McmfResult {
    int status = 0;  // 0 solved, 1 demands infeasible
    std::string message;
    Multiflow flow;
    Potential potential;
    Rat cost;
    int iterations = 0;  // visited potentials, final one included
};

McmfResult solve_mcmf(const MultiflowInstance& inst);

struct VerifyReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Feasibility plus the four slackness conditions plus the duality gap; every
// failure becomes one violation line.
VerifyReport verify_optimality(const MultiflowInstance& inst, const Multiflow& flow,
                               const Potential& p);

struct DualScan {
    Rat best;
    Potential argmin;
    std::vector<Potential> argmins;
};

// Exact minimum of the dual objective over all potentials with every
// coordinate within `radius` hops of the center.
DualScan dual_brute_force(const MultiflowInstance& inst, long long radius,
                          long long cap = enum_cap());

long long default_dual_radius(const MultiflowInstance& inst);

// Largest componentwise hop distance; the descent iteration metric.
long long potential_hop_distance(const Potential& a, const Potential& b);

}  // namespace dca
