#pragma once

#include <variant>
#include <vector>

#include "dca/rational.hpp"

namespace dca {

struct FlowEdge {
    int u = 0, v = 0;
    Rat lo;      // finite, nonnegative
    ExtRat hi;   // at least lo, may be +infinity
};

// Directed network with a rational capacity interval per edge.
class FlowNetwork {
  public:
    FlowNetwork(int n, std::vector<FlowEdge> edges);

    int node_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    const std::vector<FlowEdge>& edges() const { return edges_; }

  private:
    int n_;
    std::vector<FlowEdge> edges_;
};

struct MaxFlowResult {
    Rat value;
    std::vector<Rat> flow;  // per edge
    std::vector<bool> cut;  // source side of a minimum cut: the smallest one
};

// Exact shortest-augmenting-path maximum flow.  Requires every lower
// capacity to be zero; infinite upper capacities are fine as long as the
// value stays bounded.
MaxFlowResult max_flow(const FlowNetwork& net, int s, int t);

// kappa(X) = lo(delta_in(X)) - hi(delta_out(X)); -infinity as soon as an
// infinite-capacity edge leaves X.
ExtRat kappa(const FlowNetwork& net, const std::vector<bool>& x);

struct Circulation {
    std::vector<Rat> flow;  // per edge, within [lo, hi], conserved everywhere
};

struct ViolatingCut {
    std::vector<bool> cut;  // inclusion-minimal maximizer of kappa
    Rat kappa_value;        // its kappa, strictly positive
};

// Hoffman feasibility: a circulation when every kappa is nonpositive,
// otherwise the unique minimal maximum violating cut.
std::variant<Circulation, ViolatingCut> find_circulation(const FlowNetwork& net);

}  // namespace dca
