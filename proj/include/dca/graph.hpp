#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dca/rational.hpp"

namespace dca {

// Finite undirected graph with exact rational edge lengths (default 1).
// No self-loops or parallel edges; vertices are 0..n-1.
class Graph {
  public:
    Graph(int n, std::vector<std::pair<int, int>> edges,
          std::vector<Rat> lengths = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const Rat& length(int e) const { return lengths_[e]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    // Index into edges(), or -1.
    int edge_index(int u, int v) const;
    bool unit_lengths() const;
    bool is_connected() const;
    bool is_tree() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;  // stored with u < v
    std::vector<Rat> lengths_;
    std::vector<std::vector<int>> adj_;
};

// Exact all-pairs shortest-path distances.  Throws input_error if g is
// disconnected (the metric would not be total).
std::vector<std::vector<Rat>> metric(const Graph& g);

// All medians of a vertex triple: vertices y with
// d(xi,y) + d(y,xj) = d(xi,xj) for all three pairs.  Unit lengths required.
std::vector<int> medians(const Graph& g, int x1, int x2, int x3);

// Exhaustive triple checks.  Connected unit-length input required; the
// number of triples is capped by enum_cap() unless force is set.
bool is_median_graph(const Graph& g, bool force = false);
bool is_modular_graph(const Graph& g, bool force = false);

// Each edge as an ordered pair (tail, head).
struct Orientation {
    std::vector<std::pair<int, int>> arcs;  // parallel to g.edges()
};

// True when for every 4-cycle (x1,x2,x3,x4) the orientation has
// x1->x2 exactly when x4->x3.
bool orientation_satisfies_cycle_rule(const Graph& g, const Orientation& o);
bool orientation_is_acyclic(const Graph& g, const Orientation& o);

// Lexicographically least acyclic orientation satisfying the 4-cycle rule,
// or absent.  Edge directions are solved as parity classes (union-find over
// the opposite-edge constraints); acyclicity is then searched over the free
// class choices and both properties are re-verified on the result.
std::optional<Orientation> find_admissible_orientation(const Graph& g);

}  // namespace dca
