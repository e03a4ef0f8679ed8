#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dca/errors.hpp"
#include "dca/graph.hpp"
#include "dca/rational.hpp"

namespace dca {

// Multifacility placement on a connected unit-length graph: assign n
// variables to vertices minimizing attraction to fixed vertices plus
// pairwise coupling, both priced by the shortest-path metric.
class ZeroExtInstance {
  public:
    // b is n x |V| (pull of variable i toward vertex v), c is n x n
    // symmetric with zero diagonal; all weights nonnegative.
    ZeroExtInstance(Graph g, int n, std::vector<std::vector<Rat>> b,
                    std::vector<std::vector<Rat>> c);

    const Graph& graph() const { return g_; }
    int variables() const { return n_; }
    const Rat& pull(int i, int v) const { return b_[i][v]; }
    const Rat& coupling(int i, int j) const { return c_[i][j]; }
    const std::vector<std::vector<Rat>>& dist() const { return dist_; }

  private:
    Graph g_;
    int n_;
    std::vector<std::vector<Rat>> b_, c_;
    std::vector<std::vector<Rat>> dist_;
};

// The placement cost of x.
Rat objective(const ZeroExtInstance& inst, const std::vector<int>& x);

// Exact optimum by full enumeration, lexicographically least argmin.
std::pair<std::vector<int>, Rat> brute_force_solve(const ZeroExtInstance& inst,
                                                   long long cap = enum_cap());

// Vertex order generated by an admissible orientation (arcs point from the
// covered vertex up); absent when no admissible orientation exists.
struct OrientedOrder {
    Orientation orientation;
    std::vector<std::vector<bool>> leq;
    std::vector<std::vector<int>> ideal;   // per v, sorted u with u below v
    std::vector<std::vector<int>> filter;  // per v, sorted u with u above v
};
std::optional<OrientedOrder> oriented_order(const Graph& g);

struct ZeroExtSolution {
    std::vector<int> argmin;
    Rat value;
    long long iterations;  // visited points including start and final check
};

// Why the descent solver refused the graph.
struct ZeroExtRejection {
    std::string reason;
};

// Steepest descent over the oriented product order.  Each round enumerates
// the full downward and upward boxes at x exactly; ties between the two
// sides prefer the upward box.  Rejects graphs that are not modular or not
// orientable, on which the problem is intractable.
std::variant<ZeroExtSolution, ZeroExtRejection> sda_solve(const ZeroExtInstance& inst,
                                                          long long cap = enum_cap());

}  // namespace dca
