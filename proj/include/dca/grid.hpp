#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dca/graph.hpp"
#include "dca/rational.hpp"
#include "dca/semilattice.hpp"

namespace dca {

// Tree with a 2-coloring; each edge is ordered black below white.
class ZigzagTree {
  public:
    explicit ZigzagTree(Graph tree, int black_rep = 0);

    const Graph& tree() const { return tree_; }
    int vertex_count() const { return tree_.vertex_count(); }
    bool is_black(int v) const { return black_[v]; }
    // v <= u in the zigzag order.
    bool leq(int v, int u) const;
    int distance(int u, int v) const;
    std::vector<int> path(int u, int v) const;  // inclusive endpoints
    // Unique (a,b) on the u-v path with d(u,a) = d(b,v) and d(a,b) <= 1;
    // a is the nearer point to u.
    std::pair<int, int> midpoint_pair(int u, int v) const;
    // Distance from v to the nearest leaf (degree-1 vertex); INT_MAX-ish
    // when the tree has no leaf.
    int leaf_distance(int v) const { return leaf_dist_[v]; }

  private:
    Graph tree_;
    std::vector<bool> black_;
    std::vector<int> leaf_dist_;
};

// Function table over encoded grid points; points absent from the table
// read as +infinity.
class GridFunction {
  public:
    GridFunction(std::vector<long long> points, std::vector<ExtRat> values);

    const std::vector<long long>& points() const { return points_; }
    const std::vector<ExtRat>& values() const { return values_; }
    ExtRat value_at(long long p) const;
    bool contains(long long p) const;

  private:
    std::vector<long long> points_;  // sorted, unique
    std::vector<ExtRat> values_;
};

enum class LocalSide { ideal, filter };

// Restriction of a grid function to the ideal or filter of a point,
// reindexed along the isomorphism onto a product of stars S_k (tree grids)
// or twisted stars S_{k,l} (twisted grids).
struct Localization {
    bool twisted = false;
    std::vector<int> ks, ls;              // per component; ls unused for tree grids
    std::vector<long long> grid_points;   // by local index, row-major over components
    std::vector<ExtRat> values;           // g extended by +infinity off the table
    long long size() const { return (long long)values.size(); }
    bool submodular() const;              // dispatches on twisted
};

struct SdaResult {
    long long minimizer;
    ExtRat value;
    std::vector<long long> trace;  // visited points, starting point included
};

// Oracle minimizing a localization table; returns (local index, value).
using LocalOracle = std::function<std::pair<long long, ExtRat>(const Localization&)>;

// Product G^n of one zigzag tree with componentwise order and midpoints.
class TreeGrid {
  public:
    TreeGrid(ZigzagTree base, int n);

    const ZigzagTree& base() const { return base_; }
    int dimension() const { return n_; }
    long long point_count() const { return count_; }
    long long encode(const std::vector<int>& tuple) const;
    std::vector<int> decode(long long p) const;

    bool leq(long long x, long long y) const;
    std::pair<long long, long long> midpoints(long long x, long long y) const;
    int d_delta(long long x, long long y) const;  // max of componentwise tree distances
    Localization localize(const GridFunction& g, long long x, LocalSide side) const;

  private:
    ZigzagTree base_;
    int n_;
    long long count_;
};

// Product (G boxtimes H)^n of the starred 4-cycle graph of two zigzag
// trees.  Component vertices are the originals (g,h) = g*|V_H|+h followed
// by the squares |V_G|*|V_H| + eg*|E_H|+eh, one per G-edge/H-edge pair.
class TwistedTreeGrid {
  public:
    TwistedTreeGrid(ZigzagTree g, ZigzagTree h, int n);

    const ZigzagTree& tree_g() const { return g_; }
    const ZigzagTree& tree_h() const { return h_; }
    int dimension() const { return n_; }
    int base_count() const { return base_count_; }
    long long point_count() const { return count_; }
    long long encode(const std::vector<int>& tuple) const;
    std::vector<int> decode(long long p) const;

    int original_id(int gv, int hv) const;
    int square_id(int ge, int he) const;
    bool is_square(int u) const { return u >= orig_count_; }
    // Class of an original vertex: black iff the tree colors agree.
    bool is_black(int u) const;
    // G-side vertices covered by u (one vertex, or an edge's endpoints).
    std::pair<int, int> extent_g(int u) const;  // (lo, hi) or (v, v)
    std::pair<int, int> extent_h(int u) const;
    const std::vector<int>& base_neighbors(int u) const { return adj_[u]; }
    // Safe interior: every extent vertex at distance >= 3 from every leaf.
    bool safe(int u) const;

    bool leq(long long x, long long y) const;
    std::pair<long long, long long> midpoints(long long x, long long y) const;
    int d_delta(long long x, long long y) const;  // max of componentwise distances
    Localization localize(const GridFunction& g, long long x, LocalSide side) const;

  private:
    int comp_leq(int u, int v) const;
    std::pair<int, int> comp_midpoints(int u, int v) const;

    ZigzagTree g_, h_;
    int n_;
    int orig_count_, base_count_;
    long long count_;
    std::vector<bool> black_;            // originals only
    std::vector<std::vector<int>> adj_;  // G boxtimes H adjacency
    std::vector<std::vector<int>> delta_adj_;  // adjacency plus edge-sharing squares
};

// g(x) + g(y) >= g(x bullet y) + g(x circ y) over all pairs of the table's
// point set, which must be midpoint-closed.
template <class GridT>
bool is_lconvex(const GridT& grid, const GridFunction& g);

// Effective domain connected through pairwise-comparable steps.
template <class GridT>
bool is_chain_connected(const GridT& grid, const GridFunction& g);

// Steepest descent: repeatedly move to the oracle minimizer over the ideal
// and filter localizations, preferring the filter side on value ties, until
// no strict improvement remains.
template <class GridT>
SdaResult sda_minimize(const GridT& grid, const GridFunction& g, long long x0,
                       const LocalOracle& oracle = {});

extern template bool is_lconvex<TreeGrid>(const TreeGrid&, const GridFunction&);
extern template bool is_lconvex<TwistedTreeGrid>(const TwistedTreeGrid&, const GridFunction&);
extern template bool is_chain_connected<TreeGrid>(const TreeGrid&, const GridFunction&);
extern template bool is_chain_connected<TwistedTreeGrid>(const TwistedTreeGrid&,
                                                         const GridFunction&);
extern template SdaResult sda_minimize<TreeGrid>(const TreeGrid&, const GridFunction&, long long,
                                                 const LocalOracle&);
extern template SdaResult sda_minimize<TwistedTreeGrid>(const TwistedTreeGrid&,
                                                        const GridFunction&, long long,
                                                        const LocalOracle&);

}  // namespace dca
