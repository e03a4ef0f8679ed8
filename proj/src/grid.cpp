#include "dca/grid.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "dca/errors.hpp"

namespace dca {

namespace {

constexpr int kNoLeaf = std::numeric_limits<int>::max() / 4;

std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> d(g.vertex_count(), -1);
    std::deque<int> q{src};
    d[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (d[w] < 0) {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
    }
    return d;
}

long long power_count(long long base, int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) {
        if (c > (1LL << 60) / std::max<long long>(base, 1))
            throw input_error("grid has too many points");
        c *= base;
    }
    return c;
}

int floordiv2(int s) { return (s - (((s % 2) + 2) % 2)) / 2; }

// Midpoint pair of the integer interval [a,b] on the zigzag line where the
// even class is the lower one; first = lower, second = upper.
std::pair<int, int> zig_pair(int a, int b) {
    int s = a + b;
    int m = floordiv2(s);
    if ((s & 1) == 0) return {m, m};
    int even = ((m & 1) == 0) ? m : m + 1;
    int odd = (even == m) ? m + 1 : m;
    return {even, odd};
}

}  // namespace

// ---- ZigzagTree ------------------------------------------------------------

ZigzagTree::ZigzagTree(Graph tree, int black_rep) : tree_(std::move(tree)) {
    if (!tree_.is_tree()) throw input_error("zigzag tree must be a tree");
    if (!tree_.unit_lengths()) throw input_error("zigzag tree must have unit edge lengths");
    int n = tree_.vertex_count();
    if (black_rep < 0 || black_rep >= n) throw input_error("black representative out of range");
    auto d = bfs_dist(tree_, black_rep);
    black_.resize(n);
    for (int v = 0; v < n; ++v) black_[v] = (d[v] % 2) == 0;
    // Multi-source distance to the nearest degree-1 vertex.
    leaf_dist_.assign(n, kNoLeaf);
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
        if (tree_.neighbors(v).size() == 1) {
            leaf_dist_[v] = 0;
            q.push_back(v);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : tree_.neighbors(v))
            if (leaf_dist_[w] == kNoLeaf) {
                leaf_dist_[w] = leaf_dist_[v] + 1;
                q.push_back(w);
            }
    }
}

bool ZigzagTree::leq(int v, int u) const {
    if (v == u) return true;
    return black_[v] && tree_.has_edge(v, u);
}

int ZigzagTree::distance(int u, int v) const { return bfs_dist(tree_, u)[v]; }

std::vector<int> ZigzagTree::path(int u, int v) const {
    int n = tree_.vertex_count();
    std::vector<int> par(n, -1), d(n, -1);
    std::deque<int> q{u};
    d[u] = 0;
    while (!q.empty()) {
        int w = q.front();
        q.pop_front();
        for (int z : tree_.neighbors(w))
            if (d[z] < 0) {
                d[z] = d[w] + 1;
                par[z] = w;
                q.push_back(z);
            }
    }
    std::vector<int> p;
    for (int w = v; w != -1; w = par[w]) p.push_back(w);
    std::reverse(p.begin(), p.end());
    if (p.front() != u) throw internal_error("disconnected tree path");
    return p;
}

std::pair<int, int> ZigzagTree::midpoint_pair(int u, int v) const {
    auto p = path(u, v);
    int m = (int)p.size() - 1;
    if (m % 2 == 0) return {p[m / 2], p[m / 2]};
    return {p[(m - 1) / 2], p[(m + 1) / 2]};
}

// ---- GridFunction ----------------------------------------------------------

GridFunction::GridFunction(std::vector<long long> points, std::vector<ExtRat> values) {
    if (points.size() != values.size()) throw input_error("points/values size mismatch");
    if (points.empty()) throw input_error("empty function table");
    std::vector<size_t> idx(points.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return points[a] < points[b]; });
    points_.reserve(points.size());
    values_.reserve(points.size());
    bool finite = false;
    for (size_t i : idx) {
        if (!points_.empty() && points_.back() == points[i])
            throw input_error("duplicate grid point in table");
        if (values[i].is_neg_inf()) throw input_error("table value is minus infinity");
        finite |= !values[i].is_pos_inf();
        points_.push_back(points[i]);
        values_.push_back(values[i]);
    }
    if (!finite) throw input_error("empty effective domain");
}

ExtRat GridFunction::value_at(long long p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return ExtRat::pos_inf();
    return values_[it - points_.begin()];
}

bool GridFunction::contains(long long p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

// ---- Localization ----------------------------------------------------------

bool Localization::submodular() const {
    if (twisted) return is_kl_submodular(ks, ls, values);
    return is_k_submodular(ks, values);
}

namespace {

// Assembles the local table from per-component star point lists; the local
// index is row-major over components.
Localization assemble_localization(bool twisted, std::vector<int> ks, std::vector<int> ls,
                                   const std::vector<std::vector<int>>& stars,
                                   const std::vector<int>& x,
                                   const std::function<long long(const std::vector<int>&)>& enc,
                                   const GridFunction& g) {
    Localization loc;
    loc.twisted = twisted;
    loc.ks = std::move(ks);
    loc.ls = std::move(ls);
    long long total = 1;
    for (const auto& s : stars) total *= (long long)s.size();
    loc.grid_points.reserve(total);
    loc.values.reserve(total);
    std::vector<int> tuple = x;
    for (long long idx = 0; idx < total; ++idx) {
        long long r = idx;
        for (int i = (int)stars.size() - 1; i >= 0; --i) {
            tuple[i] = stars[i][r % stars[i].size()];
            r /= (long long)stars[i].size();
        }
        long long p = enc(tuple);
        loc.grid_points.push_back(p);
        loc.values.push_back(g.value_at(p));
    }
    return loc;
}

}  // namespace

// ---- TreeGrid ----------------------------------------------------------------

TreeGrid::TreeGrid(ZigzagTree base, int n) : base_(std::move(base)), n_(n) {
    if (n < 1) throw input_error("grid dimension must be positive");
    count_ = power_count(base_.vertex_count(), n);
}

long long TreeGrid::encode(const std::vector<int>& tuple) const {
    if ((int)tuple.size() != n_) throw input_error("tuple dimension mismatch");
    long long p = 0;
    for (int v : tuple) {
        if (v < 0 || v >= base_.vertex_count()) throw input_error("vertex out of range");
        p = p * base_.vertex_count() + v;
    }
    return p;
}

std::vector<int> TreeGrid::decode(long long p) const {
    if (p < 0 || p >= count_) throw input_error("grid point out of range");
    std::vector<int> t(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        t[i] = (int)(p % base_.vertex_count());
        p /= base_.vertex_count();
    }
    return t;
}

bool TreeGrid::leq(long long x, long long y) const {
    auto tx = decode(x), ty = decode(y);
    for (int i = 0; i < n_; ++i)
        if (!base_.leq(tx[i], ty[i])) return false;
    return true;
}

std::pair<long long, long long> TreeGrid::midpoints(long long x, long long y) const {
    auto tx = decode(x), ty = decode(y);
    std::vector<int> lo(n_), hi(n_);
    for (int i = 0; i < n_; ++i) {
        auto [a, b] = base_.midpoint_pair(tx[i], ty[i]);
        if (a == b || base_.is_black(a)) {
            lo[i] = a;
            hi[i] = b;
        } else {
            lo[i] = b;
            hi[i] = a;
        }
    }
    return {encode(lo), encode(hi)};
}

int TreeGrid::d_delta(long long x, long long y) const {
    auto tx = decode(x), ty = decode(y);
    int d = 0;
    for (int i = 0; i < n_; ++i) d = std::max(d, base_.distance(tx[i], ty[i]));
    return d;
}

Localization TreeGrid::localize(const GridFunction& g, long long x, LocalSide side) const {
    auto tx = decode(x);
    std::vector<int> ks(n_);
    std::vector<std::vector<int>> stars(n_);
    for (int i = 0; i < n_; ++i) {
        int v = tx[i];
        bool expands = (side == LocalSide::filter) ? base_.is_black(v) : !base_.is_black(v);
        stars[i].push_back(v);
        if (expands)
            for (int w : base_.tree().neighbors(v)) stars[i].push_back(w);
        ks[i] = (int)stars[i].size() - 1;
    }
    return assemble_localization(false, std::move(ks), {}, stars, tx,
                                 [this](const std::vector<int>& t) { return encode(t); }, g);
}

// ---- TwistedTreeGrid ---------------------------------------------------------

TwistedTreeGrid::TwistedTreeGrid(ZigzagTree g, ZigzagTree h, int n)
    : g_(std::move(g)), h_(std::move(h)), n_(n) {
    if (n < 1) throw input_error("grid dimension must be positive");
    int vg = g_.vertex_count(), vh = h_.vertex_count();
    int eg = g_.tree().edge_count(), eh = h_.tree().edge_count();
    orig_count_ = vg * vh;
    base_count_ = orig_count_ + eg * eh;
    count_ = power_count(base_count_, n);

    black_.resize(orig_count_);
    for (int a = 0; a < vg; ++a)
        for (int b = 0; b < vh; ++b)
            black_[a * vh + b] = (g_.is_black(a) == h_.is_black(b));

    adj_.assign(base_count_, {});
    for (int a = 0; a < vg; ++a)
        for (int b = 0; b < vh; ++b) {
            int u = a * vh + b;
            for (int a2 : g_.tree().neighbors(a)) adj_[u].push_back(a2 * vh + b);
            for (int b2 : h_.tree().neighbors(b)) adj_[u].push_back(a * vh + b2);
        }
    for (int i = 0; i < eg; ++i)
        for (int j = 0; j < eh; ++j) {
            int w = orig_count_ + i * eh + j;
            auto [a, a2] = g_.tree().edges()[i];
            auto [b, b2] = h_.tree().edges()[j];
            int corners[4] = {a * vh + b, a * vh + b2, a2 * vh + b, a2 * vh + b2};
            for (int c : corners) {
                adj_[w].push_back(c);
                adj_[c].push_back(w);
            }
        }
    // The Delta graph joins pairs lying on a common 4-cycle of the derived
    // graph, i.e. two squares over a shared base edge plus its endpoints.
    // Squares are adjacent exactly when they share a base edge; diagonal
    // corners of one square meet only through it and stay at distance 2.
    delta_adj_ = adj_;
    auto edges_touch = [](std::pair<int, int> e, std::pair<int, int> f) {
        return e.first == f.first || e.first == f.second || e.second == f.first ||
               e.second == f.second;
    };
    for (int i = 0; i < eg; ++i)
        for (int j = 0; j < eh; ++j) {
            int w = orig_count_ + i * eh + j;
            for (int i2 = 0; i2 < eg; ++i2)
                if (i2 != i && edges_touch(g_.tree().edges()[i], g_.tree().edges()[i2]))
                    delta_adj_[w].push_back(orig_count_ + i2 * eh + j);
            for (int j2 = 0; j2 < eh; ++j2)
                if (j2 != j && edges_touch(h_.tree().edges()[j], h_.tree().edges()[j2]))
                    delta_adj_[w].push_back(orig_count_ + i * eh + j2);
        }
    for (auto& v : adj_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto& v : delta_adj_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
}

int TwistedTreeGrid::original_id(int gv, int hv) const {
    if (gv < 0 || gv >= g_.vertex_count() || hv < 0 || hv >= h_.vertex_count())
        throw input_error("vertex out of range");
    return gv * h_.vertex_count() + hv;
}

int TwistedTreeGrid::square_id(int ge, int he) const {
    if (ge < 0 || ge >= g_.tree().edge_count() || he < 0 || he >= h_.tree().edge_count())
        throw input_error("edge out of range");
    return orig_count_ + ge * h_.tree().edge_count() + he;
}

bool TwistedTreeGrid::is_black(int u) const { return !is_square(u) && black_[u]; }

std::pair<int, int> TwistedTreeGrid::extent_g(int u) const {
    if (!is_square(u)) {
        int v = u / h_.vertex_count();
        return {v, v};
    }
    return g_.tree().edges()[(u - orig_count_) / h_.tree().edge_count()];
}

std::pair<int, int> TwistedTreeGrid::extent_h(int u) const {
    if (!is_square(u)) {
        int v = u % h_.vertex_count();
        return {v, v};
    }
    return h_.tree().edges()[(u - orig_count_) % h_.tree().edge_count()];
}

bool TwistedTreeGrid::safe(int u) const {
    auto [ga, gb] = extent_g(u);
    auto [ha, hb] = extent_h(u);
    return g_.leaf_distance(ga) >= 3 && g_.leaf_distance(gb) >= 3 && h_.leaf_distance(ha) >= 3 &&
           h_.leaf_distance(hb) >= 3;
}

int TwistedTreeGrid::comp_leq(int u, int v) const {
    if (u == v) return true;
    if (!std::binary_search(adj_[u].begin(), adj_[u].end(), v)) return false;
    if (is_black(u)) return true;
    return !is_square(v) && !black_[v];
}

std::pair<int, int> TwistedTreeGrid::comp_midpoints(int u, int v) const {
    if (!safe(u) || !safe(v)) throw input_error("twisted grid point outside the safe interior");

    // One tree's share of the rotated-plane embedding: the covering path,
    // doubled positions of u and v along it, and the color shift making even
    // (shifted) positions the tree's black class.
    struct Axis {
        std::vector<int> path;
        int pu2, pv2, shift;
    };
    auto project = [&](const ZigzagTree& t, std::pair<int, int> eu,
                       std::pair<int, int> ev) -> Axis {
        int ends[4] = {eu.first, eu.second, ev.first, ev.second};
        int ea = ends[0], eb = ends[0], best = -1;
        for (int a : ends)
            for (int b : ends) {
                int d = t.distance(a, b);
                if (d > best) {
                    best = d;
                    ea = a;
                    eb = b;
                }
            }
        Axis axis;
        axis.path = t.path(ea, eb);
        std::vector<int> pos(t.vertex_count(), -1);
        for (int i = 0; i < (int)axis.path.size(); ++i) pos[axis.path[i]] = i;
        auto pos2 = [&](std::pair<int, int> e) {
            if (pos[e.first] < 0 || pos[e.second] < 0)
                throw internal_error("extent escapes the covering path");
            return pos[e.first] + pos[e.second];
        };
        axis.pu2 = pos2(eu);
        axis.pv2 = pos2(ev);
        axis.shift = t.is_black(axis.path[0]) ? 0 : 1;
        return axis;
    };
    Axis ax = project(g_, extent_g(u), extent_g(v));
    Axis ay = project(h_, extent_h(u), extent_h(v));

    int uu = (ax.pu2 + ay.pu2) / 2 + ax.shift + ay.shift;
    int vu = (ay.pu2 - ax.pu2) / 2 + ay.shift - ax.shift;
    int uv = (ax.pv2 + ay.pv2) / 2 + ax.shift + ay.shift;
    int vv = (ay.pv2 - ax.pv2) / 2 + ay.shift - ax.shift;

    auto [ulo, uhi] = zig_pair(uu, uv);
    auto [vlo, vhi] = zig_pair(vu, vv);

    auto slot = [](const Axis& axis, int p2) -> std::pair<int, int> {
        if (p2 < 0 || p2 > 2 * ((int)axis.path.size() - 1))
            throw internal_error("midpoint left the covering path");
        if ((p2 & 1) == 0) return {axis.path[p2 / 2], -1};
        return {axis.path[(p2 - 1) / 2], axis.path[(p2 + 1) / 2]};
    };
    auto vertex_at = [&](int ru, int rv) -> int {
        int pg2 = ru - rv - 2 * ax.shift;
        int ph2 = ru + rv - 2 * ay.shift;
        if (((pg2 ^ ph2) & 1) != 0) throw internal_error("mixed midpoint parity");
        auto sg = slot(ax, pg2);
        auto sh = slot(ay, ph2);
        if (sg.second < 0) return original_id(sg.first, sh.first);
        int ge = g_.tree().edge_index(sg.first, sg.second);
        int he = h_.tree().edge_index(sh.first, sh.second);
        if (ge < 0 || he < 0) throw internal_error("midpoint square edge missing");
        return square_id(ge, he);
    };
    return {vertex_at(ulo, vlo), vertex_at(uhi, vhi)};
}

long long TwistedTreeGrid::encode(const std::vector<int>& tuple) const {
    if ((int)tuple.size() != n_) throw input_error("tuple dimension mismatch");
    long long p = 0;
    for (int v : tuple) {
        if (v < 0 || v >= base_count_) throw input_error("vertex out of range");
        p = p * base_count_ + v;
    }
    return p;
}

std::vector<int> TwistedTreeGrid::decode(long long p) const {
    if (p < 0 || p >= count_) throw input_error("grid point out of range");
    std::vector<int> t(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        t[i] = (int)(p % base_count_);
        p /= base_count_;
    }
    return t;
}

bool TwistedTreeGrid::leq(long long x, long long y) const {
    auto tx = decode(x), ty = decode(y);
    for (int i = 0; i < n_; ++i)
        if (!comp_leq(tx[i], ty[i])) return false;
    return true;
}

std::pair<long long, long long> TwistedTreeGrid::midpoints(long long x, long long y) const {
    auto tx = decode(x), ty = decode(y);
    std::vector<int> lo(n_), hi(n_);
    for (int i = 0; i < n_; ++i) {
        auto [a, b] = comp_midpoints(tx[i], ty[i]);
        lo[i] = a;
        hi[i] = b;
    }
    return {encode(lo), encode(hi)};
}

int TwistedTreeGrid::d_delta(long long x, long long y) const {
    auto tx = decode(x), ty = decode(y);
    int d = 0;
    for (int i = 0; i < n_; ++i) {
        if (tx[i] == ty[i]) continue;
        std::vector<int> dist(base_count_, -1);
        std::deque<int> q{tx[i]};
        dist[tx[i]] = 0;
        while (!q.empty() && dist[ty[i]] < 0) {
            int w = q.front();
            q.pop_front();
            for (int z : delta_adj_[w])
                if (dist[z] < 0) {
                    dist[z] = dist[w] + 1;
                    q.push_back(z);
                }
        }
        if (dist[ty[i]] < 0) throw internal_error("disconnected Delta graph");
        d = std::max(d, dist[ty[i]]);
    }
    return d;
}

Localization TwistedTreeGrid::localize(const GridFunction& g, long long x, LocalSide side) const {
    auto tx = decode(x);
    std::vector<int> ks(n_), ls(n_);
    std::vector<std::vector<int>> stars(n_);
    for (int i = 0; i < n_; ++i) {
        int u = tx[i];
        if (!safe(u)) throw input_error("twisted grid point outside the safe interior");
        bool filter = side == LocalSide::filter;
        if (is_square(u)) {
            // The two corners on the expanding side, ordered by id.
            auto [ga, gb] = extent_g(u);
            auto [ha, hb] = extent_h(u);
            std::vector<int> picked;
            for (int a : {ga, gb})
                for (int b : {ha, hb}) {
                    int c = original_id(a, b);
                    if (black_[c] != filter) picked.push_back(c);
                }
            std::sort(picked.begin(), picked.end());
            ks[i] = 0;
            ls[i] = 2;
            stars[i] = {u, picked[0], picked[1]};
        } else if (black_[u] == filter) {
            // Expanding original: squares fill (s,t), tree moves fill the axes.
            int gv = u / h_.vertex_count(), hv = u % h_.vertex_count();
            const auto& ng = g_.tree().neighbors(gv);
            const auto& nh = h_.tree().neighbors(hv);
            ks[i] = (int)ng.size();
            ls[i] = (int)nh.size();
            stars[i].assign((long long)(ks[i] + 1) * (ls[i] + 1), -1);
            auto at = [&](int a, int b) -> int& { return stars[i][a * (ls[i] + 1) + b]; };
            at(0, 0) = u;
            for (int s = 1; s <= ks[i]; ++s) at(s, 0) = original_id(ng[s - 1], hv);
            for (int t = 1; t <= ls[i]; ++t) at(0, t) = original_id(gv, nh[t - 1]);
            for (int s = 1; s <= ks[i]; ++s)
                for (int t = 1; t <= ls[i]; ++t)
                    at(s, t) = square_id(g_.tree().edge_index(gv, ng[s - 1]),
                                         h_.tree().edge_index(hv, nh[t - 1]));
        } else {
            ks[i] = 0;
            ls[i] = 0;
            stars[i] = {u};
        }
    }
    return assemble_localization(true, std::move(ks), std::move(ls), stars, tx,
                                 [this](const std::vector<int>& t) { return encode(t); }, g);
}

// ---- Generic drivers -------------------------------------------------------

template <class GridT>
bool is_lconvex(const GridT& grid, const GridFunction& g) {
    const auto& pts = g.points();
    const auto& val = g.values();
    bool ok = true;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i; j < pts.size(); ++j) {
            auto [lo, hi] = grid.midpoints(pts[i], pts[j]);
            if (!g.contains(lo) || !g.contains(hi))
                throw input_error("table domain is not midpoint-closed");
            ExtRat lhs = val[i] + val[j];
            if (lhs.is_pos_inf()) continue;
            if (lhs < g.value_at(lo) + g.value_at(hi)) ok = false;
        }
    return ok;
}

template <class GridT>
bool is_chain_connected(const GridT& grid, const GridFunction& g) {
    std::vector<long long> dom;
    for (size_t i = 0; i < g.points().size(); ++i)
        if (!g.values()[i].is_pos_inf()) dom.push_back(g.points()[i]);
    if (dom.empty()) return false;
    std::vector<int> comp(dom.size(), -1);
    std::deque<size_t> q;
    comp[0] = 0;
    q.push_back(0);
    size_t seen = 1;
    while (!q.empty()) {
        size_t i = q.front();
        q.pop_front();
        for (size_t j = 0; j < dom.size(); ++j)
            if (comp[j] < 0 && (grid.leq(dom[i], dom[j]) || grid.leq(dom[j], dom[i]))) {
                comp[j] = 0;
                ++seen;
                q.push_back(j);
            }
    }
    return seen == dom.size();
}

template <class GridT>
SdaResult sda_minimize(const GridT& grid, const GridFunction& g, long long x0,
                       const LocalOracle& oracle) {
    LocalOracle oracle_fn = oracle;
    if (!oracle_fn)
        oracle_fn = [](const Localization& loc) { return brute_force_minimize(loc.values); };

    long long x = x0;
    ExtRat fx = g.value_at(x);
    if (fx.is_pos_inf()) throw input_error("start point outside the effective domain");
    SdaResult res;
    res.trace.push_back(x);
    for (;;) {
        Localization li = grid.localize(g, x, LocalSide::ideal);
        Localization lf = grid.localize(g, x, LocalSide::filter);
        auto [ii, vi] = oracle_fn(li);
        auto [fi, vf] = oracle_fn(lf);
        auto check = [&](const Localization& loc, long long idx, const ExtRat& v) {
            if (idx < 0 || idx >= loc.size() || !(loc.values[idx] == v))
                throw internal_error("local oracle returned an inconsistent minimizer");
            if (fx < v) throw internal_error("local oracle returned a worse value");
        };
        check(li, ii, vi);
        check(lf, fi, vf);
        const Localization& side = (vf <= vi) ? lf : li;
        long long idx = (vf <= vi) ? fi : ii;
        ExtRat v = (vf <= vi) ? vf : vi;
        if (v == fx) break;
        x = side.grid_points[idx];
        fx = v;
        res.trace.push_back(x);
    }
    res.minimizer = x;
    res.value = fx;
    return res;
}

template bool is_lconvex<TreeGrid>(const TreeGrid&, const GridFunction&);
template bool is_lconvex<TwistedTreeGrid>(const TwistedTreeGrid&, const GridFunction&);
template bool is_chain_connected<TreeGrid>(const TreeGrid&, const GridFunction&);
template bool is_chain_connected<TwistedTreeGrid>(const TwistedTreeGrid&, const GridFunction&);
template SdaResult sda_minimize<TreeGrid>(const TreeGrid&, const GridFunction&, long long,
                                          const LocalOracle&);
template SdaResult sda_minimize<TwistedTreeGrid>(const TwistedTreeGrid&, const GridFunction&,
                                                 long long, const LocalOracle&);

}  // namespace dca
