#include "dca/poset.hpp"

#include <algorithm>

#include "dca/errors.hpp"

namespace dca {

FinitePoset::FinitePoset(int n, std::vector<std::pair<int, int>> hasse)
    : n_(n), hasse_(std::move(hasse)) {
    if (n_ <= 0) throw input_error("poset must be nonempty");
    for (auto [lo, hi] : hasse_)
        if (lo < 0 || lo >= n_ || hi < 0 || hi >= n_ || lo == hi)
            throw input_error("bad hasse cover");
    // Topological check, then closure.
    std::vector<std::vector<int>> up(n_);
    std::vector<int> indeg(n_, 0);
    for (auto [lo, hi] : hasse_) {
        up[lo].push_back(hi);
        ++indeg[hi];
    }
    std::vector<int> order;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (size_t i = 0; i < order.size(); ++i)
        for (int w : up[order[i]])
            if (--indeg[w] == 0) order.push_back(w);
    if ((int)order.size() != n_) throw input_error("hasse relation is cyclic");
    leq_.assign(n_, std::vector<bool>(n_, false));
    for (int v = 0; v < n_; ++v) leq_[v][v] = true;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int w : up[*it])
            for (int x = 0; x < n_; ++x)
                if (leq_[w][x]) leq_[*it][x] = true;
}

std::optional<int> FinitePoset::bottom() const {
    for (int b = 0; b < n_; ++b) {
        bool all = true;
        for (int x = 0; x < n_ && all; ++x) all = leq_[b][x];
        if (all) return b;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::join_if_exists(int a, int b) const {
    std::vector<int> ub;
    for (int x = 0; x < n_; ++x)
        if (leq_[a][x] && leq_[b][x]) ub.push_back(x);
    for (int x : ub) {
        bool least = true;
        for (int y : ub)
            if (!leq_[x][y]) {
                least = false;
                break;
            }
        if (least) return x;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::meet_if_exists(int a, int b) const {
    std::vector<int> lb;
    for (int x = 0; x < n_; ++x)
        if (leq_[x][a] && leq_[x][b]) lb.push_back(x);
    for (int x : lb) {
        bool greatest = true;
        for (int y : lb)
            if (!leq_[y][x]) {
                greatest = false;
                break;
            }
        if (greatest) return x;
    }
    return std::nullopt;
}

ModularSemilattice::ModularSemilattice(FinitePoset poset) : poset_(std::move(poset)) {
    auto b = poset_.bottom();
    if (!b) throw input_error("semilattice needs a global minimum");
    bottom_ = *b;
    int n = poset_.size();
    meet_.assign(n, std::vector<int>(n, -1));
    join_.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int c = a; c < n; ++c) {
            auto m = poset_.meet_if_exists(a, c);
            if (!m) throw input_error("meet is not total (not a meet-semilattice)");
            meet_[a][c] = meet_[c][a] = *m;
            auto j = poset_.join_if_exists(a, c);
            join_[a][c] = join_[c][a] = j ? *j : -1;
        }
    // Rank by longest chain from the bottom: relax along covers to fixpoint.
    rank_.assign(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [lo, hi] : poset_.hasse())
            if (rank_[hi] < rank_[lo] + 1) {
                rank_[hi] = rank_[lo] + 1;
                changed = true;
            }
    }
}

std::optional<int> ModularSemilattice::join_if_exists(int a, int b) const {
    int j = join_[a][b];
    if (j < 0) return std::nullopt;
    return j;
}

bool is_modular_semilattice(const FinitePoset& p) {
    if (!p.bottom()) throw input_error("is_modular_semilattice: poset has no global minimum");
    int n = p.size();
    // Total meets.
    std::vector<std::vector<int>> meet(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto m = p.meet_if_exists(a, b);
            if (!m) return false;
            meet[a][b] = *m;
        }
    // Every principal ideal is a modular lattice.
    for (int top = 0; top < n; ++top) {
        std::vector<int> ideal;
        for (int x = 0; x < n; ++x)
            if (p.leq(x, top)) ideal.push_back(x);
        // Joins within the ideal: least common upper bound below top.
        auto join_in = [&](int a, int b) -> int {
            int best = -1;
            for (int u : ideal)
                if (p.leq(a, u) && p.leq(b, u) && (best == -1 || p.leq(u, best))) best = u;
            // best is a minimal candidate; verify it is the least.
            for (int u : ideal)
                if (p.leq(a, u) && p.leq(b, u) && !p.leq(best, u)) return -1;
            return best;
        };
        for (int a : ideal)
            for (int b : ideal) {
                if (join_in(a, b) < 0) return false;
            }
        // Modular law: x >= z implies x /\ (y \/ z) = (x /\ y) \/ z.
        for (int x : ideal)
            for (int y : ideal)
                for (int z : ideal) {
                    if (!p.leq(z, x)) continue;
                    int yz = join_in(y, z);
                    int lhs = meet[x][yz];
                    int rhs = join_in(meet[x][y], z);
                    if (lhs != rhs) return false;
                }
    }
    // Pairwise-joinable triples are joinable.
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            for (int z = y; z < n; ++z) {
                if (!p.join_if_exists(x, y) || !p.join_if_exists(y, z) ||
                    !p.join_if_exists(x, z))
                    continue;
                bool joinable = false;
                for (int u = 0; u < n && !joinable; ++u)
                    if (p.leq(x, u) && p.leq(y, u) && p.leq(z, u)) joinable = true;
                if (!joinable) return false;
            }
    return true;
}

}  // namespace dca
