#include "dca/zeroext.hpp"

#include <algorithm>

namespace dca {

ZeroExtInstance::ZeroExtInstance(Graph g, int n, std::vector<std::vector<Rat>> b,
                                 std::vector<std::vector<Rat>> c)
    : g_(std::move(g)), n_(n), b_(std::move(b)), c_(std::move(c)) {
    if (n_ < 1) throw input_error("at least one variable required");
    if (!g_.unit_lengths()) throw input_error("underlying graph must have unit lengths");
    if (!g_.is_connected()) throw input_error("underlying graph must be connected");
    if ((int)b_.size() != n_) throw input_error("pull matrix must have one row per variable");
    for (const std::vector<Rat>& row : b_) {
        if ((int)row.size() != g_.vertex_count())
            throw input_error("pull row must have one entry per vertex");
        for (const Rat& w : row)
            if (w < Rat(0)) throw input_error("negative pull weight");
    }
    if ((int)c_.size() != n_) throw input_error("coupling matrix must be n x n");
    for (int i = 0; i < n_; ++i) {
        if ((int)c_[i].size() != n_) throw input_error("coupling matrix must be n x n");
        if (!(c_[i][i] == Rat(0))) throw input_error("coupling diagonal must be zero");
        for (int j = 0; j < n_; ++j) {
            if (c_[i][j] < Rat(0)) throw input_error("negative coupling weight");
            if (!(c_[i][j] == c_[j][i])) throw input_error("coupling matrix must be symmetric");
        }
    }
    dist_ = metric(g_);
}

Rat objective(const ZeroExtInstance& inst, const std::vector<int>& x) {
    const int n = inst.variables(), m = inst.graph().vertex_count();
    if ((int)x.size() != n) throw input_error("assignment size mismatch");
    for (int v : x)
        if (v < 0 || v >= m) throw input_error("assignment vertex out of range");
    Rat total(0);
    for (int i = 0; i < n; ++i) {
        for (int v = 0; v < m; ++v)
            if (!(inst.pull(i, v) == Rat(0))) total += inst.pull(i, v) * inst.dist()[x[i]][v];
        for (int j = i + 1; j < n; ++j)
            if (!(inst.coupling(i, j) == Rat(0)))
                total += inst.coupling(i, j) * inst.dist()[x[i]][x[j]];
    }
    return total;
}

namespace {

// Calls fn on every tuple drawn from the per-coordinate choice lists, in
// lexicographic order of the lists.
template <typename Fn>
void for_each_tuple(const std::vector<const std::vector<int>*>& choices, Fn&& fn) {
    const int n = (int)choices.size();
    std::vector<int> pos(n, 0), tuple(n);
    for (int i = 0; i < n; ++i) tuple[i] = (*choices[i])[0];
    for (;;) {
        fn(tuple);
        int i = n - 1;
        while (i >= 0 && pos[i] + 1 == (int)choices[i]->size()) {
            pos[i] = 0;
            tuple[i] = (*choices[i])[0];
            --i;
        }
        if (i < 0) return;
        ++pos[i];
        tuple[i] = (*choices[i])[pos[i]];
    }
}

}  // namespace

std::pair<std::vector<int>, Rat> brute_force_solve(const ZeroExtInstance& inst, long long cap) {
    const int n = inst.variables(), m = inst.graph().vertex_count();
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / m) throw cap_exceeded("assignment enumeration over cap");
        total *= m;
    }
    std::vector<int> all(m);
    for (int v = 0; v < m; ++v) all[v] = v;
    std::vector<const std::vector<int>*> choices(n, &all);
    std::vector<int> best;
    Rat best_val(0);
    for_each_tuple(choices, [&](const std::vector<int>& x) {
        Rat val = objective(inst, x);
        if (best.empty() || val < best_val) {
            best = x;
            best_val = val;
        }
    });
    return {best, best_val};
}

std::optional<OrientedOrder> oriented_order(const Graph& g) {
    std::optional<Orientation> o = find_admissible_orientation(g);
    if (!o) return std::nullopt;
    const int m = g.vertex_count();
    OrientedOrder out;
    out.orientation = *o;
    out.leq.assign(m, std::vector<bool>(m, false));
    std::vector<std::vector<int>> up(m);
    for (const auto& [tail, head] : out.orientation.arcs) up[tail].push_back(head);
    for (int v = 0; v < m; ++v) {
        std::vector<int> stack{v};
        out.leq[v][v] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : up[u])
                if (!out.leq[v][w]) {
                    out.leq[v][w] = true;
                    stack.push_back(w);
                }
        }
    }
    out.ideal.assign(m, {});
    out.filter.assign(m, {});
    for (int v = 0; v < m; ++v)
        for (int u = 0; u < m; ++u) {
            if (out.leq[u][v]) out.ideal[v].push_back(u);
            if (out.leq[v][u]) out.filter[v].push_back(u);
        }
    return out;
}

std::variant<ZeroExtSolution, ZeroExtRejection> sda_solve(const ZeroExtInstance& inst,
                                                          long long cap) {
    const Graph& g = inst.graph();
    const int n = inst.variables(), m = g.vertex_count();
    if (!is_modular_graph(g)) return ZeroExtRejection{"graph is not modular"};
    std::optional<OrientedOrder> order = oriented_order(g);
    if (!order) return ZeroExtRejection{"graph admits no admissible orientation"};

    // Warm start: everything at the vertex with the strongest total pull.
    int start = 0;
    Rat start_pull(0);
    for (int v = 0; v < m; ++v) {
        Rat pull(0);
        for (int i = 0; i < n; ++i) pull += inst.pull(i, v);
        if (v == 0 || pull < start_pull) {
            start = v;
            start_pull = pull;
        }
    }
    std::vector<int> x(n, start);

    ZeroExtSolution sol;
    sol.iterations = 1;
    for (;;) {
        Rat here = objective(inst, x);
        std::vector<int> best_down, best_up;
        Rat down_val(0), up_val(0);
        for (int side = 0; side < 2; ++side) {
            const std::vector<std::vector<int>>& box = side == 0 ? order->ideal : order->filter;
            long long count = 1;
            std::vector<const std::vector<int>*> choices(n);
            for (int i = 0; i < n; ++i) {
                choices[i] = &box[x[i]];
                if (count > cap / (long long)choices[i]->size())
                    throw cap_exceeded("local enumeration over cap");
                count *= (long long)choices[i]->size();
            }
            std::vector<int>& best = side == 0 ? best_down : best_up;
            Rat& best_val = side == 0 ? down_val : up_val;
            for_each_tuple(choices, [&](const std::vector<int>& y) {
                Rat val = objective(inst, y);
                if (best.empty() || val < best_val) {
                    best = y;
                    best_val = val;
                }
            });
        }
        const std::vector<int>& chosen = up_val <= down_val ? best_up : best_down;
        const Rat& chosen_val = up_val <= down_val ? up_val : down_val;
        if (!(chosen_val < here)) {
            sol.argmin = x;
            sol.value = here;
            return sol;
        }
        x = chosen;
        ++sol.iterations;
    }
}

}  // namespace dca
