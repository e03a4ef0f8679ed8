#include "dca/semilattice.hpp"

#include <algorithm>
#include <map>

#include "dca/errors.hpp"

namespace dca {

// ---- S_k ----------------------------------------------------------------

FinitePoset make_sk_poset(int k) {
    if (k < 0) throw input_error("S_k needs k >= 0");
    std::vector<std::pair<int, int>> hasse;
    for (int i = 1; i <= k; ++i) hasse.push_back({0, i});
    return FinitePoset(k + 1, hasse);
}

int sk_join(int k, int a, int b) {
    if (a < 0 || a > k || b < 0 || b > k) throw input_error("S_k element out of range");
    if (a == b) return a;
    if (a == 0) return b;
    if (b == 0) return a;
    return 0;
}

int sk_meet(int k, int a, int b) {
    if (a < 0 || a > k || b < 0 || b > k) throw input_error("S_k element out of range");
    return a == b ? a : 0;
}

// ---- S_{k,l} ------------------------------------------------------------

FinitePoset make_skl_poset(int k, int l) {
    if (k < 1 || l < 1) throw input_error("S_{k,l} needs k,l >= 1");
    std::vector<std::pair<int, int>> hasse;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= l; ++b) {
            hasse.push_back({skl_encode(l, 0, 0), skl_encode(l, a, b)});
            hasse.push_back({skl_encode(l, a, b), skl_encode(l, a, 0)});
            hasse.push_back({skl_encode(l, a, b), skl_encode(l, 0, b)});
        }
    return FinitePoset((k + 1) * (l + 1), hasse);
}

namespace {

// {-1,0,+1} star with bottom 0.
int s2_join(int x, int y) {
    if (x == y) return x;
    if (x == 0) return y;
    if (y == 0) return x;
    return 0;
}
int s2_meet(int x, int y) { return x == y ? x : 0; }

// Coordinate map onto {-1,0,+1}^2 for the frame (a1,a2,b1,b2).
struct SklFrame {
    int a1, a2, b1, b2;

    std::pair<int, int> fwd(int a, int b) const {
        int ca = a == 0 ? 0 : a == a1 ? 1 : a == a2 ? 2 : -1;
        int cb = b == 0 ? 0 : b == b1 ? 1 : b == b2 ? 2 : -1;
        if (ca < 0 || cb < 0) throw input_error("frame does not cover the operands");
        static const std::pair<int, int> img[3][3] = {
            // cb: 0        b1        b2
            {{0, 0}, {1, -1}, {-1, 1}},    // ca = 0
            {{1, 1}, {1, 0}, {0, 1}},      // ca = a1
            {{-1, -1}, {0, -1}, {-1, 0}},  // ca = a2
        };
        return img[ca][cb];
    }

    std::pair<int, int> inv(int s, int t) const {
        // Inverse of fwd's image table.
        if (s == 0 && t == 0) return {0, 0};
        if (s == 1 && t == 0) return {a1, b1};
        if (s == 0 && t == -1) return {a2, b1};
        if (s == 0 && t == 1) return {a1, b2};
        if (s == -1 && t == 0) return {a2, b2};
        if (s == 1 && t == 1) return {a1, 0};
        if (s == -1 && t == -1) return {a2, 0};
        if (s == 1 && t == -1) return {0, b1};
        if (s == -1 && t == 1) return {0, b2};
        throw internal_error("bad coordinate pair");
    }
};

int skl_op_with_frame(int k, int l, int p, int q, const SklFrame& fr, bool join) {
    auto [pa, pb] = skl_decode(l, p);
    auto [qa, qb] = skl_decode(l, q);
    auto [ps, pt] = fr.fwd(pa, pb);
    auto [qs, qt] = fr.fwd(qa, qb);
    int s = join ? s2_join(ps, qs) : s2_meet(ps, qs);
    int t = join ? s2_join(pt, qt) : s2_meet(pt, qt);
    auto [ra, rb] = fr.inv(s, t);
    if (ra > k || rb > l)
        throw internal_error("twisted star operation left the domain");
    return skl_encode(l, ra, rb);
}

// Canonical frame covering the nonzero coordinates of p and q; slots not
// pinned by the operands take the smallest unused labels, exceeding k or l
// when the star has fewer than two rays.
SklFrame canonical_frame(int l, int p, int q) {
    auto [pa, pb] = skl_decode(l, p);
    auto [qa, qb] = skl_decode(l, q);
    auto pick = [](int x, int y) -> std::pair<int, int> {
        if (x != 0 && y != 0 && x != y) return {x, y};
        int first = x != 0 ? x : y;  // 0 if both zero
        if (first == 0) first = 1;
        return {first, first == 1 ? 2 : 1};
    };
    auto [a1, a2] = pick(pa, qa);
    auto [b1, b2] = pick(pb, qb);
    return SklFrame{a1, a2, b1, b2};
}

}  // namespace

int skl_join_with_frame(int k, int l, int p, int q, int a1, int a2, int b1, int b2) {
    return skl_op_with_frame(k, l, p, q, SklFrame{a1, a2, b1, b2}, true);
}
int skl_meet_with_frame(int k, int l, int p, int q, int a1, int a2, int b1, int b2) {
    return skl_op_with_frame(k, l, p, q, SklFrame{a1, a2, b1, b2}, false);
}

SklOps skl_ops(int k, int l) {
    if (k < 1 || l < 1) throw input_error("S_{k,l} needs k,l >= 1");
    int n = (k + 1) * (l + 1);
    SklOps ops;
    ops.k = k;
    ops.l = l;
    ops.join.assign(n, std::vector<int>(n));
    ops.meet.assign(n, std::vector<int>(n));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            SklFrame fr = canonical_frame(l, p, q);
            ops.join[p][q] = skl_op_with_frame(k, l, p, q, fr, true);
            ops.meet[p][q] = skl_op_with_frame(k, l, p, q, fr, false);
        }
    return ops;
}

// ---- ProductDomain -------------------------------------------------------

ProductDomain::ProductDomain(std::vector<ModularSemilattice> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw input_error("empty product");
    size_ = 1;
    for (const auto& c : comps_) {
        if (size_ > (1LL << 40) / c.size()) throw input_error("product domain too large");
        size_ *= c.size();
    }
}

std::vector<int> ProductDomain::decode(long long idx) const {
    std::vector<int> t(comps_.size());
    for (int i = (int)comps_.size() - 1; i >= 0; --i) {
        t[i] = (int)(idx % comps_[i].size());
        idx /= comps_[i].size();
    }
    return t;
}

long long ProductDomain::encode(const std::vector<int>& tuple) const {
    long long idx = 0;
    for (size_t i = 0; i < comps_.size(); ++i) idx = idx * comps_[i].size() + tuple[i];
    return idx;
}

bool ProductDomain::leq(long long p, long long q) const {
    auto tp = decode(p), tq = decode(q);
    for (size_t i = 0; i < comps_.size(); ++i)
        if (!comps_[i].leq(tp[i], tq[i])) return false;
    return true;
}

long long ProductDomain::meet(long long p, long long q) const {
    auto tp = decode(p), tq = decode(q);
    std::vector<int> t(comps_.size());
    for (size_t i = 0; i < comps_.size(); ++i) t[i] = comps_[i].meet(tp[i], tq[i]);
    return encode(t);
}

int ProductDomain::rank(long long p) const {
    auto tp = decode(p);
    int r = 0;
    for (size_t i = 0; i < comps_.size(); ++i) r += comps_[i].rank(tp[i]);
    return r;
}

// ---- Fractional join -----------------------------------------------------

std::vector<int> interval_elements(const ModularSemilattice& L, int p, int q) {
    int m = L.meet(p, q);
    std::vector<int> as, bs;
    for (int x = 0; x < L.size(); ++x) {
        if (L.leq(m, x) && L.leq(x, p)) as.push_back(x);
        if (L.leq(m, x) && L.leq(x, q)) bs.push_back(x);
    }
    std::vector<int> out;
    for (int a : as)
        for (int b : bs)
            if (auto u = L.join_if_exists(a, b)) out.push_back(*u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// One segment of the hull subdivision: element u carries the sigma interval
// (lo, hi]; segments tile (0, 1] top down.
struct ChainSeg {
    int u;
    Rat hi, lo;
};

std::vector<ChainSeg> frac_chain(const ModularSemilattice& L, int p, int q) {
    int m = L.meet(p, q);
    auto elems = interval_elements(L, p, q);

    std::map<std::pair<long long, long long>, std::vector<int>> at_point;
    for (int u : elems) {
        long long x = L.rank(L.meet(u, p)) - L.rank(m);
        long long y = L.rank(L.meet(u, q)) - L.rank(m);
        at_point[{x, y}].push_back(u);
    }
    // Per x keep the highest y (lower points are never on the upper-right
    // boundary with positive measure).
    std::map<long long, long long> top_y;
    for (const auto& [pt, us] : at_point) {
        auto it = top_y.find(pt.first);
        if (it == top_y.end() || it->second < pt.second) top_y[pt.first] = pt.second;
    }
    std::vector<std::pair<long long, long long>> pts(top_y.begin(), top_y.end());

    // Upper hull, strict right turns only (collinear middles dropped).
    auto cross = [](const std::pair<long long, long long>& o,
                    const std::pair<long long, long long>& a,
                    const std::pair<long long, long long>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) >= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    // Slice from the peak (max y, larger x on ties) to the right end.
    size_t start = 0;
    for (size_t i = 1; i < hull.size(); ++i)
        if (hull[i].second >= hull[start].second) start = i;
    std::vector<std::pair<long long, long long>> chain(hull.begin() + start, hull.end());

    // sigma = sin/(sin+cos) of the outer-normal boundary directions; between
    // consecutive chain points the shared normal is (-ey, ex).
    std::vector<ChainSeg> segs;
    Rat hi(1);
    for (size_t i = 0; i < chain.size(); ++i) {
        Rat lo(0);
        if (i + 1 < chain.size()) {
            long long ex = chain[i + 1].first - chain[i].first;
            long long ey = chain[i + 1].second - chain[i].second;
            if (ex <= 0 || ey >= 0) throw internal_error("hull chain not strictly monotone");
            lo = Rat(ex, ex - ey);
        }
        const auto& us = at_point.at(chain[i]);
        if (us.size() != 1)
            throw internal_error("extreme point of the interval hull is not unique");
        segs.push_back({us[0], hi, lo});
        hi = lo;
    }
    return segs;
}

FractionalJoin segs_to_join(const std::vector<ChainSeg>& segs) {
    FractionalJoin fj;
    for (const auto& s : segs) fj.terms.push_back({s.u, s.hi - s.lo});
    return fj;
}

// Merge the component subdivisions of (0,1] on the common sigma axis.
// Component chains must all be oriented by the same (p,q) argument order.
FractionalJoin merge_chains(const ProductDomain& D,
                            const std::vector<const std::vector<ChainSeg>*>& chains) {
    std::vector<Rat> cuts{Rat(1), Rat(0)};
    for (auto* ch : chains)
        for (const auto& s : *ch)
            if (!(s.lo == Rat(0))) cuts.push_back(s.lo);
    std::sort(cuts.begin(), cuts.end(), [](const Rat& a, const Rat& b) { return b < a; });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    FractionalJoin fj;
    for (size_t j = 0; j + 1 < cuts.size(); ++j) {
        Rat mid = (cuts[j] + cuts[j + 1]) / Rat(2);
        std::vector<int> tuple(D.components());
        for (int i = 0; i < D.components(); ++i) {
            for (const auto& s : *chains[i])
                if (s.lo < mid && mid <= s.hi) {
                    tuple[i] = s.u;
                    break;
                }
        }
        fj.terms.push_back({D.encode(tuple), cuts[j] - cuts[j + 1]});
    }
    return fj;
}

}  // namespace

FractionalJoin fractional_join(const ModularSemilattice& L, int p, int q) {
    return segs_to_join(frac_chain(L, p, q));
}

FractionalJoin fractional_join(const ProductDomain& D, long long p, long long q) {
    auto tp = D.decode(p), tq = D.decode(q);
    std::vector<std::vector<ChainSeg>> chains;
    for (int i = 0; i < D.components(); ++i)
        chains.push_back(frac_chain(D.comp(i), tp[i], tq[i]));
    std::vector<const std::vector<ChainSeg>*> ptrs;
    for (const auto& c : chains) ptrs.push_back(&c);
    return merge_chains(D, ptrs);
}

// ---- Submodularity checks -------------------------------------------------

namespace {

bool check_pair(const ExtRat& fp, const ExtRat& fq, const ExtRat& fmeet,
                const std::vector<std::pair<long long, Rat>>& terms,
                std::span<const ExtRat> f) {
    ExtRat lhs = fp + fq;
    if (lhs.is_pos_inf()) return true;
    ExtRat rhs = fmeet;
    for (const auto& [u, c] : terms) {
        if (rhs.is_pos_inf()) break;
        rhs += c * f[u];
    }
    return !(lhs < rhs);
}

}  // namespace

bool is_submodular(const ProductDomain& D, std::span<const ExtRat> f) {
    if ((long long)f.size() != D.size()) throw input_error("table size mismatch");
    // Memoized per-component chains keep the pair loop quadratic.  Keys are
    // ordered: the merge pairs segments by sigma position, so every chain
    // must be oriented by the same argument order.
    std::vector<std::map<std::pair<int, int>, std::vector<ChainSeg>>> cache(D.components());
    auto chain_of = [&](int i, int a, int b) -> const std::vector<ChainSeg>& {
        auto key = std::make_pair(a, b);
        auto it = cache[i].find(key);
        if (it == cache[i].end()) it = cache[i].emplace(key, frac_chain(D.comp(i), a, b)).first;
        return it->second;
    };
    long long n = D.size();
    for (long long p = 0; p < n; ++p) {
        if (f[p].is_pos_inf()) continue;
        auto tp = D.decode(p);
        for (long long q = p + 1; q < n; ++q) {
            if (f[q].is_pos_inf()) continue;
            auto tq = D.decode(q);
            std::vector<const std::vector<ChainSeg>*> chains(D.components());
            for (int i = 0; i < D.components(); ++i) chains[i] = &chain_of(i, tp[i], tq[i]);
            FractionalJoin fj = merge_chains(D, chains);
            if (!check_pair(f[p], f[q], f[D.meet(p, q)], fj.terms, f)) return false;
        }
    }
    return true;
}

bool is_submodular(const ModularSemilattice& L, std::span<const ExtRat> f) {
    return is_submodular(ProductDomain({L}), f);
}

namespace {

long long table_size(const std::vector<int>& ks) {
    long long n = 1;
    for (int k : ks) n *= k + 1;
    return n;
}

}  // namespace

bool is_k_submodular(const std::vector<int>& ks, std::span<const ExtRat> f) {
    long long n = table_size(ks);
    if ((long long)f.size() != n) throw input_error("table size mismatch");
    int m = (int)ks.size();
    std::vector<int> tp(m), tq(m), tj(m), tm(m);
    for (long long p = 0; p < n; ++p) {
        long long r = p;
        for (int i = m - 1; i >= 0; --i) {
            tp[i] = (int)(r % (ks[i] + 1));
            r /= ks[i] + 1;
        }
        for (long long q = p + 1; q < n; ++q) {
            r = q;
            for (int i = m - 1; i >= 0; --i) {
                tq[i] = (int)(r % (ks[i] + 1));
                r /= ks[i] + 1;
            }
            long long ji = 0, mi = 0;
            for (int i = 0; i < m; ++i) {
                ji = ji * (ks[i] + 1) + sk_join(ks[i], tp[i], tq[i]);
                mi = mi * (ks[i] + 1) + sk_meet(ks[i], tp[i], tq[i]);
            }
            ExtRat lhs = f[p] + f[q];
            if (lhs.is_pos_inf()) continue;
            if (lhs < f[mi] + f[ji]) return false;
        }
    }
    return true;
}

bool is_kl_submodular(const std::vector<int>& ks, const std::vector<int>& ls,
                      std::span<const ExtRat> f) {
    if (ks.size() != ls.size()) throw input_error("k/l vector size mismatch");
    int m = (int)ks.size();
    // Components with k or l below 1 are embedded into S_{max(k,1),max(l,1)};
    // the sub-poset is closed under both operations.
    std::vector<SklOps> ops;
    std::vector<int> dim(m);
    long long n = 1;
    for (int i = 0; i < m; ++i) {
        ops.push_back(skl_ops(std::max(ks[i], 1), std::max(ls[i], 1)));
        dim[i] = (ks[i] + 1) * (ls[i] + 1);
        n *= dim[i];
    }
    if ((long long)f.size() != n) throw input_error("table size mismatch");
    // Encoded S_{k,l} elements with the true l; re-encode for the ops table.
    auto op_index = [&](int i, int code) {
        auto [a, b] = skl_decode(ls[i], code);
        return skl_encode(std::max(ls[i], 1), a, b);
    };
    auto back_index = [&](int i, int code) {
        auto [a, b] = skl_decode(std::max(ls[i], 1), code);
        if (a > ks[i] || b > ls[i]) throw internal_error("twisted op left the sub-poset");
        return skl_encode(ls[i], a, b);
    };
    std::vector<int> tp(m), tq(m);
    for (long long p = 0; p < n; ++p) {
        long long r = p;
        for (int i = m - 1; i >= 0; --i) {
            tp[i] = (int)(r % dim[i]);
            r /= dim[i];
        }
        for (long long q = p + 1; q < n; ++q) {
            r = q;
            for (int i = m - 1; i >= 0; --i) {
                tq[i] = (int)(r % dim[i]);
                r /= dim[i];
            }
            long long ji = 0, mi = 0;
            for (int i = 0; i < m; ++i) {
                int a = op_index(i, tp[i]), b = op_index(i, tq[i]);
                ji = ji * dim[i] + back_index(i, ops[i].join[a][b]);
                mi = mi * dim[i] + back_index(i, ops[i].meet[a][b]);
            }
            ExtRat lhs = f[p] + f[q];
            if (lhs.is_pos_inf()) continue;
            if (lhs < f[mi] + f[ji]) return false;
        }
    }
    return true;
}

std::pair<long long, ExtRat> brute_force_minimize(std::span<const ExtRat> f) {
    if (f.empty()) throw input_error("minimizing an empty table");
    long long best = 0;
    for (long long i = 1; i < (long long)f.size(); ++i)
        if (f[i] < f[best]) best = i;
    return {best, f[best]};
}

}  // namespace dca
