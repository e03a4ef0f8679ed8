#pragma once

#include <memory>
#include <span>
#include <vector>

#include "dca/poset.hpp"
#include "dca/rational.hpp"

namespace dca {

// ---- Star and twisted-star domains ------------------------------------

// S_k: bottom 0 plus k pairwise-incomparable elements 1..k.
FinitePoset make_sk_poset(int k);

// a ?? b: max when comparable, else 0.  a ?? b: min when comparable, else 0.
int sk_join(int k, int a, int b);
int sk_meet(int k, int a, int b);

// S_{k,l}: elements (a,b) in {0..k} x {0..l}, encoded a*(l+1)+b, ordered by
// (0,0) < (a,b) < (a,0) and (a,b) < (0,b) for a,b nonzero.
FinitePoset make_skl_poset(int k, int l);
inline int skl_encode(int l, int a, int b) { return a * (l + 1) + b; }
inline std::pair<int, int> skl_decode(int l, int code) { return {code / (l + 1), code % (l + 1)}; }

// Binary operations on S_{k,l} computed through the coordinate map onto
// {-1,0,+1}^2; the result does not depend on the frame elements chosen for
// the map.  Stored as full tables.
struct SklOps {
    int k, l;
    std::vector<std::vector<int>> join, meet;  // indexed by encoded elements
};
SklOps skl_ops(int k, int l);

// Same operation evaluated with one explicit frame choice; used to verify
// frame independence.  a1/a2 are distinct nonzero first coordinates allowed
// by the frame (0 means "unused slot"), likewise b1/b2.
int skl_join_with_frame(int k, int l, int p, int q, int a1, int a2, int b1, int b2);
int skl_meet_with_frame(int k, int l, int p, int q, int a1, int a2, int b1, int b2);

// ---- Products and functions on them ------------------------------------

// Product of modular semilattices with row-major index encoding
// (component 0 most significant).
class ProductDomain {
  public:
    explicit ProductDomain(std::vector<ModularSemilattice> comps);

    int components() const { return (int)comps_.size(); }
    const ModularSemilattice& comp(int i) const { return comps_[i]; }
    long long size() const { return size_; }
    std::vector<int> decode(long long idx) const;
    long long encode(const std::vector<int>& tuple) const;
    bool leq(long long p, long long q) const;
    long long meet(long long p, long long q) const;
    int rank(long long p) const;

  private:
    std::vector<ModularSemilattice> comps_;
    long long size_;
};

// ---- Fractional join ----------------------------------------------------

// Elements u representable as a v b with p /\ q <= a <= p, p /\ q <= b <= q.
std::vector<int> interval_elements(const ModularSemilattice& L, int p, int q);

struct FractionalJoin {
    // (element, coefficient); coefficients are positive and sum to 1.
    std::vector<std::pair<long long, Rat>> terms;
};

// Fractional join of p and q.  Interval elements are plotted by the rank
// pair (r(u /\ p) - r(m), r(u /\ q) - r(m)); the maximal extreme points of
// their integer convex hull are weighted by the angular measure
// sigma(theta) = sin/(sin+cos) of their outer normal cones, evaluated
// exactly on rational slopes.
FractionalJoin fractional_join(const ModularSemilattice& L, int p, int q);

// Product version: the component hull subdivisions are merged on the common
// sigma axis, pairing the component extreme elements interval by interval.
FractionalJoin fractional_join(const ProductDomain& D, long long p, long long q);

// f(p) + f(q) >= f(p /\ q) + sum of coeff * f(u) over the fractional join,
// for every pair; infinities follow the usual extended-value conventions.
bool is_submodular(const ProductDomain& D, std::span<const ExtRat> f);
bool is_submodular(const ModularSemilattice& L, std::span<const ExtRat> f);

// Pairwise inequalities with componentwise star operations.  Tables are
// row-major over {0..k_1} x ... (and over encoded S_{k,l} elements for the
// twisted form).
bool is_k_submodular(const std::vector<int>& ks, std::span<const ExtRat> f);
bool is_kl_submodular(const std::vector<int>& ks, const std::vector<int>& ls,
                      std::span<const ExtRat> f);

// Index of the smallest value, lexicographically least on ties.
std::pair<long long, ExtRat> brute_force_minimize(std::span<const ExtRat> f);

}  // namespace dca
