#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dca/rational.hpp"

namespace dca {

// Finite poset given by Hasse covers (lo, hi).  Construction computes the
// reflexive-transitive closure and rejects cyclic input.
class FinitePoset {
  public:
    FinitePoset(int n, std::vector<std::pair<int, int>> hasse);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    // Global minimum, or absent.
    std::optional<int> bottom() const;
    // Maximum of the set of common upper bounds, when that set has one.
    std::optional<int> join_if_exists(int a, int b) const;
    // Unique maximal common lower bound, or absent when not unique/none.
    std::optional<int> meet_if_exists(int a, int b) const;

  private:
    int n_;
    std::vector<std::pair<int, int>> hasse_;
    std::vector<std::vector<bool>> leq_;
};

// Meet-semilattice whose principal ideals are modular lattices and in which
// pairwise-joinable triples are joinable.  Construction requires a global
// minimum and total meets; full modularity is a separate predicate so that
// non-modular semilattices can still be inspected.
class ModularSemilattice {
  public:
    explicit ModularSemilattice(FinitePoset poset);

    int size() const { return poset_.size(); }
    const FinitePoset& poset() const { return poset_; }
    bool leq(int a, int b) const { return poset_.leq(a, b); }
    int bottom() const { return bottom_; }
    int meet(int a, int b) const { return meet_[a][b]; }
    std::optional<int> join_if_exists(int a, int b) const;
    // Length of a maximal chain from the bottom.
    int rank(int p) const { return rank_[p]; }

  private:
    FinitePoset poset_;
    int bottom_;
    std::vector<std::vector<int>> meet_;
    std::vector<std::vector<int>> join_;  // -1 when absent
    std::vector<int> rank_;
};

// True when P (which must have a global minimum) has total meets, every
// principal ideal is a modular lattice, and every pairwise-joinable triple
// is joinable.
bool is_modular_semilattice(const FinitePoset& p);

}  // namespace dca
