#pragma once

#include <cstdint>
#include <string>

#include "dca/json_io.hpp"

namespace dca {

// Size knobs for generate(); zero-valued fields fall back to per-kind defaults.
struct GenParams {
    int n = 0;          // variables / nodes / grid dimension
    int k = 0;          // commodity terminals (mcmf only)
    std::string graph;  // zeroext family: p4, k13, c4, grid33, q3, k3, k4
};

// Deterministic instance builder: the same kind, seed, and params always
// yield the same document. kind is one of mcmf, zeroext, gridfn, poset.
// Multiflow demands are clamped to each terminal's max-flow connectivity so
// generated instances are always routable.
Json generate_instance(const std::string& kind, std::uint64_t seed, const GenParams& params);

}  // namespace dca
