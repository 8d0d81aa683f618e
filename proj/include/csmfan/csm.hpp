#pragma once

#include <string>
#include <vector>

#include "csmfan/intersect.hpp"

namespace csmfan {

// k-skeleton of the Bergman fan weighted by signed products of step-minor
// beta invariants. Flags whose product vanishes are recorded separately; the
// fan itself carries only nonzero weights.
struct CsmCycle {
    int k = 0;
    WeightedFan fan{0, 0, {}};
    std::vector<std::pair<FlagOfFlats, Int>> weighted_flags;  // nonzero weights
    std::vector<FlagOfFlats> dropped_flags;                   // zero beta product
};

CsmCycle csm_cycle(const Matroid& m, int k);

// degree of the CSM cycle by stable intersection (exact linear algebra)
Int csm_degree_geometric(const Matroid& m, int k, uint64_t seed = 0);

// the same degree summed over increasing flags, no geometry involved
Int csm_degree_combinatorial(const Matroid& m, int k);

struct TheoremRow {
    int k = 0;
    Int geometric, combinatorial, tutte;
    bool pass = false;
};

struct TheoremReport {
    std::string matroid_name;
    int rank = 0;
    bool all_pass = false;
    std::vector<TheoremRow> rows;
};

// For each k: geometric degree, combinatorial degree, and the signed Tutte
// coefficient (-1)^(d-k) t_{k+1,0} must agree.
TheoremReport verify_main_theorem(const Matroid& m, uint64_t seed = 0);

}  // namespace csmfan
