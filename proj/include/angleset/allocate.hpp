#pragma once

#include "angleset/density.hpp"
#include "angleset/graph.hpp"
#include "angleset/solve.hpp"

namespace angleset {

// Edmonds' blossom algorithm, O(V^3). Loops are ignored and parallel edges
// are treated as one.
Matching max_matching_general(const PlainGraph& g);

// True iff no augmenting path exists for `m` in g (slow check by a fresh
// search from every exposed vertex).
bool is_maximum_matching(const PlainGraph& g, const Matching& m);

struct OptimalAllocation {
    AllocationResult result;
    Matching medial_matching;
    int matched = 0;  // |M|
};

// Matched medial edges become angles at their (vertex, slot) provenance;
// every edge left uncovered gets a width-2 angle at its lower-id endpoint
// starting at its own slot. Size is |E| - |M|.
OptimalAllocation optimal_allocation(const RotationGraph& g);

}  // namespace angleset
