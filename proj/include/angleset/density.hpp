#pragma once

#include <utility>
#include <vector>

#include "angleset/graph.hpp"
#include "angleset/transform.hpp"

namespace angleset {

// Vertex-disjoint edge set, stored as endpoint pairs.
struct Matching {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
};

struct BipartiteMatching {
    Matching matching;            // (left, right)
    std::vector<int> mate_left;   // -1 if unmatched
    std::vector<int> mate_right;
};

// Hopcroft-Karp.
BipartiteMatching max_bipartite_matching(const BipartiteGraph& b);

struct DensityReport {
    bool low_density = false;
    Matching matching;             // in build_gmat(g)
    std::vector<int> witness;      // vertices S with |E(S)| > 2|S|, empty if low density
};

DensityReport check_low_density(const RotationGraph& g);

// Edges with both endpoints in the vertex set.
int induced_edge_count(const RotationGraph& g, const std::vector<int>& vertices);

}  // namespace angleset
