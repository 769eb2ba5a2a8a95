#pragma once

#include <vector>

#include "angleset/graph.hpp"

namespace angleset {

// A crossing between edges e and f. With bit 0 the cyclic order of the four
// pieces around the crossing is <toward e's source, toward f's source,
// toward e's target, toward f's target>; bit 1 swaps f's two pieces.
struct Crossing {
    int label = 0;
    int e = 0;
    int f = 0;
    int bit = 0;
};

// Rotation graph plus, for every edge, the crossings met when walking it from
// its first endpoint to its second.
struct TopologicalGraph {
    RotationGraph base;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> sequence;  // per edge, indices into crossings

    int num_crossings() const { return static_cast<int>(crossings.size()); }
};

std::vector<std::string> validate_topological(const TopologicalGraph& tg);

// Label given to piece j of an edge labelled e: the Cantor pairing
// (e + j)(e + j + 1)/2 + j.
int piece_label(int edge_label, int piece);

// Replaces every crossing by a new degree-4 vertex. Crossing vertices are
// appended in crossing order and labelled after the largest vertex label.
RotationGraph planarize(const TopologicalGraph& tg);

struct BipartiteGraph {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;  // (left, right)
};

// Left side: edges of g. Right side: vertex v appears as 2v and 2v+1.
BipartiteGraph build_gmat(const RotationGraph& g);

struct MedialGraph {
    PlainGraph graph;                              // vertex i is edge i of the source
    std::vector<std::pair<int, int>> provenance;   // per medial edge: (vertex, slot s) for slots s, s+1
};

// One medial edge per consecutive slot pair; loops dropped, parallel edges
// merged keeping the first (vertex, slot) in order.
MedialGraph medial_graph(const RotationGraph& g);

// Vertices v and v + n for v in V; four edges per source edge.
// Throws UnsupportedInput on self-loops.
PlainGraph blowup2(const RotationGraph& g);

}  // namespace angleset
