#pragma once

#include <array>
#include <optional>
#include <vector>

#include "angleset/cover.hpp"
#include "angleset/graph.hpp"
#include "angleset/solve.hpp"

namespace angleset {

// Where the pieces of each colour gadget ended up in the reduction graph.
// Indices j are 0-based here (path position j+1).
struct GadgetMap {
    std::vector<int> centre;                                  // c(v)
    std::vector<std::array<std::vector<int>, 3>> path;        // e^k_j(v)
    std::vector<std::array<std::vector<int>, 3>> sep_a;       // first vertex of the a-side separator block
    std::vector<std::array<std::vector<int>, 3>> sep_b;       // first vertex of the b-side separator block
    std::vector<std::array<int, 3>> centre_edge;              // edge (c(v), e^k_1(v)), -1 if deg v = 0
    std::vector<std::array<int, 3>> cross;                    // per source edge, per colour
    std::vector<std::vector<int>> incident;                   // E_1(v), ..., E_deg(v)(v) as source edge ids
};

struct Reduction {
    RotationGraph graph;
    GadgetMap map;
};

// 3-colouring to angle cover. g must be simple and loop-free.
Reduction reduce_3col(const PlainGraph& g);

using Colouring = std::vector<int>;

// Colour of v = a colour k whose centre edge (c(v), e^k_1(v)) is not covered
// by c(v). Throws MalformedInput if cover is not a valid (1,2) cover of H.
Colouring extract_3colouring(const RotationGraph& h, const AngleAssignment& cover, const GadgetMap& map);

// The cover built from a proper colouring in the forward direction of the
// equivalence. Throws MalformedInput if the colouring is not proper.
AngleAssignment cover_from_3colouring(const RotationGraph& h, const GadgetMap& map, const PlainGraph& g,
                                      const Colouring& colouring);

// a-angle version: 2(a-1) stubs into private copies of K_{4a+1} at every
// path vertex (before the a-separator) and every centre (between colours 0, 1).
Reduction reduce_multi(const PlainGraph& g, int a);

// K_7 plus b1, b2 joined to all of it; vertex 9 is the external attachment
// vertex joined to b1 and b2.
struct TGraph {
    RotationGraph graph;
    int b1 = 7;
    int b2 = 8;
    int external = 9;
    int internal_vertices = 9;
    int internal_edges = 37;  // including the two stubs
};

TGraph build_T();

// 2-angle version of maximum degree 8 using T copies and a pendant x.
Reduction reduce_2angle_deg8(const PlainGraph& g);

// m-wide version: m-1 separators in place of each of a, b; m-2 between
// consecutive centre edges.
Reduction reduce_wide(const PlainGraph& g, int m);

struct WitnessReduction {
    RotationGraph graph;
    std::vector<int> dropped;  // D, edge ids of the witness
    int copies = 0;            // |D|
};

// Builds G_H for an explicit D. Vertex x_{v,i} has index i*|V(G)| + v and
// y_{u,j,v} comes after all x vertices. Throws if D is empty or names bad edges.
WitnessReduction build_witness_graph(const RotationGraph& g, const RotationGraph& h, int a,
                                     const std::vector<int>& dropped);

// Confirms with the oracle that h has no a-angle cover, takes D from a
// maximum a-angle assignment of h and builds G_H. Throws InvalidWitness if h
// has a cover or the oracle runs out of budget.
WitnessReduction reduce_witness(const RotationGraph& g, const RotationGraph& h, int a,
                                long long budget = default_budget);

inline constexpr int default_colouring_cap = 40;

bool check_3colouring(const PlainGraph& g, const Colouring& colouring);
std::optional<Colouring> brute_3col(const PlainGraph& g, int cap = default_colouring_cap);

}  // namespace angleset
