#pragma once

#include <string>
#include <vector>

#include "angleset/cover.hpp"
#include "angleset/graph.hpp"

namespace angleset {

// Layers on vertices v_1 = v and v_2 = n + v. Edge e of H is the copy of
// source edge e on V_1 for e < |E|, and the cross edge of source edge e - |E|
// otherwise.
struct BlowupDecomposition {
    RotationGraph h;
    RotationGraph h_tilde;
    std::vector<int> iso;  // vertex of h -> vertex of h_tilde
};

// g must be plane, simple and loop-free; cover a valid (1,2) cover of g.
// Throws UnsupportedInput / MalformedInput on bad input and std::logic_error
// if a constructed layer fails to be plane.
BlowupDecomposition blowup_decomposition(const RotationGraph& g, const AngleAssignment& cover);

struct DecompositionReport {
    bool valid = false;
    bool isomorphic = false;
    bool layers_plane = false;
    bool union_matches = false;
    std::vector<std::string> violations;
};

DecompositionReport verify_decomposition(const RotationGraph& g, const BlowupDecomposition& d);

}  // namespace angleset
