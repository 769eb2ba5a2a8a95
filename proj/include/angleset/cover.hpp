#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "angleset/graph.hpp"

namespace angleset {

// Problem parameters: at most `a` angles per vertex, each spanning `m`
// consecutive slots. The basic angle cover problem is (1, 2).
struct CoverSpec {
    static constexpr int unbounded = INT_MAX;

    int a = 1;
    int m = 2;

    static CoverSpec basic() { return {1, 2}; }
    static CoverSpec allocation() { return {unbounded, 2}; }
};

// Contiguous arc of slots start, start+1, ..., start+width-1 (mod deg).
struct Angle {
    int vertex = 0;
    int start = 0;
    int width = 0;

    friend auto operator<=>(const Angle&, const Angle&) = default;
};

// Width an angle of `spec` has at v: min(m, deg v).
int effective_width(const RotationGraph& g, int v, const CoverSpec& spec);

struct AngleAssignment {
    std::vector<Angle> angles;

    void add(Angle a) { angles.push_back(a); }
    // Sorts by (vertex, start, width).
    void normalize();
    int size() const { return static_cast<int>(angles.size()); }
    std::vector<std::vector<Angle>> by_vertex(int num_vertices) const;
};

enum class Verdict { yes, no, indeterminate };

const char* to_string(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::indeterminate;
    std::optional<AngleAssignment> assignment;  // present iff verdict == yes
    long long nodes = 0;

    bool yes() const { return verdict == Verdict::yes; }
};

struct CoverReport {
    bool valid = false;
    std::vector<int> uncovered_edges;
    std::vector<std::string> violations;
};

// Marks covered[e] for every edge some angle of `asg` covers. Throws
// MalformedInput for angles at unknown vertices or slots.
std::vector<char> covered_edges(const RotationGraph& g, const AngleAssignment& asg);

// Valid iff every vertex has <= spec.a angles, every angle has width
// min(m, deg) and every edge is covered at one of its endpoints. Violations are
// reported as data; references to nonexistent vertices/slots throw MalformedInput.
CoverReport check_cover(const RotationGraph& g, const AngleAssignment& asg, const CoverSpec& spec);

// Per-vertex selected slots: the 0-1 variables of the covering program. A
// selection is valid iff each vertex's slot set is coverable by <= a arcs of
// width m (for (1,2): at most two slots, consecutive) and every edge has at
// least one selected end.
struct SlotSelection {
    std::vector<std::vector<int>> slots;
};

CoverReport check_slot_selection(const RotationGraph& g, const SlotSelection& sel, const CoverSpec& spec);
SlotSelection to_selection(const RotationGraph& g, const AngleAssignment& asg);

}  // namespace angleset
