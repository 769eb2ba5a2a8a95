#pragma once

#include <vector>

#include "angleset/cover.hpp"
#include "angleset/graph.hpp"

namespace angleset {

inline constexpr long long default_budget = 10'000'000;

struct OracleOptions {
    CoverSpec spec;
    long long budget = default_budget;
    // Per-vertex angle limit; empty means spec.a everywhere.
    std::vector<int> angle_limit;
    // Edges the search may leave uncovered.
    int max_uncovered = 0;
};

struct OracleResult {
    Verdict verdict = Verdict::indeterminate;
    AngleAssignment assignment;       // meaningful iff verdict == yes
    std::vector<int> uncovered;       // edges left uncovered by the assignment
    long long nodes = 0;
};

// Exhaustive search over edge-to-endpoint assignments with unit propagation,
// dominance (a vertex that can take all its open edges takes them) and a
// global capacity bound. Vertices of degree > 64 must be unconstrained.
OracleResult oracle_search(const RotationGraph& g, const OracleOptions& opt);

Certificate oracle_solve(const RotationGraph& g, const CoverSpec& spec, long long budget = default_budget);

// Assignment leaving the fewest edges uncovered. verdict yes means the
// optimum was proven; indeterminate means the budget ran out first.
OracleResult oracle_max_cover(const RotationGraph& g, const CoverSpec& spec, long long budget = default_budget);

// Max degree <= 4; always yes.
Certificate solve_deg4(const RotationGraph& g);

// No degree-3 vertex; 2-SAT over darts.
Certificate solve_no_deg3(const RotationGraph& g);

// delta/2 - floor(delta/6).
int sextet_angle_bound(int delta);

// delta even, max degree <= delta; always yes for spec (sextet_angle_bound(delta), 2).
Certificate solve_sextet(const RotationGraph& g, int delta);

bool is_outerplane(const RotationGraph& g);

// Peels ear vertices with backtracking, falls back to the oracle.
Certificate solve_outerplane(const RotationGraph& g, long long budget = default_budget);

struct AllocationResult {
    AngleAssignment allocation;
    int size = 0;
};

inline constexpr int default_allocation_cap = 18;

// Minimum total number of width-m angles covering every edge, any count per
// vertex. Exhaustive over 2^|E| dart choices.
AllocationResult min_allocation_bruteforce(const RotationGraph& g, int m = 2, int cap = default_allocation_cap);

}  // namespace angleset
