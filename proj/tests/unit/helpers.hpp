#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "angleset/cover.hpp"
#include "angleset/graph.hpp"
#include "angleset/instances.hpp"

namespace testing {

using namespace angleset;

inline PlainGraph complete_graph(int k) {
    PlainGraph p;
    p.num_vertices = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) p.add_edge(i, j);
    return p;
}

inline PlainGraph cycle_graph(int k) {
    PlainGraph p;
    p.num_vertices = k;
    for (int i = 0; i < k; ++i) p.add_edge(i, (i + 1) % k);
    return p;
}

inline PlainGraph random_simple(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    PlainGraph g;
    g.num_vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) g.add_edge(i, j);
    return g;
}

// Per vertex, every union of `a` width-m arcs, as slot bitmasks.
inline std::vector<unsigned> vertex_choices(int deg, int a, int m) {
    std::set<unsigned> out = {0};
    if (deg == 0) return {0};
    int w = std::min(m, deg);
    for (int k = 0; k < a; ++k) {
        std::set<unsigned> next = out;
        for (unsigned base : out)
            for (int s = 0; s < deg; ++s) {
                unsigned arc = 0;
                for (int t = 0; t < w; ++t) arc |= 1u << ((s + t) % deg);
                next.insert(base | arc);
            }
        out = next;
    }
    return {out.begin(), out.end()};
}

// Fewest edges left uncovered by any (a, m) assignment, by enumeration.
inline int brute_min_uncovered(const RotationGraph& g, int a = 1, int m = 2) {
    const int n = g.num_vertices();
    std::vector<std::vector<unsigned>> choices(n);
    for (int v = 0; v < n; ++v) choices[v] = vertex_choices(g.degree(v), a, m);
    std::vector<unsigned> pick(n, 0);
    auto uncovered = [&] {
        std::vector<char> cov(g.num_edges(), 0);
        for (int v = 0; v < n; ++v)
            for (int s = 0; s < g.degree(v); ++s)
                if (pick[v] >> s & 1) cov[g.rotation(v)[s]] = 1;
        return static_cast<int>(std::count(cov.begin(), cov.end(), 0));
    };
    int best = g.num_edges();
    std::vector<int> idx(n, 0);
    while (best > 0) {
        for (int v = 0; v < n; ++v) pick[v] = choices[v][idx[v]];
        best = std::min(best, uncovered());
        int v = 0;
        while (v < n && ++idx[v] == static_cast<int>(choices[v].size())) idx[v++] = 0;
        if (v == n) break;
    }
    return best;
}

inline bool brute_cover_exists(const RotationGraph& g, int a = 1, int m = 2) { return brute_min_uncovered(g, a, m) == 0; }

}  // namespace testing
