#include "angleset/density.hpp"

#include <limits>
#include <queue>

namespace angleset {

BipartiteMatching max_bipartite_matching(const BipartiteGraph& b) {
    std::vector<std::vector<int>> adj(b.left);
    for (auto [l, r] : b.edges) adj[l].push_back(r);
    std::vector<int> mate_l(b.left, -1), mate_r(b.right, -1), dist(b.left);
    const int inf = std::numeric_limits<int>::max();

    auto bfs = [&] {
        std::queue<int> q;
        for (int l = 0; l < b.left; ++l) {
            dist[l] = mate_l[l] < 0 ? 0 : inf;
            if (mate_l[l] < 0) q.push(l);
        }
        bool found = false;
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj[l]) {
                int w = mate_r[r];
                if (w < 0)
                    found = true;
                else if (dist[w] == inf) {
                    dist[w] = dist[l] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    // iterative layered DFS; it[l] is the next neighbour of l to try
    std::vector<size_t> it(b.left);
    auto dfs = [&](int root) {
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int l = stack.back();
            if (it[l] == adj[l].size()) {
                dist[l] = inf;
                stack.pop_back();
                if (!stack.empty()) ++it[stack.back()];
                continue;
            }
            int r = adj[l][it[l]];
            int w = mate_r[r];
            if (w < 0) {
                for (int x : stack) {
                    int rr = adj[x][it[x]];
                    mate_l[x] = rr;
                    mate_r[rr] = x;
                }
                return true;
            }
            if (dist[w] == dist[l] + 1)
                stack.push_back(w);
            else
                ++it[l];
        }
        return false;
    };

    while (bfs()) {
        std::fill(it.begin(), it.end(), 0);
        for (int l = 0; l < b.left; ++l)
            if (mate_l[l] < 0) dfs(l);
    }

    BipartiteMatching out;
    out.mate_left = mate_l;
    out.mate_right = mate_r;
    for (int l = 0; l < b.left; ++l)
        if (mate_l[l] >= 0) out.matching.pairs.emplace_back(l, mate_l[l]);
    return out;
}

int induced_edge_count(const RotationGraph& g, const std::vector<int>& vertices) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : vertices) in[v] = 1;
    int count = 0;
    for (const auto& e : g.edges())
        if (in[e.u] && in[e.v]) ++count;
    return count;
}

DensityReport check_low_density(const RotationGraph& g) {
    auto b = build_gmat(g);
    auto bm = max_bipartite_matching(b);
    DensityReport rep;
    rep.matching = bm.matching;
    rep.low_density = bm.matching.size() == g.num_edges();
    if (rep.low_density) return rep;

    std::vector<std::vector<int>> adj(b.left);
    for (auto [l, r] : b.edges) adj[l].push_back(r);
    std::vector<char> seen_l(b.left, 0), seen_r(b.right, 0);
    std::queue<int> q;
    for (int l = 0; l < b.left; ++l)
        if (bm.mate_left[l] < 0) {
            seen_l[l] = 1;
            q.push(l);
        }
    while (!q.empty()) {
        int l = q.front();
        q.pop();
        for (int r : adj[l]) {
            if (seen_r[r]) continue;
            seen_r[r] = 1;
            int w = bm.mate_right[r];
            if (w >= 0 && !seen_l[w]) {
                seen_l[w] = 1;
                q.push(w);
            }
        }
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (seen_r[2 * v] || seen_r[2 * v + 1]) rep.witness.push_back(v);
    return rep;
}

}  // namespace angleset
