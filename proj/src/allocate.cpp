#include "angleset/allocate.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "angleset/cover.hpp"
#include "angleset/transform.hpp"

namespace angleset {

namespace {

class Blossom {
public:
    explicit Blossom(const PlainGraph& g) : n_(g.num_vertices), adj_(n_) {
        for (const auto& e : g.edges) {
            if (e.is_loop()) continue;
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        match_.assign(n_, -1);
    }

    void set_matching(const std::vector<int>& mate) { match_ = mate; }

    void solve() {
        // greedy start
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0)
                for (int w : adj_[v])
                    if (match_[w] < 0) {
                        match_[v] = w;
                        match_[w] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) augment_from(v);
    }

    // Finds and applies one augmenting path from root; false if none.
    bool augment_from(int root) {
        int end = find_path(root);
        if (end < 0) return false;
        for (int v = end; v >= 0;) {
            int pv = parent_[v], ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
        return true;
    }

    const std::vector<int>& mate() const { return match_; }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int cur = lca(v, to);
                    blossom_.assign(n_, 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

std::vector<int> mates_of(int n, const Matching& m) {
    std::vector<int> mate(n, -1);
    for (auto [u, v] : m.pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v || mate[u] >= 0 || mate[v] >= 0)
            throw std::invalid_argument("not a matching");
        mate[u] = v;
        mate[v] = u;
    }
    return mate;
}

}  // namespace

Matching max_matching_general(const PlainGraph& g) {
    Blossom b(g);
    b.solve();
    Matching m;
    const auto& mate = b.mate();
    for (int v = 0; v < g.num_vertices; ++v)
        if (mate[v] > v) m.pairs.emplace_back(v, mate[v]);
    if (!is_maximum_matching(g, m)) throw std::logic_error("blossom search left an augmenting path");
    return m;
}

bool is_maximum_matching(const PlainGraph& g, const Matching& m) {
    Blossom b(g);
    b.set_matching(mates_of(g.num_vertices, m));
    for (int v = 0; v < g.num_vertices; ++v)
        if (b.mate()[v] < 0 && b.augment_from(v)) return false;
    return true;
}

OptimalAllocation optimal_allocation(const RotationGraph& g) {
    auto med = medial_graph(g);
    OptimalAllocation out;
    out.medial_matching = max_matching_general(med.graph);
    out.matched = out.medial_matching.size();
    std::vector<char> covered(g.num_edges(), 0);
    AngleAssignment asg;
    for (auto [x, y] : out.medial_matching.pairs) {
        int idx = -1;
        for (int i = 0; i < static_cast<int>(med.graph.edges.size()); ++i) {
            const auto& e = med.graph.edges[i];
            if ((e.u == x && e.v == y) || (e.u == y && e.v == x)) {
                idx = i;
                break;
            }
        }
        auto [v, s] = med.provenance.at(idx);
        asg.add({v, s, std::min(2, g.degree(v))});
        if (covered[x] || covered[y]) throw std::logic_error("matched angles overlap");
        covered[x] = covered[y] = 1;
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        if (covered[e]) continue;
        int v = std::min(g.edge(e).u, g.edge(e).v);
        const auto& r = g.rotation(v);
        int s = static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
        asg.add({v, s, std::min(2, g.degree(v))});
    }
    asg.normalize();
    out.result.size = asg.size();
    out.result.allocation = std::move(asg);
    if (out.result.size != g.num_edges() - out.matched) throw std::logic_error("allocation size formula violated");
    return out;
}

}  // namespace angleset
