#include "angleset/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "angleset/errors.hpp"

namespace angleset {

std::vector<std::string> validate_topological(const TopologicalGraph& tg) {
    std::vector<std::string> out = validate_graph(tg.base);
    const auto& g = tg.base;
    const int m = g.num_edges();
    if (static_cast<int>(tg.sequence.size()) != m) {
        out.push_back("crossing sequences do not match the edge count");
        return out;
    }
    const int k = tg.num_crossings();
    std::vector<std::vector<int>> seen_on(k);
    for (int e = 0; e < m; ++e)
        for (int c : tg.sequence[e]) {
            if (c < 0 || c >= k) {
                out.push_back("edge " + std::to_string(g.edge_label(e)) + " lists unknown crossing");
                continue;
            }
            seen_on[c].push_back(e);
        }
    std::set<std::pair<int, int>> pairs;
    for (int c = 0; c < k; ++c) {
        const auto& x = tg.crossings[c];
        std::string name = "crossing " + std::to_string(x.label);
        if (x.e < 0 || x.e >= m || x.f < 0 || x.f >= m) {
            out.push_back(name + ": unknown edge");
            continue;
        }
        if (x.e == x.f) out.push_back(name + ": an edge cannot cross itself");
        if (x.bit != 0 && x.bit != 1) out.push_back(name + ": orientation bit must be 0 or 1");
        const auto& a = g.edge(x.e);
        const auto& b = g.edge(x.f);
        if (a.is_loop() || b.is_loop()) out.push_back(name + ": crossings on self-loops are not supported");
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
            out.push_back(name + ": crossing edges share an endpoint");
        if (!pairs.insert({std::min(x.e, x.f), std::max(x.e, x.f)}).second)
            out.push_back(name + ": edges cross more than once");
        auto on = seen_on[c];
        std::sort(on.begin(), on.end());
        std::vector<int> want{std::min(x.e, x.f), std::max(x.e, x.f)};
        if (on != want) out.push_back(name + ": must appear exactly once on each of its two edges");
    }
    return out;
}

int piece_label(int edge_label, int piece) {
    long long s = static_cast<long long>(edge_label) + piece;
    long long v = s * (s + 1) / 2 + piece;
    if (v > INT32_MAX) throw UnsupportedInput("piece label overflows");
    return static_cast<int>(v);
}

RotationGraph planarize(const TopologicalGraph& tg) {
    auto problems = validate_topological(tg);
    if (!problems.empty()) throw MalformedInput("invalid topological graph: " + problems.front());
    const auto& g = tg.base;
    const int n = g.num_vertices();
    const int k = tg.num_crossings();

    RotationGraph out;
    int max_label = -1;
    for (int v = 0; v < n; ++v) {
        out.add_vertex(g.vertex_label(v));
        max_label = std::max(max_label, g.vertex_label(v));
    }
    for (int c = 0; c < k; ++c) out.add_vertex(max_label + 1 + c);

    // piece_of[e][j]: edge index of piece j; pos[c] per (edge): index j with sequence[e][j] == c
    std::vector<std::vector<int>> piece_of(g.num_edges());
    std::vector<std::map<int, int>> pos(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& seq = tg.sequence[e];
        const auto& ed = g.edge(e);
        for (int j = 0; j <= static_cast<int>(seq.size()); ++j) {
            int a = j == 0 ? ed.u : n + seq[j - 1];
            int b = j == static_cast<int>(seq.size()) ? ed.v : n + seq[j];
            piece_of[e].push_back(out.add_edge(a, b, piece_label(g.edge_label(e), j)));
        }
        for (int j = 0; j < static_cast<int>(seq.size()); ++j) pos[e][seq[j]] = j;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> r;
        for (int e : g.rotation(v)) {
            const auto& ed = g.edge(e);
            if (ed.is_loop())
                r.push_back(piece_of[e][0]);
            else
                r.push_back(ed.u == v ? piece_of[e].front() : piece_of[e].back());
        }
        out.set_rotation(v, std::move(r));
    }
    for (int c = 0; c < k; ++c) {
        const auto& x = tg.crossings[c];
        int je = pos[x.e].at(c), jf = pos[x.f].at(c);
        int e_src = piece_of[x.e][je], e_tgt = piece_of[x.e][je + 1];
        int f_src = piece_of[x.f][jf], f_tgt = piece_of[x.f][jf + 1];
        if (x.bit == 0)
            out.set_rotation(n + c, {e_src, f_src, e_tgt, f_tgt});
        else
            out.set_rotation(n + c, {e_src, f_tgt, e_tgt, f_src});
    }
    return out;
}

BipartiteGraph build_gmat(const RotationGraph& g) {
    BipartiteGraph b;
    b.left = g.num_edges();
    b.right = 2 * g.num_vertices();
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        b.edges.emplace_back(e, 2 * ed.u);
        b.edges.emplace_back(e, 2 * ed.u + 1);
        if (!ed.is_loop()) {
            b.edges.emplace_back(e, 2 * ed.v);
            b.edges.emplace_back(e, 2 * ed.v + 1);
        }
    }
    return b;
}

MedialGraph medial_graph(const RotationGraph& g) {
    MedialGraph med;
    med.graph.num_vertices = g.num_edges();
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& r = g.rotation(v);
        const int deg = static_cast<int>(r.size());
        if (deg < 2) continue;
        for (int s = 0; s < deg; ++s) {
            int e = r[s], f = r[(s + 1) % deg];
            if (e == f) continue;
            if (!seen.insert({std::min(e, f), std::max(e, f)}).second) continue;
            med.graph.add_edge(e, f);
            med.provenance.emplace_back(v, s);
        }
    }
    return med;
}

PlainGraph blowup2(const RotationGraph& g) {
    PlainGraph p;
    const int n = g.num_vertices();
    p.num_vertices = 2 * n;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) throw UnsupportedInput("2-blowup of a graph with self-loops is not supported");
        p.add_edge(e.u, e.v);
        p.add_edge(e.u, e.v + n);
        p.add_edge(e.u + n, e.v);
        p.add_edge(e.u + n, e.v + n);
    }
    return p;
}

}  // namespace angleset
