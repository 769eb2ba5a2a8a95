#include "angleset/thickness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "angleset/errors.hpp"
#include "angleset/transform.hpp"

namespace angleset {

BlowupDecomposition blowup_decomposition(const RotationGraph& g, const AngleAssignment& cover) {
    auto problems = validate_graph(g);
    if (!problems.empty()) throw MalformedInput("invalid rotation graph: " + problems.front());
    if (!underlying(g).is_simple()) throw UnsupportedInput("decomposition needs a simple loop-free graph");
    if (!trace_faces(g).is_plane) throw UnsupportedInput("decomposition needs a plane rotation system");
    auto rep = check_cover(g, cover, CoverSpec::basic());
    if (!rep.valid) throw MalformedInput("not a valid angle cover");

    const int n = g.num_vertices();
    const int m = g.num_edges();
    // per vertex: edges its angle covers, in arc order (start member first)
    std::vector<std::vector<int>> members(n);
    for (const auto& a : cover.angles) {
        const auto& r = g.rotation(a.vertex);
        const int deg = static_cast<int>(r.size());
        for (int k = 0; k < std::min(a.width, deg); ++k) members[a.vertex].push_back(r[(a.start + k) % deg]);
    }
    auto covers = [&](int v, int e) {
        return std::find(members[v].begin(), members[v].end(), e) != members[v].end();
    };

    BlowupDecomposition d;
    auto& h = d.h;
    for (int v = 0; v < 2 * n; ++v) h.add_vertex();
    for (int e = 0; e < m; ++e) h.add_edge(g.edge(e).u, g.edge(e).v);
    std::vector<int> coverer(m, -1);
    for (int e = 0; e < m; ++e) {
        int u = g.edge(e).u, w = g.edge(e).v;
        bool cu = covers(u, e), cw = covers(w, e);
        if (cu && cw)
            coverer[e] = std::min(u, w);
        else
            coverer[e] = cu ? u : w;
        int o = g.edge(e).other(coverer[e]);
        h.add_edge(n + coverer[e], o);
    }

    for (int v = 0; v < n; ++v) {
        // cross edges arriving at v_1, placed next to the slot of their source edge
        std::vector<int> r;
        for (int e : g.rotation(v)) {
            int c = coverer[e];
            if (c == v) {
                r.push_back(e);
                continue;
            }
            bool is_start = members[c].front() == e;
            if (is_start) {
                r.push_back(m + e);
                r.push_back(e);
            } else {
                r.push_back(e);
                r.push_back(m + e);
            }
        }
        h.set_rotation(v, std::move(r));
        std::vector<int> r2;
        for (int e : members[v])
            if (coverer[e] == v) r2.push_back(m + e);
        h.set_rotation(n + v, std::move(r2));
    }

    d.iso.resize(2 * n);
    for (int v = 0; v < 2 * n; ++v) d.iso[v] = v < n ? v + n : v - n;
    auto& ht = d.h_tilde;
    for (int v = 0; v < 2 * n; ++v) ht.add_vertex();
    for (int e = 0; e < h.num_edges(); ++e) ht.add_edge(d.iso[h.edge(e).u], d.iso[h.edge(e).v]);
    for (int v = 0; v < 2 * n; ++v) ht.set_rotation(d.iso[v], h.rotation(v));

    if (!trace_faces(h).is_plane || !trace_faces(ht).is_plane)
        throw std::logic_error("constructed layer is not plane");
    return d;
}

namespace {

using PairCount = std::map<std::pair<int, int>, int>;

PairCount pair_multiset(const std::vector<Edge>& edges, const std::vector<int>* map = nullptr) {
    PairCount out;
    for (const auto& e : edges) {
        int u = map ? (*map)[e.u] : e.u;
        int v = map ? (*map)[e.v] : e.v;
        ++out[{std::min(u, v), std::max(u, v)}];
    }
    return out;
}

std::string pair_name(std::pair<int, int> p, int n) {
    auto name = [n](int x) { return std::to_string(x % n) + (x < n ? "_1" : "_2"); };
    return "(" + name(p.first) + ", " + name(p.second) + ")";
}

}  // namespace

DecompositionReport verify_decomposition(const RotationGraph& g, const BlowupDecomposition& d) {
    DecompositionReport rep;
    const int n = g.num_vertices();
    const int n2 = 2 * n;
    if (d.h.num_vertices() != n2 || d.h_tilde.num_vertices() != n2 || static_cast<int>(d.iso.size()) != n2) {
        rep.violations.push_back("layers must have 2|V| vertices and iso must cover all of them");
        return rep;
    }

    // (i) isomorphism
    rep.isomorphic = true;
    {
        auto sorted = d.iso;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n2; ++i)
            if (sorted[i] != i) {
                rep.isomorphic = false;
                rep.violations.push_back("iso is not a bijection");
                break;
            }
        if (rep.isomorphic && pair_multiset(d.h.edges(), &d.iso) != pair_multiset(d.h_tilde.edges())) {
            rep.isomorphic = false;
            rep.violations.push_back("iso does not map the edges of H onto the edges of H_tilde");
        }
    }

    // (ii) both layers plane
    rep.layers_plane = true;
    for (const auto* layer : {&d.h, &d.h_tilde}) {
        const char* name = layer == &d.h ? "H" : "H_tilde";
        auto problems = validate_graph(*layer);
        if (!problems.empty()) {
            rep.layers_plane = false;
            rep.violations.push_back(std::string(name) + ": " + problems.front());
            continue;
        }
        auto faces = trace_faces(*layer);
        if (!faces.is_plane) {
            rep.layers_plane = false;
            rep.violations.push_back(std::string(name) + " has genus " + std::to_string(faces.max_genus()));
        }
    }

    // (iii) union equals the 2-blowup
    PairCount have = pair_multiset(d.h.edges());
    for (auto& [p, c] : pair_multiset(d.h_tilde.edges())) have[p] += c;
    PairCount want = pair_multiset(blowup2(g).edges);
    rep.union_matches = true;
    for (auto& [p, c] : want) {
        int got = have.count(p) ? have[p] : 0;
        if (got < c) {
            rep.union_matches = false;
            rep.violations.push_back("union is missing " + pair_name(p, n));
        }
    }
    for (auto& [p, c] : have) {
        int need = want.count(p) ? want[p] : 0;
        if (c > need) {
            rep.union_matches = false;
            rep.violations.push_back("union has excess " + pair_name(p, n));
        }
    }
    rep.valid = rep.isomorphic && rep.layers_plane && rep.union_matches;
    return rep;
}

}  // namespace angleset
