#include "angleset/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "angleset/errors.hpp"

namespace angleset {

RotationGraph::RotationGraph(int num_vertices) {
    for (int i = 0; i < num_vertices; ++i) add_vertex();
}

int RotationGraph::add_vertex() { return add_vertex(num_vertices()); }

int RotationGraph::add_vertex(int label) {
    rot_.emplace_back();
    vlabel_.push_back(label);
    return num_vertices() - 1;
}

int RotationGraph::add_edge(int u, int v) { return add_edge(u, v, num_edges()); }

int RotationGraph::add_edge(int u, int v, int label) {
    edges_.push_back({u, v});
    elabel_.push_back(label);
    return num_edges() - 1;
}

int RotationGraph::add_edge_appended(int u, int v) {
    int e = add_edge(u, v);
    rot_[u].push_back(e);
    rot_[v].push_back(e);
    return e;
}

int RotationGraph::max_degree() const {
    int best = 0;
    for (const auto& r : rot_) best = std::max(best, static_cast<int>(r.size()));
    return best;
}

void RotationGraph::reset_labels() {
    std::iota(vlabel_.begin(), vlabel_.end(), 0);
    std::iota(elabel_.begin(), elabel_.end(), 0);
}

int RotationGraph::find_vertex(int label) const {
    auto it = std::find(vlabel_.begin(), vlabel_.end(), label);
    return it == vlabel_.end() ? -1 : static_cast<int>(it - vlabel_.begin());
}

int RotationGraph::find_edge(int label) const {
    auto it = std::find(elabel_.begin(), elabel_.end(), label);
    return it == elabel_.end() ? -1 : static_cast<int>(it - elabel_.begin());
}

std::vector<int> PlainGraph::degrees() const {
    std::vector<int> deg(num_vertices, 0);
    for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

int PlainGraph::max_degree() const {
    auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool PlainGraph::is_simple() const {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.is_loop()) return false;
        keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

PlainGraph underlying(const RotationGraph& g) {
    PlainGraph p;
    p.num_vertices = g.num_vertices();
    p.edges = g.edges();
    return p;
}

RotationGraph with_sorted_rotation(const PlainGraph& p) {
    RotationGraph g(p.num_vertices);
    std::vector<std::vector<std::pair<int, int>>> inc(p.num_vertices);
    for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
        const auto& ed = p.edges[e];
        g.add_edge(ed.u, ed.v);
        inc[ed.u].emplace_back(ed.v, e);
        inc[ed.v].emplace_back(ed.u, e);
    }
    for (int v = 0; v < p.num_vertices; ++v) {
        std::stable_sort(inc[v].begin(), inc[v].end());
        std::vector<int> order;
        order.reserve(inc[v].size());
        for (auto [w, e] : inc[v]) order.push_back(e);
        g.set_rotation(v, std::move(order));
    }
    return g;
}

std::vector<std::string> validate_graph(const RotationGraph& g) {
    std::vector<std::string> out;
    const int n = g.num_vertices();
    const int m = g.num_edges();
    auto vname = [&](int v) { return std::to_string(g.vertex_label(v)); };
    auto ename = [&](int e) { return std::to_string(g.edge_label(e)); };

    bool endpoints_ok = true;
    for (int e = 0; e < m; ++e) {
        const auto& ed = g.edge(e);
        if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n) {
            out.push_back("edge " + ename(e) + ": endpoint is not a vertex");
            endpoints_ok = false;
        }
    }

    // count[e] per endpoint side: occurrences of e in rotation of u and of v
    std::vector<int> at_u(m, 0), at_v(m, 0);
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < g.degree(v); ++s) {
            int e = g.rotation(v)[s];
            if (e < 0 || e >= m) {
                out.push_back("vertex " + vname(v) + " slot " + std::to_string(s) + ": names unknown edge " +
                              std::to_string(e));
                continue;
            }
            const auto& ed = g.edge(e);
            if (ed.u != v && ed.v != v) {
                out.push_back("vertex " + vname(v) + " slot " + std::to_string(s) + ": edge " + ename(e) +
                              " is not incident");
                continue;
            }
            if (ed.u == v) ++at_u[e];
            if (ed.v == v && !ed.is_loop()) ++at_v[e];
        }
    }
    if (!endpoints_ok) return out;
    for (int e = 0; e < m; ++e) {
        const auto& ed = g.edge(e);
        if (ed.is_loop()) {
            if (at_u[e] != 2)
                out.push_back("self-loop " + ename(e) + " at vertex " + vname(ed.u) + " appears " +
                              std::to_string(at_u[e]) + " times in the rotation, expected 2");
        } else {
            if (at_u[e] != 1)
                out.push_back("edge " + ename(e) + " appears " + std::to_string(at_u[e]) +
                              " times in the rotation of vertex " + vname(ed.u) + ", expected 1");
            if (at_v[e] != 1)
                out.push_back("edge " + ename(e) + " appears " + std::to_string(at_v[e]) +
                              " times in the rotation of vertex " + vname(ed.v) + ", expected 1");
        }
    }
    return out;
}

DartTable::DartTable(const RotationGraph& g) {
    auto problems = validate_graph(g);
    if (!problems.empty()) throw MalformedInput("invalid rotation graph: " + problems.front());
    const int n = g.num_vertices();
    dart_.assign(2 * static_cast<size_t>(g.num_edges()), Dart{-1, -1});
    offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + g.degree(v);
    by_slot_.assign(offset_[n], -1);
    for (int v = 0; v < n; ++v) {
        const auto& r = g.rotation(v);
        for (int s = 0; s < static_cast<int>(r.size()); ++s) {
            int e = r[s];
            const auto& ed = g.edge(e);
            int d;
            if (ed.is_loop())
                d = dart_[2 * e].vertex < 0 ? 2 * e : 2 * e + 1;
            else
                d = ed.u == v ? 2 * e : 2 * e + 1;
            dart_[d] = {v, s};
            by_slot_[offset_[v] + s] = d;
        }
    }
}

int DartTable::face_next(int d) const {
    Dart t = dart_[twin(d)];
    int deg = degree(t.vertex);
    return at(t.vertex, (t.slot + 1) % deg);
}

std::vector<int> connected_components(int num_vertices, const std::vector<Edge>& edges, int* count) {
    std::vector<int> parent(num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<int> comp(num_vertices, -1), id_of_root(num_vertices, -1);
    int k = 0;
    for (int v = 0; v < num_vertices; ++v) {
        int r = find(v);
        if (id_of_root[r] < 0) id_of_root[r] = k++;
        comp[v] = id_of_root[r];
    }
    if (count) *count = k;
    return comp;
}

int FaceReport::max_genus() const {
    int best = 0;
    for (int x : genus) best = std::max(best, x);
    return best;
}

FaceReport trace_faces(const RotationGraph& g) {
    DartTable darts(g);
    FaceReport rep;
    int ncomp = 0;
    rep.component_of_vertex = connected_components(g.num_vertices(), g.edges(), &ncomp);

    std::vector<char> seen(darts.num_darts(), 0);
    rep.faces_per_component.assign(ncomp, 0);
    for (int d0 = 0; d0 < darts.num_darts(); ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        for (int d = d0; !seen[d]; d = darts.face_next(d)) {
            seen[d] = 1;
            face.push_back(d);
        }
        ++rep.faces_per_component[rep.component_of_vertex[darts.dart(d0).vertex]];
        rep.faces.push_back(std::move(face));
    }

    std::vector<int> nv(ncomp, 0), ne(ncomp, 0);
    for (int v = 0; v < g.num_vertices(); ++v) ++nv[rep.component_of_vertex[v]];
    for (const auto& e : g.edges()) ++ne[rep.component_of_vertex[e.u]];
    rep.genus.assign(ncomp, 0);
    for (int c = 0; c < ncomp; ++c) {
        // an isolated vertex is a sphere with one face and no darts
        int f = ne[c] == 0 ? 1 : rep.faces_per_component[c];
        int chi = nv[c] - ne[c] + f;
        rep.genus[c] = (2 - chi) / 2;
        if (rep.genus[c] != 0) rep.is_plane = false;
    }
    return rep;
}

}  // namespace angleset
