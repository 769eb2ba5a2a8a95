#include "angleset/reduce.hpp"

#include <algorithm>
#include <functional>

#include "angleset/errors.hpp"

namespace angleset {

namespace {

struct PathVertex {
    int vertex = -1;
    int prev = -1;  // edge towards c(v) or e^k_{j-1}(v)
    int ext = -1;   // inter-gadget edge
    int next = -1;  // edge to e^k_{j+1}(v), -1 at the end of the path
    std::vector<int> pre_a;
    std::vector<int> a_block;
    std::vector<int> b_block;
};

struct CentreVertex {
    int vertex = -1;
    std::array<int, 3> edges{-1, -1, -1};
    std::array<std::vector<int>, 3> gaps;  // gaps[k] sits between colour k and colour k+1
};

struct Skeleton {
    Reduction red;
    std::vector<PathVertex> paths;
    std::vector<CentreVertex> centres;
};

void require_simple(const PlainGraph& g) {
    for (const auto& e : g.edges)
        if (e.u < 0 || e.v < 0 || e.u >= g.num_vertices || e.v >= g.num_vertices)
            throw MalformedInput("source edge endpoint is not a vertex");
    if (!g.is_simple()) throw UnsupportedInput("source graph must be simple and loop-free");
}

std::vector<std::vector<int>> incident_by_neighbour(const PlainGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> inc(g.num_vertices);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        inc[g.edges[e].u].emplace_back(g.edges[e].v, e);
        inc[g.edges[e].v].emplace_back(g.edges[e].u, e);
    }
    std::vector<std::vector<int>> out(g.num_vertices);
    for (int v = 0; v < g.num_vertices; ++v) {
        std::sort(inc[v].begin(), inc[v].end());
        for (auto [w, e] : inc[v]) out[v].push_back(e);
    }
    return out;
}

// Gadgets with `sep_a` / `sep_b` leaves in place of a^k_j and b^k_j and
// `centre_gap` leaves between consecutive centre edges. Rotations are set by
// finish().
Skeleton build_skeleton(const PlainGraph& g, int sep_a, int sep_b, int centre_gap) {
    require_simple(g);
    Skeleton sk;
    auto& h = sk.red.graph;
    auto& map = sk.red.map;
    const int n = g.num_vertices;
    map.incident = incident_by_neighbour(g);
    map.centre.assign(n, -1);
    map.path.resize(n);
    map.sep_a.resize(n);
    map.sep_b.resize(n);
    map.centre_edge.assign(n, {-1, -1, -1});
    std::vector<std::array<std::vector<int>, 3>> path_index(n);  // into sk.paths

    for (int v = 0; v < n; ++v) {
        const int deg = static_cast<int>(map.incident[v].size());
        CentreVertex cv;
        cv.vertex = h.add_vertex();
        map.centre[v] = cv.vertex;
        std::array<std::vector<int>, 3> gap_leaves;
        if (deg > 0)
            for (int k = 0; k < 3; ++k)
                for (int i = 0; i < centre_gap; ++i) gap_leaves[k].push_back(h.add_vertex());
        for (int k = 0; k < 3; ++k) {
            int prev_vertex = cv.vertex;
            for (int j = 0; j < deg; ++j) {
                PathVertex pv;
                pv.vertex = h.add_vertex();
                std::vector<int> as, bs;
                for (int i = 0; i < sep_a; ++i) as.push_back(h.add_vertex());
                for (int i = 0; i < sep_b; ++i) bs.push_back(h.add_vertex());
                pv.prev = h.add_edge(prev_vertex, pv.vertex);
                if (j == 0)
                    cv.edges[k] = pv.prev;
                else
                    sk.paths[path_index[v][k].back()].next = pv.prev;
                for (int x : as) pv.a_block.push_back(h.add_edge(pv.vertex, x));
                for (int x : bs) pv.b_block.push_back(h.add_edge(pv.vertex, x));
                map.path[v][k].push_back(pv.vertex);
                map.sep_a[v][k].push_back(as.empty() ? -1 : as[0]);
                map.sep_b[v][k].push_back(bs.empty() ? -1 : bs[0]);
                path_index[v][k].push_back(static_cast<int>(sk.paths.size()));
                sk.paths.push_back(std::move(pv));
                prev_vertex = sk.paths.back().vertex;
            }
        }
        if (deg > 0)
            for (int k = 0; k < 3; ++k)
                for (int x : gap_leaves[k]) cv.gaps[k].push_back(h.add_edge(cv.vertex, x));
        map.centre_edge[v] = cv.edges;
        sk.centres.push_back(std::move(cv));
    }

    map.cross.assign(g.edges.size(), {-1, -1, -1});
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        int u = g.edges[e].u, v = g.edges[e].v;
        int i = static_cast<int>(std::find(map.incident[u].begin(), map.incident[u].end(), e) - map.incident[u].begin());
        int j = static_cast<int>(std::find(map.incident[v].begin(), map.incident[v].end(), e) - map.incident[v].begin());
        for (int k = 0; k < 3; ++k) {
            auto& pu = sk.paths[path_index[u][k][i]];
            auto& pv = sk.paths[path_index[v][k][j]];
            int x = h.add_edge(pu.vertex, pv.vertex);
            pu.ext = x;
            pv.ext = x;
            map.cross[e][k] = x;
        }
    }
    return sk;
}

void finish(Skeleton& sk) {
    auto& h = sk.red.graph;
    for (const auto& p : sk.paths) {
        std::vector<int> r{p.prev};
        r.insert(r.end(), p.pre_a.begin(), p.pre_a.end());
        r.insert(r.end(), p.a_block.begin(), p.a_block.end());
        r.push_back(p.ext);
        if (p.next >= 0) r.push_back(p.next);
        r.insert(r.end(), p.b_block.begin(), p.b_block.end());
        h.set_rotation(p.vertex, std::move(r));
    }
    for (const auto& c : sk.centres) {
        if (c.edges[0] < 0) continue;
        std::vector<int> r;
        for (int k = 0; k < 3; ++k) {
            r.push_back(c.edges[k]);
            r.insert(r.end(), c.gaps[k].begin(), c.gaps[k].end());
        }
        h.set_rotation(c.vertex, std::move(r));
    }
    // leaves: their single edge
    std::vector<std::vector<int>> inc(h.num_vertices());
    for (int e = 0; e < h.num_edges(); ++e) {
        inc[h.edge(e).u].push_back(e);
        if (!h.edge(e).is_loop()) inc[h.edge(e).v].push_back(e);
    }
    for (int v = 0; v < h.num_vertices(); ++v)
        if (h.degree(v) == 0 && inc[v].size() == 1) h.set_rotation(v, inc[v]);
    auto problems = validate_graph(h);
    if (!problems.empty()) throw std::logic_error("reduction built an invalid rotation system: " + problems.front());
}

// Adds a copy of K_size in ascending rotation; its vertex 0 is joined to
// `host` by a stub appended at the end of vertex 0's rotation. Returns the stub.
int attach_clique(RotationGraph& h, int host, int size) {
    std::vector<int> vs(size);
    for (auto& x : vs) x = h.add_vertex();
    std::vector<std::vector<int>> edge_to(size, std::vector<int>(size, -1));
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) edge_to[i][j] = edge_to[j][i] = h.add_edge(vs[i], vs[j]);
    int stub = h.add_edge(host, vs[0]);
    for (int i = 0; i < size; ++i) {
        std::vector<int> r;
        for (int j = 0; j < size; ++j)
            if (j != i) r.push_back(edge_to[i][j]);
        if (i == 0) r.push_back(stub);
        h.set_rotation(vs[i], std::move(r));
    }
    return stub;
}

// Adds a copy of T hanging off `host`; returns the (host, b1), (host, b2) edges.
std::array<int, 2> attach_T(RotationGraph& h, int host) {
    TGraph t = build_T();
    const int base = h.num_vertices();
    for (int v = 0; v < t.internal_vertices; ++v) h.add_vertex();
    auto map_v = [&](int v) { return v == t.external ? host : base + v; };
    std::vector<int> edge_map(t.graph.num_edges());
    for (int e = 0; e < t.graph.num_edges(); ++e)
        edge_map[e] = h.add_edge(map_v(t.graph.edge(e).u), map_v(t.graph.edge(e).v));
    for (int v = 0; v < t.internal_vertices; ++v) {
        std::vector<int> r;
        for (int e : t.graph.rotation(v)) r.push_back(edge_map[e]);
        h.set_rotation(base + v, std::move(r));
    }
    std::array<int, 2> stubs{-1, -1};
    for (int e = 0; e < t.graph.num_edges(); ++e) {
        const auto& ed = t.graph.edge(e);
        if (ed.u == t.b1 && ed.v == t.external) stubs[0] = edge_map[e];
        if (ed.u == t.b2 && ed.v == t.external) stubs[1] = edge_map[e];
    }
    return stubs;
}

}  // namespace

Reduction reduce_3col(const PlainGraph& g) {
    auto sk = build_skeleton(g, 1, 1, 0);
    finish(sk);
    return std::move(sk.red);
}

Colouring extract_3colouring(const RotationGraph& h, const AngleAssignment& cover, const GadgetMap& map) {
    auto rep = check_cover(h, cover, CoverSpec::basic());
    if (!rep.valid) throw MalformedInput("not a valid angle cover of the reduction graph");
    const int n = static_cast<int>(map.centre.size());
    Colouring col(n, 0);
    for (int v = 0; v < n; ++v) {
        if (map.centre_edge[v][0] < 0) continue;
        std::array<bool, 3> by_centre{false, false, false};
        const int c = map.centre[v];
        const auto& r = h.rotation(c);
        const int deg = static_cast<int>(r.size());
        for (const auto& a : cover.angles) {
            if (a.vertex != c) continue;
            for (int s = 0; s < std::min(a.width, deg); ++s)
                for (int k = 0; k < 3; ++k)
                    if (r[(a.start + s) % deg] == map.centre_edge[v][k]) by_centre[k] = true;
        }
        int k = 0;
        while (k < 3 && by_centre[k]) ++k;
        if (k == 3) throw std::logic_error("centre covers all three colour edges");
        col[v] = k;
    }
    return col;
}

AngleAssignment cover_from_3colouring(const RotationGraph& h, const GadgetMap& map, const PlainGraph& g,
                                      const Colouring& colouring) {
    if (!check_3colouring(g, colouring)) throw MalformedInput("colouring is not a proper 3-colouring");
    AngleAssignment asg;
    std::vector<char> done(h.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices; ++v) {
        if (map.centre_edge[v][0] < 0) continue;
        const int t = colouring[v];
        const int c = map.centre[v];
        // centre rotation is [e0, e1, e2]; slots t+1, t+2
        asg.add({c, (t + 1) % 3, 2});
        done[c] = 1;
        for (int k = 0; k < 3; ++k)
            for (int x : map.path[v][k]) {
                // [prev, a, ext, (next), b]: colour t takes prev+a, others ext+next
                asg.add({x, k == t ? 0 : 2, 2});
                done[x] = 1;
            }
    }
    for (int x = 0; x < h.num_vertices(); ++x)
        if (!done[x] && h.degree(x) > 0) asg.add({x, 0, std::min(2, h.degree(x))});
    asg.normalize();
    return asg;
}

Reduction reduce_multi(const PlainGraph& g, int a) {
    if (a < 2) throw UnsupportedInput("reduce_multi needs a >= 2");
    auto sk = build_skeleton(g, 1, 1, 0);
    auto& h = sk.red.graph;
    const int clique = 4 * a + 1;
    for (auto& p : sk.paths)
        for (int i = 0; i < 2 * (a - 1); ++i) p.pre_a.push_back(attach_clique(h, p.vertex, clique));
    for (auto& c : sk.centres) {
        if (c.edges[0] < 0) continue;
        for (int i = 0; i < 2 * (a - 1); ++i) c.gaps[0].push_back(attach_clique(h, c.vertex, clique));
    }
    finish(sk);
    return std::move(sk.red);
}

TGraph build_T() {
    TGraph t;
    auto& h = t.graph;
    for (int v = 0; v < 10; ++v) h.add_vertex();
    std::vector<std::vector<int>> inc(10);
    auto add = [&](int u, int v) {
        int e = h.add_edge(u, v);
        inc[u].push_back(e);
        inc[v].push_back(e);
    };
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) add(i, j);
    for (int i = 0; i < 7; ++i) add(i, t.b1);
    for (int i = 0; i < 7; ++i) add(i, t.b2);
    add(t.b1, t.external);
    add(t.b2, t.external);
    // ascending neighbour order everywhere
    for (int v = 0; v < 10; ++v) {
        auto r = inc[v];
        std::sort(r.begin(), r.end(), [&](int x, int y) { return h.edge(x).other(v) < h.edge(y).other(v); });
        h.set_rotation(v, std::move(r));
    }
    return t;
}

Reduction reduce_2angle_deg8(const PlainGraph& g) {
    auto sk = build_skeleton(g, 1, 1, 0);
    auto& h = sk.red.graph;
    for (auto& p : sk.paths) {
        int x = h.add_vertex();
        int ex = h.add_edge(p.vertex, x);
        h.set_rotation(x, {ex});
        auto stubs = attach_T(h, p.vertex);
        p.pre_a = {ex, stubs[0], stubs[1]};
    }
    for (auto& c : sk.centres) {
        if (c.edges[0] < 0) continue;
        for (int i = 0; i < 2; ++i) {
            auto stubs = attach_T(h, c.vertex);
            c.gaps[0].push_back(stubs[0]);
            c.gaps[0].push_back(stubs[1]);
        }
    }
    finish(sk);
    return std::move(sk.red);
}

Reduction reduce_wide(const PlainGraph& g, int m) {
    if (m < 3) throw UnsupportedInput("reduce_wide needs m >= 3");
    auto sk = build_skeleton(g, m - 1, m - 1, m - 2);
    finish(sk);
    return std::move(sk.red);
}

WitnessReduction build_witness_graph(const RotationGraph& g, const RotationGraph& h, int a,
                                     const std::vector<int>& dropped) {
    if (a < 1) throw MalformedInput("angle count must be positive");
    if (dropped.empty()) throw InvalidWitness("witness edge set D is empty");
    for (int e : dropped)
        if (e < 0 || e >= h.num_edges()) throw MalformedInput("witness edge set names an unknown edge");
    {
        auto d = dropped;
        std::sort(d.begin(), d.end());
        if (std::adjacent_find(d.begin(), d.end()) != d.end()) throw MalformedInput("witness edge set repeats an edge");
    }
    DartTable gd(g), hd(h);
    const int n = g.num_vertices();
    const int nh = h.num_vertices();
    const int nd = static_cast<int>(dropped.size());
    const int blocks = a - 1;
    std::vector<char> in_d(h.num_edges(), 0);
    for (int e : dropped) in_d[e] = 1;

    WitnessReduction out;
    out.dropped = dropped;
    out.copies = nd;
    auto& r = out.graph;
    auto x_id = [&](int v, int i) { return i * n + v; };
    auto y_id = [&](int u, int j, int v) { return nd * n + (j * n + v) * nh + u; };
    for (int i = 0; i < nd * n + blocks * n * nh; ++i) r.add_vertex();
    std::vector<std::vector<int>> rot(r.num_vertices());
    std::vector<int> b_edge(static_cast<std::size_t>(nd) * n * blocks * 2, -1);
    for (int i = 0; i < nd; ++i) {
        std::vector<int> em(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) em[e] = r.add_edge(x_id(g.edge(e).u, i), x_id(g.edge(e).v, i));
        for (int v = 0; v < n; ++v)
            for (int e : g.rotation(v)) rot[x_id(v, i)].push_back(em[e]);
    }
    for (int j = 0; j < blocks; ++j)
        for (int v = 0; v < n; ++v) {
            // copy of H minus D; the slots of D edges are taken by B edges
            std::vector<int> em(h.num_edges(), -1);
            for (int e = 0; e < h.num_edges(); ++e)
                if (!in_d[e]) em[e] = r.add_edge(y_id(h.edge(e).u, j, v), y_id(h.edge(e).v, j, v));
            std::vector<std::vector<int>> dart_edge(h.num_edges(), std::vector<int>(2, -1));
            for (int i = 0; i < nd; ++i) {
                int e = dropped[i];
                for (int side = 0; side < 2; ++side) {
                    int w = hd.dart(2 * e + side).vertex;
                    dart_edge[e][side] = r.add_edge(x_id(v, i), y_id(w, j, v));
                    b_edge[((i * n + v) * blocks + j) * 2 + side] = dart_edge[e][side];
                }
            }
            for (int u = 0; u < nh; ++u)
                for (int s = 0; s < h.degree(u); ++s) {
                    int d = hd.at(u, s);
                    int e = d >> 1;
                    rot[y_id(u, j, v)].push_back(in_d[e] ? dart_edge[e][d & 1] : em[e]);
                }
        }
    // B block at x_{v,i}: pairs in order j, appended after the copy of G
    for (int i = 0; i < nd; ++i)
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < blocks; ++j)
                for (int side = 0; side < 2; ++side) rot[x_id(v, i)].push_back(b_edge[((i * n + v) * blocks + j) * 2 + side]);
    for (int v = 0; v < r.num_vertices(); ++v) r.set_rotation(v, std::move(rot[v]));
    auto problems = validate_graph(r);
    if (!problems.empty()) throw std::logic_error("witness reduction built an invalid rotation system: " + problems.front());
    return out;
}

WitnessReduction reduce_witness(const RotationGraph& g, const RotationGraph& h, int a, long long budget) {
    if (a < 1) throw MalformedInput("angle count must be positive");
    if (h.max_degree() > 2 * a + 3) throw InvalidWitness("witness maximum degree exceeds 2a+3");
    if (g.max_degree() > 5) throw UnsupportedInput("input graph maximum degree exceeds 5");
    CoverSpec spec{a, 2};
    auto best = oracle_max_cover(h, spec, budget);
    if (best.verdict != Verdict::yes) throw InvalidWitness("oracle budget exhausted while checking the witness");
    if (best.uncovered.empty()) throw InvalidWitness("witness graph has an a-angle cover");
    return build_witness_graph(g, h, a, best.uncovered);
}

bool check_3colouring(const PlainGraph& g, const Colouring& colouring) {
    if (static_cast<int>(colouring.size()) != g.num_vertices) return false;
    for (int c : colouring)
        if (c < 0 || c > 2) return false;
    for (const auto& e : g.edges)
        if (colouring[e.u] == colouring[e.v]) return false;
    return true;
}

std::optional<Colouring> brute_3col(const PlainGraph& g, int cap) {
    if (g.num_vertices > cap) throw CapExceeded("3-colouring search is capped at " + std::to_string(cap) + " vertices");
    const int n = g.num_vertices;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        if (e.is_loop()) return std::nullopt;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    Colouring col(n, -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == n) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int w : adj[v])
                if (col[w] == c) ok = false;
            if (!ok) continue;
            col[v] = c;
            if (go(v + 1)) return true;
        }
        col[v] = -1;
        return false;
    };
    if (go(0)) return col;
    return std::nullopt;
}

}  // namespace angleset
