#include "angleset/instances.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "angleset/errors.hpp"
#include "angleset/reduce.hpp"

namespace angleset {

int Rng::below(int n) {
    if (n <= 0) throw std::invalid_argument("Rng::below needs n > 0");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return static_cast<int>(x % un);
}

double Rng::unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

void shuffle_rotations(RotationGraph& g, Rng& rng) {
    for (int v = 0; v < g.num_vertices(); ++v) rng.shuffle(g.rotation(v));
}

RotationGraph from_drawing(const std::vector<Point>& pts, const std::vector<Edge>& edges) {
    const int n = static_cast<int>(pts.size());
    RotationGraph g(n);
    std::vector<std::vector<std::pair<double, int>>> inc(n);
    for (const auto& e : edges) {
        if (e.is_loop()) throw UnsupportedInput("drawings cannot contain loops");
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw MalformedInput("edge names a missing point");
        int id = g.add_edge(e.u, e.v);
        auto ang = [&](int a, int b) { return std::atan2(pts[b].y - pts[a].y, pts[b].x - pts[a].x); };
        inc[e.u].emplace_back(ang(e.u, e.v), id);
        inc[e.v].emplace_back(ang(e.v, e.u), id);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(inc[v].begin(), inc[v].end());
        std::vector<int> r;
        for (auto [a, id] : inc[v]) r.push_back(id);
        g.set_rotation(v, std::move(r));
    }
    return g;
}

namespace {

constexpr double pi = std::numbers::pi;

struct Drawing {
    std::vector<Point> pts;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    std::map<std::string, int> index;

    int add(const std::string& name, double x, double y) {
        index[name] = static_cast<int>(pts.size());
        pts.push_back({x, y});
        names.push_back(name);
        return index[name];
    }
    void join(const std::string& a, const std::string& b) { edges.push_back({index.at(a), index.at(b)}); }
    Point polar(double r, double deg) const { return {r * std::cos(deg * pi / 180), r * std::sin(deg * pi / 180)}; }
    int add_polar(const std::string& name, double r, double deg) {
        auto p = polar(r, deg);
        return add(name, p.x, p.y);
    }
    NamedInstance build(const std::string& key, std::optional<Verdict> expected) const {
        return {key, from_drawing(pts, edges), expected, names};
    }
};

NamedInstance fig1() {
    Drawing d;
    for (int k = 0; k < 4; ++k) d.add_polar("i" + std::to_string(k), 1.0, 45 + 90 * k);
    for (int k = 0; k < 4; ++k) d.add_polar("o" + std::to_string(k), 2.5, 90 * k);
    for (int k = 0; k < 4; ++k) {
        auto i = "i" + std::to_string(k), i1 = "i" + std::to_string((k + 1) % 4);
        auto o = "o" + std::to_string(k), o1 = "o" + std::to_string((k + 1) % 4);
        d.join(i, i1);
        if (k != 0) d.join(o, o1);
        d.join(i, o);
        d.join(i, o1);
    }
    d.join("i0", "i2");
    return d.build("fig1", Verdict::yes);
}

void heptagonal_ring(Drawing& d) {
    const double step = 360.0 / 7;
    for (int k = 0; k < 7; ++k) d.add_polar("p" + std::to_string(k), 7, 90 + step * k);
    for (int k = 0; k < 7; ++k) d.add_polar("q" + std::to_string(k), 10, 90 + (k + 0.5) * step);
    for (int k = 0; k < 7; ++k) {
        auto p = "p" + std::to_string(k), p1 = "p" + std::to_string((k + 1) % 7);
        auto q = "q" + std::to_string(k), q1 = "q" + std::to_string((k + 1) % 7);
        d.join(p, p1);
        d.join(q, q1);
        d.join(p, q);
        d.join(p1, q);
    }
    d.join("U", "p0");
    d.join("U", "p6");
    d.join("W", "p3");
    d.join("W", "p4");
}

NamedInstance fig2(bool with_k4) {
    Drawing d;
    d.add("s", 0, 0);
    d.add("a", -3, 0);
    d.add("a'", 3, 0);
    d.add("U", 0, 4);
    d.add("W", 0, -4);
    d.join("s", "a");
    d.join("s", "a'");
    d.join("a", "U");
    d.join("a", "W");
    d.join("a'", "U");
    d.join("a'", "W");
    if (!with_k4) {
        d.add("d1", 0, 2);
        d.add("d2", 0, -2);
        d.join("s", "d1");
        d.join("s", "d2");
        d.join("d1", "U");
        d.join("d2", "W");
    } else {
        for (int side : {1, -1}) {
            std::string t = side > 0 ? "1" : "2";
            d.add("k1." + t, 0, 0.9 * side);
            d.add("k2." + t, 0, 3.2 * side);
            d.add("k3." + t, -0.8, 2.05 * side);
            d.add("k4." + t, -0.25, 2.05 * side);
            for (int i = 1; i <= 4; ++i)
                for (int j = i + 1; j <= 4; ++j) d.join("k" + std::to_string(i) + "." + t, "k" + std::to_string(j) + "." + t);
            d.join("s", "k1." + t);
            d.join(side > 0 ? "U" : "W", "k2." + t);
        }
    }
    heptagonal_ring(d);
    return d.build(with_k4 ? "fig2b" : "fig2a", Verdict::no);
}

NamedInstance fig3() {
    Drawing d;
    d.add("s", 0, 0);
    for (int side : {1, -1}) {
        std::string t = side > 0 ? "" : "'";
        d.add("a" + t, -1.0 * side, 0);
        d.add("b" + t, -2.0 * side, 1);
        d.add("c" + t, -2.0 * side, -1);
        d.add("d" + t, -3.0 * side, 0);
        d.add("f" + t, -4.0 * side, 1);
        d.add("g" + t, -4.0 * side, -1);
    }
    d.add("U", 0, 2.5);
    d.add("W", 0, -2.5);
    for (std::string t : {"", "'"}) {
        for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{
                 {"a", "b"}, {"a", "c"}, {"b", "d"}, {"b", "f"}, {"d", "f"}, {"d", "g"}, {"f", "g"}, {"g", "c"}, {"d", "c"}})
            d.join(x + t, y + t);
        d.join("s", "a" + t);
        d.join("U", "b" + t);
        d.join("W", "c" + t);
    }
    d.join("s", "U");
    d.join("s", "W");
    for (int k = 0; k < 4; ++k) d.add_polar("r" + std::to_string(k), 7, 45 + 90 * k);
    for (int k = 0; k < 4; ++k) d.add_polar("t" + std::to_string(k), 10, 90 * k);
    for (int k = 0; k < 4; ++k) {
        auto r = "r" + std::to_string(k), r1 = "r" + std::to_string((k + 1) % 4);
        auto t = "t" + std::to_string(k), t1 = "t" + std::to_string((k + 1) % 4);
        d.join(r, r1);
        d.join(t, t1);
        d.join(r, t);
        d.join(r, t1);
    }
    d.join("U", "r0");
    d.join("U", "r1");
    d.join("W", "r2");
    d.join("W", "r3");
    return d.build("fig3", Verdict::no);
}

// Two octahedra hung between s and X; the "no" layout puts one inside the
// cycle s d1 X d2, the "yes" layout puts both outside.
NamedInstance fig4(bool yes_layout) {
    Drawing d;
    d.add("s", 0, 0);
    d.add("X", 0, 10);
    d.add("d1", -6, 5);
    d.add("d2", 6, 5);
    d.join("s", "d1");
    d.join("d1", "X");
    d.join("s", "d2");
    d.join("d2", "X");
    const std::vector<std::pair<std::string, Point>> blob = {
        {"A", {0, -1}}, {"B", {0, 1}}, {"C", {-1.5, 0}}, {"D", {-0.3, 0}}, {"E", {-0.6, 0.45}}, {"F", {-0.6, -0.45}}};
    const std::vector<std::pair<std::string, std::string>> blob_edges = {
        {"A", "B"}, {"B", "C"}, {"C", "A"}, {"D", "E"}, {"E", "F"}, {"F", "D"},
        {"D", "A"}, {"D", "B"}, {"E", "B"}, {"E", "C"}, {"F", "C"}, {"F", "A"}};
    auto place = [&](const std::string& tag, double cx, double mirror) {
        for (const auto& [name, p] : blob) d.add(name + tag, cx + 2 * mirror * p.x, 5 + 2 * p.y);
        for (const auto& [x, y] : blob_edges) d.join(x + tag, y + tag);
        d.join("A" + tag, "s");
        d.join("B" + tag, "X");
    };
    place("L", yes_layout ? -10 : -1, 1);
    place("R", 10, -1);
    return d.build(yes_layout ? "fig4-yes" : "fig4-no", yes_layout ? Verdict::yes : Verdict::no);
}

// Black vertices 0-3 with black edges 01 02 03 12 13; red vertices 4-8 each
// joined to a pair of black vertices, interleaved with the black edges.
NamedInstance laman_fig6() {
    RotationGraph g(9);
    std::map<std::pair<int, int>, int> id;
    auto add = [&](int u, int v) { id[{std::min(u, v), std::max(u, v)}] = g.add_edge(u, v); };
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}) add(u, v);
    const std::vector<std::pair<int, int>> red = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    for (int r = 0; r < 5; ++r) {
        add(red[r].first, 4 + r);
        add(red[r].second, 4 + r);
    }
    auto e = [&](int u, int v) { return id.at({std::min(u, v), std::max(u, v)}); };
    auto set = [&](int v, std::vector<int> nbrs) {
        std::vector<int> r;
        for (int w : nbrs) r.push_back(e(v, w));
        g.set_rotation(v, std::move(r));
    };
    set(0, {1, 4, 2, 5, 3, 6});
    set(1, {0, 4, 2, 7, 3, 8});
    set(2, {0, 5, 1, 7});
    set(3, {0, 6, 1, 8});
    for (int r = 0; r < 5; ++r) set(4 + r, {red[r].first, red[r].second});
    std::vector<std::string> names = {"0", "1", "2", "3", "r01", "r02", "r03", "r12", "r13"};
    return {"laman-fig6", std::move(g), Verdict::no, std::move(names)};
}

NamedInstance complete(int k) {
    PlainGraph p;
    p.num_vertices = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) p.add_edge(i, j);
    return {"k" + std::to_string(k), with_sorted_rotation(p), std::nullopt, {}};
}

NamedInstance cycle4() {
    PlainGraph p;
    p.num_vertices = 4;
    for (int i = 0; i < 4; ++i) p.add_edge(i, (i + 1) % 4);
    return {"c4", with_sorted_rotation(p), Verdict::yes, {}};
}

const std::vector<std::pair<std::string, std::function<NamedInstance()>>>& catalogue() {
    static const std::vector<std::pair<std::string, std::function<NamedInstance()>>> c = {
        {"fig1", fig1},
        {"fig2a", [] { return fig2(false); }},
        {"fig2b", [] { return fig2(true); }},
        {"fig3", fig3},
        {"fig4-no", [] { return fig4(false); }},
        {"fig4-yes", [] { return fig4(true); }},
        {"laman-fig6", laman_fig6},
        {"T",
         [] {
             NamedInstance t{"T", build_T().graph, std::nullopt, {}};
             t.vertex_names = {"k0", "k1", "k2", "k3", "k4", "k5", "k6", "b1", "b2", "ext"};
             return t;
         }},
        {"c4", cycle4},
        {"k4", [] { return complete(4); }},
        {"k5", [] { return complete(5); }},
        {"k6", [] { return complete(6); }},
    };
    return c;
}

RotationGraph randomized(const PlainGraph& p, Rng& rng) {
    auto g = with_sorted_rotation(p);
    shuffle_rotations(g, rng);
    return g;
}

double orient(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool segments_cross(Point a, Point b, Point c, Point d) {
    double d1 = orient(a, b, c), d2 = orient(a, b, d), d3 = orient(c, d, a), d4 = orient(c, d, b);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

std::vector<Point> random_points(int n, Rng& rng) {
    std::vector<Point> pts(n);
    for (auto& p : pts) p = {rng.unit(), rng.unit()};
    return pts;
}

}  // namespace

std::vector<std::string> instance_names() {
    std::vector<std::string> out;
    for (const auto& [k, f] : catalogue()) out.push_back(k);
    return out;
}

NamedInstance get_instance(const std::string& name) {
    for (const auto& [k, f] : catalogue())
        if (k == name) return f();
    throw MalformedInput("unknown instance '" + name + "'");
}

RotationGraph gen_random_bounded_degree(int n, int max_degree, std::uint64_t seed) {
    if (n < 1 || max_degree < 0) throw UnsupportedInput("need n >= 1 and max degree >= 0");
    if ((n >= 2 && max_degree == 0) || (n >= 3 && max_degree == 1))
        throw UnsupportedInput("no connected graph with these parameters");
    Rng rng(seed);
    PlainGraph p;
    p.num_vertices = n;
    std::vector<int> deg(n, 0);
    std::vector<int> open;  // vertices with spare degree
    if (max_degree > 0) open.push_back(0);
    for (int v = 1; v < n; ++v) {
        int i = rng.below(static_cast<int>(open.size()));
        int u = open[i];
        p.add_edge(u, v);
        if (++deg[u] == max_degree) {
            open[i] = open.back();
            open.pop_back();
        }
        if (++deg[v] < max_degree) open.push_back(v);
    }
    for (int t = 0; t < n; ++t) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v ? deg[u] + 2 <= max_degree : deg[u] < max_degree && deg[v] < max_degree) {
            p.add_edge(u, v);
            ++deg[u];
            ++deg[v];
        }
    }
    return randomized(p, rng);
}

RotationGraph gen_degree_sequence(const std::vector<int>& degrees, std::uint64_t seed) {
    long long total = 0;
    for (int d : degrees) {
        if (d < 0) throw UnsupportedInput("negative degree");
        total += d;
    }
    if (total % 2) throw UnsupportedInput("degree sum must be even");
    Rng rng(seed);
    std::vector<int> stubs;
    for (int v = 0; v < static_cast<int>(degrees.size()); ++v)
        for (int k = 0; k < degrees[v]; ++k) stubs.push_back(v);
    rng.shuffle(stubs);
    PlainGraph p;
    p.num_vertices = static_cast<int>(degrees.size());
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) p.add_edge(stubs[i], stubs[i + 1]);
    return randomized(p, rng);
}

RotationGraph gen_regular(int n, int degree, std::uint64_t seed) {
    if (n < 1 || degree < 0) throw UnsupportedInput("need n >= 1 and degree >= 0");
    if ((static_cast<long long>(n) * degree) % 2) throw UnsupportedInput("n * degree must be even");
    return gen_degree_sequence(std::vector<int>(n, degree), seed);
}

RotationGraph gen_henneberg_laman(const std::vector<HennebergStep>& steps, std::uint64_t seed) {
    PlainGraph p;
    p.num_vertices = 2;
    p.add_edge(0, 1);
    for (const auto& s : steps) {
        const int n = p.num_vertices;
        const int m = static_cast<int>(p.edges.size());
        if (s.kind == HennebergStep::s1) {
            if (s.a < 0 || s.b < 0 || s.a >= n || s.b >= n || s.a == s.b)
                throw MalformedInput("S1 step needs two distinct existing vertices");
            int w = p.add_vertex();
            p.add_edge(s.a, w);
            p.add_edge(s.b, w);
        } else {
            if (s.a < 0 || s.a >= m) throw MalformedInput("S2 step names a missing edge");
            Edge e = p.edges[s.a];
            if (s.b < 0 || s.b >= n || s.b == e.u || s.b == e.v)
                throw MalformedInput("S2 step needs a third existing vertex");
            int w = p.add_vertex();
            p.edges[s.a] = {e.u, w};
            p.add_edge(w, e.v);
            p.add_edge(w, s.b);
        }
    }
    Rng rng(seed);
    return randomized(p, rng);
}

RotationGraph gen_random_laman(int n, std::uint64_t seed) {
    if (n < 2) throw UnsupportedInput("Laman graphs here start from one edge");
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<HennebergStep> steps;
    std::vector<Edge> edges = {{0, 1}};
    for (int v = 2; v < n; ++v) {
        HennebergStep s;
        if (v >= 3 && rng.below(2)) {
            s.kind = HennebergStep::s2;
            s.a = rng.below(static_cast<int>(edges.size()));
            Edge e = edges[s.a];
            std::vector<int> third;
            for (int x = 0; x < v; ++x)
                if (x != e.u && x != e.v) third.push_back(x);
            s.b = third[rng.below(static_cast<int>(third.size()))];
            edges[s.a] = {e.u, v};
            edges.push_back({v, e.v});
            edges.push_back({v, s.b});
        } else {
            s.a = rng.below(v);
            s.b = rng.below(v - 1);
            if (s.b >= s.a) ++s.b;
            edges.push_back({s.a, v});
            edges.push_back({s.b, v});
        }
        steps.push_back(s);
    }
    return gen_henneberg_laman(steps, seed);
}

RotationGraph gen_random_outerplane(int n, std::uint64_t seed) {
    if (n < 3) throw UnsupportedInput("outerplane generator needs n >= 3");
    Rng rng(seed);
    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = {std::cos(2 * pi * i / n), std::sin(2 * pi * i / n)};
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    std::vector<std::pair<int, int>> todo = {{0, n - 1}};
    while (!todo.empty()) {
        auto [lo, hi] = todo.back();
        todo.pop_back();
        if (hi - lo < 2) continue;
        int k = lo + 1 + rng.below(hi - lo - 1);
        for (auto [x, y] : {std::pair{lo, k}, std::pair{k, hi}}) {
            if (y - x >= 2) {
                if (rng.below(2)) edges.push_back({x, y});
                todo.push_back({x, y});
            }
        }
    }
    return from_drawing(pts, edges);
}

RotationGraph gen_random_plane(int n, int max_degree, std::uint64_t seed) {
    if (n < 1 || max_degree < 0) throw UnsupportedInput("need n >= 1 and max degree >= 0");
    Rng rng(seed);
    auto pts = random_points(n, rng);
    std::vector<std::pair<double, std::pair<int, int>>> cand;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
            cand.push_back({dx * dx + dy * dy, {i, j}});
        }
    std::sort(cand.begin(), cand.end());
    std::vector<Edge> edges;
    std::vector<int> deg(n, 0);
    for (const auto& [len, uv] : cand) {
        auto [u, v] = uv;
        if (deg[u] >= max_degree || deg[v] >= max_degree) continue;
        if (rng.below(5) == 0) continue;
        bool ok = true;
        for (const auto& e : edges)
            if (e.u != u && e.u != v && e.v != u && e.v != v && segments_cross(pts[u], pts[v], pts[e.u], pts[e.v])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        edges.push_back({u, v});
        ++deg[u];
        ++deg[v];
    }
    return from_drawing(pts, edges);
}

TopologicalGraph gen_random_topological(int n, int max_crossings, std::uint64_t seed) {
    if (n < 1 || max_crossings < 0) throw UnsupportedInput("need n >= 1 and max crossings >= 0");
    Rng rng(seed);
    auto pts = random_points(n, rng);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(10) < 3) edges.push_back(rng.below(2) ? Edge{i, j} : Edge{j, i});
    auto crossing_pairs = [&] {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < static_cast<int>(edges.size()); ++a)
            for (int b = a + 1; b < static_cast<int>(edges.size()); ++b) {
                const auto &e = edges[a], &f = edges[b];
                if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
                if (segments_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v])) out.push_back({a, b});
            }
        return out;
    };
    auto pairs = crossing_pairs();
    while (static_cast<int>(pairs.size()) > max_crossings) {
        std::vector<int> count(edges.size(), 0);
        for (auto [a, b] : pairs) ++count[a], ++count[b];
        int worst = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
        edges.erase(edges.begin() + worst);
        pairs = crossing_pairs();
    }
    TopologicalGraph tg;
    tg.base = from_drawing(pts, edges);
    tg.sequence.assign(edges.size(), {});
    std::vector<std::vector<std::pair<double, int>>> along(edges.size());
    for (auto [a, b] : pairs) {
        const auto &e = edges[a], &f = edges[b];
        Point p = pts[e.u], r = {pts[e.v].x - p.x, pts[e.v].y - p.y};
        Point q = pts[f.u], s = {pts[f.v].x - q.x, pts[f.v].y - q.y};
        double rxs = r.x * s.y - r.y * s.x;
        double t = ((q.x - p.x) * s.y - (q.y - p.y) * s.x) / rxs;
        double w = ((q.x - p.x) * r.y - (q.y - p.y) * r.x) / rxs;
        int id = tg.num_crossings();
        tg.crossings.push_back({id, a, b, rxs > 0 ? 0 : 1});
        along[a].push_back({t, id});
        along[b].push_back({w, id});
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::sort(along[e].begin(), along[e].end());
        for (auto [t, id] : along[e]) tg.sequence[e].push_back(id);
    }
    return tg;
}

}  // namespace angleset
