#include "angleset/solve.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "angleset/arcs.hpp"
#include "angleset/errors.hpp"

namespace angleset {

namespace {

// Pads every component with edges appended to rotations until each vertex
// with an edge in its component has degree `target`. Original slots stay a
// prefix of every rotation.
RotationGraph regularize(const RotationGraph& g, int target) {
    RotationGraph h = g;
    int ncomp = 0;
    auto comp = connected_components(g.num_vertices(), g.edges(), &ncomp);
    std::vector<std::vector<int>> members(ncomp);
    std::vector<int> comp_edges(ncomp, 0);
    for (int v = 0; v < g.num_vertices(); ++v) members[comp[v]].push_back(v);
    for (const auto& e : g.edges()) ++comp_edges[comp[e.u]];
    for (int c = 0; c < ncomp; ++c) {
        if (comp_edges[c] == 0) continue;
        std::vector<int> deficient;
        for (int v : members[c])
            if (h.degree(v) < target) deficient.push_back(v);
        // pair the two lowest-id vertices that are still short
        std::size_t i = 0, j = 1;
        while (true) {
            while (i < deficient.size() && h.degree(deficient[i]) >= target) ++i;
            if (j <= i) j = i + 1;
            while (j < deficient.size() && h.degree(deficient[j]) >= target) ++j;
            if (j >= deficient.size()) break;
            h.add_edge_appended(deficient[i], deficient[j]);
        }
        if (i < deficient.size()) {
            int v = deficient[i];
            if ((target - h.degree(v)) % 2 != 0) throw std::logic_error("odd deficit left by regularization");
            while (h.degree(v) < target) h.add_edge_appended(v, v);
        }
    }
    return h;
}

Angle projected_angle(int v, int deg, const std::vector<int>& outs) {
    int w = std::min(2, deg);
    if (outs.size() == 2) {
        int a = outs[0], b = outs[1];
        if ((a + 1) % deg == b) return {v, a, w};
        if ((b + 1) % deg == a) return {v, b, w};
        if (deg <= 2) return {v, 0, w};
        throw std::logic_error("outgoing slots are not consecutive");
    }
    if (outs.size() == 1) return {v, outs[0], w};
    return {v, 0, w};
}

}  // namespace

Certificate solve_deg4(const RotationGraph& g) {
    if (g.max_degree() > 4) throw UnsupportedInput("solve_deg4 needs maximum degree at most 4");
    RotationGraph h = regularize(g, 4);
    DartTable dt(h);
    std::vector<char> used(h.num_edges(), 0), out(dt.num_darts(), 0);
    int next = 0;
    while (true) {
        while (next < dt.num_darts() && used[next >> 1]) ++next;
        if (next == dt.num_darts()) break;
        const int start = next;
        int d = start;
        do {
            if (used[d >> 1]) throw std::logic_error("walk reused an edge");
            used[d >> 1] = 1;
            out[d] = 1;
            Dart t = dt.dart(DartTable::twin(d));
            d = dt.at(t.vertex, (t.slot + 2) % 4);
        } while (d != start);
    }
    Certificate c;
    c.verdict = Verdict::yes;
    AngleAssignment asg;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int deg = g.degree(v);
        if (deg == 0) continue;
        std::vector<int> all, orig;
        for (int s = 0; s < 4; ++s)
            if (out[dt.at(v, s)]) all.push_back(s);
        if (all.size() != 2 || !((all[0] + 1) % 4 == all[1] || (all[1] + 1) % 4 == all[0]))
            throw std::logic_error("regular walk left non-consecutive outgoing slots");
        for (int s : all)
            if (s < deg) orig.push_back(s);
        asg.add(projected_angle(v, deg, orig));
    }
    asg.normalize();
    c.assignment = std::move(asg);
    return c;
}

Certificate solve_no_deg3(const RotationGraph& g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 3)
            throw UnsupportedInput("vertex " + std::to_string(g.vertex_label(v)) + " has degree 3");
    DartTable dt(g);
    const int vars = dt.num_darts();
    // literal 2x: dart x selected, 2x+1: not selected
    std::vector<std::vector<int>> imp(2 * vars);
    auto clause = [&](int a, int b) {
        imp[a ^ 1].push_back(b);
        imp[b ^ 1].push_back(a);
    };
    for (int e = 0; e < g.num_edges(); ++e) clause(2 * (2 * e), 2 * (2 * e + 1));
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int deg = g.degree(v);
        if (deg < 4) continue;
        for (int i = 0; i < deg; ++i)
            for (int j = i + 2; j < deg; ++j) {
                if (i == 0 && j == deg - 1) continue;
                clause(2 * dt.at(v, i) + 1, 2 * dt.at(v, j) + 1);
            }
    }

    // iterative Tarjan
    const int nl = 2 * vars;
    std::vector<int> index(nl, -1), low(nl, 0), comp(nl, -1), stack;
    std::vector<char> on(nl, 0);
    std::vector<std::pair<int, std::size_t>> call;
    int counter = 0, ncomp = 0;
    for (int r = 0; r < nl; ++r) {
        if (index[r] >= 0) continue;
        call.emplace_back(r, 0);
        index[r] = low[r] = counter++;
        stack.push_back(r);
        on[r] = 1;
        while (!call.empty()) {
            auto& [x, it] = call.back();
            if (it < imp[x].size()) {
                int y = imp[x][it++];
                if (index[y] < 0) {
                    index[y] = low[y] = counter++;
                    stack.push_back(y);
                    on[y] = 1;
                    call.emplace_back(y, 0);
                } else if (on[y]) {
                    low[x] = std::min(low[x], index[y]);
                }
                continue;
            }
            int done = x;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                int y;
                do {
                    y = stack.back();
                    stack.pop_back();
                    on[y] = 0;
                    comp[y] = ncomp;
                } while (y != done);
                ++ncomp;
            }
        }
    }

    Certificate c;
    for (int x = 0; x < vars; ++x)
        if (comp[2 * x] == comp[2 * x + 1]) {
            c.verdict = Verdict::no;
            return c;
        }
    AngleAssignment asg;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int deg = g.degree(v);
        if (deg == 0) continue;
        std::vector<int> chosen;
        if (deg > 2)
            for (int s = 0; s < deg; ++s) {
                int x = dt.at(v, s);
                if (comp[2 * x] < comp[2 * x + 1]) chosen.push_back(s);
            }
        asg.add(projected_angle(v, deg, chosen));
    }
    asg.normalize();
    c.verdict = Verdict::yes;
    c.assignment = std::move(asg);
    return c;
}

int sextet_angle_bound(int delta) { return delta / 2 - delta / 6; }

namespace {

enum SlotState : char { undirected, incoming, outgoing };

struct SextetWalker {
    int delta;
    int sextets;  // complete sextets per vertex
    const DartTable& dt;
    std::vector<SlotState> state;  // per dart

    SlotState at(int v, int s) const { return state[dt.at(v, s)]; }

    int sextet_of(int s) const { return s / 6 < sextets ? s / 6 : -1; }

    bool paired(int v, int x) const {
        for (int p = 6 * x; p < 6 * x + 5; ++p)
            if (at(v, p) == outgoing && at(v, p + 1) == outgoing) return true;
        return false;
    }

    // Undirected slot of sextet x next to one of its outgoing slots.
    int pairing_slot(int v, int x) const {
        for (int p = 6 * x; p < 6 * x + 6; ++p) {
            if (at(v, p) != undirected) continue;
            if ((p > 6 * x && at(v, p - 1) == outgoing) || (p < 6 * x + 5 && at(v, p + 1) == outgoing)) return p;
        }
        return -1;
    }

    // Undirected slot of sextet x whose two in-sextet neighbours are undirected.
    int flanked_slot(int v, int x) const {
        for (int p = 6 * x + 1; p < 6 * x + 5; ++p)
            if (at(v, p) == undirected && at(v, p - 1) == undirected && at(v, p + 1) == undirected) return p;
        return -1;
    }

    int any_in_sextet(int v, int x) const {
        for (int p = 6 * x; p < 6 * x + 6; ++p)
            if (at(v, p) == undirected) return p;
        return -1;
    }

    // Exit slot at v after entering through `entered` (-1 when starting a walk).
    int choose_exit(int v, int entered) const {
        int x = entered >= 0 ? sextet_of(entered) : -1;
        if (x >= 0 && !paired(v, x)) {
            int p = pairing_slot(v, x);
            if (p < 0) p = flanked_slot(v, x);
            if (p < 0) p = any_in_sextet(v, x);
            if (p >= 0) return p;
        }
        for (int s = 6 * sextets; s < delta; ++s)
            if (at(v, s) == undirected) return s;
        for (int y = 0; y < sextets; ++y)
            if (paired(v, y)) {
                int p = any_in_sextet(v, y);
                if (p >= 0) return p;
            }
        for (int y = 0; y < sextets; ++y)
            if (!paired(v, y)) {
                int p = pairing_slot(v, y);
                if (p >= 0) return p;
            }
        for (int y = 0; y < sextets; ++y) {
            int p = flanked_slot(v, y);
            if (p >= 0) return p;
        }
        for (int s = 0; s < delta; ++s)
            if (at(v, s) == undirected) return s;
        return -1;
    }
};

}  // namespace

Certificate solve_sextet(const RotationGraph& g, int delta) {
    if (delta <= 0 || delta % 2 != 0) throw UnsupportedInput("sextet solver needs an even positive maximum degree");
    if (g.max_degree() > delta) throw UnsupportedInput("vertex degree exceeds the given maximum degree");
    RotationGraph h = regularize(g, delta);
    DartTable dt(h);
    SextetWalker w{delta, delta / 6, dt, std::vector<SlotState>(dt.num_darts(), undirected)};

    for (int v0 = 0; v0 < h.num_vertices(); ++v0) {
        while (true) {
            if (h.degree(v0) == 0) break;
            int s = w.choose_exit(v0, -1);
            if (s < 0) break;
            int v = v0;
            while (s >= 0) {
                int d = dt.at(v, s);
                w.state[d] = outgoing;
                int t = DartTable::twin(d);
                w.state[t] = incoming;
                Dart in = dt.dart(t);
                v = in.vertex;
                s = w.choose_exit(v, in.slot);
            }
            if (v != v0) throw std::logic_error("walk got stuck away from its start");
        }
    }

    const int bound = sextet_angle_bound(delta);
    AngleAssignment asg;
    for (int v = 0; v < h.num_vertices(); ++v) {
        if (h.degree(v) == 0) continue;
        for (int x = 0; x < w.sextets; ++x)
            if (!w.paired(v, x)) throw std::logic_error("sextet walk left a sextet without a consecutive outgoing pair");
        if (v >= g.num_vertices()) continue;
        const int deg = g.degree(v);
        if (deg == 0) continue;
        std::vector<int> outs;
        for (int s = 0; s < deg; ++s)
            if (w.at(v, s) == outgoing) outs.push_back(s);
        int width = std::min(2, deg);
        auto arcs = min_arc_cover(deg, outs, width);
        if (arcs.count > bound) throw std::logic_error("sextet walk needs more angles than the bound");
        for (int st : arcs.starts) asg.add({v, st, width});
    }
    asg.normalize();
    Certificate c;
    c.verdict = Verdict::yes;
    c.assignment = std::move(asg);
    return c;
}

bool is_outerplane(const RotationGraph& g) {
    if (!validate_graph(g).empty()) return false;
    auto rep = trace_faces(g);
    if (!rep.is_plane) return false;
    int ncomp = static_cast<int>(rep.genus.size());
    std::vector<int> size(ncomp, 0);
    for (int v = 0; v < g.num_vertices(); ++v) ++size[rep.component_of_vertex[v]];
    std::vector<char> ok(ncomp, 0);
    DartTable dt(g);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) ok[rep.component_of_vertex[v]] = 1;
    for (const auto& face : rep.faces) {
        std::vector<int> vs;
        for (int d : face) vs.push_back(dt.dart(d).vertex);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        int c = rep.component_of_vertex[vs[0]];
        if (static_cast<int>(vs.size()) == size[c]) ok[c] = 1;
    }
    return std::all_of(ok.begin(), ok.end(), [](char x) { return x != 0; });
}

Certificate solve_outerplane(const RotationGraph& g, long long budget) {
    if (!is_outerplane(g)) throw UnsupportedInput("graph is not outerplane");
    const int n = g.num_vertices();
    std::vector<char> removed(n, 0);
    std::vector<Angle> peel;
    std::unordered_set<std::string> dead;
    long long nodes = 0;
    bool exhausted = false;

    auto remaining_slots = [&](int v) {
        std::vector<int> s;
        for (int i = 0; i < g.degree(v); ++i) {
            int w = g.edge(g.rotation(v)[i]).other(v);
            if (!removed[w]) s.push_back(i);
        }
        return s;
    };

    std::function<bool(int)> dfs = [&](int left) -> bool {
        if (left == 0) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        std::string key(removed.begin(), removed.end());
        if (dead.count(key)) return false;
        for (int v = 0; v < n; ++v) {
            if (removed[v]) continue;
            auto s = remaining_slots(v);
            int deg = g.degree(v);
            auto arcs = min_arc_cover(std::max(deg, 1), s, std::min(2, std::max(deg, 1)));
            if (arcs.count > 1) continue;
            removed[v] = 1;
            if (arcs.count == 1) peel.push_back({v, arcs.starts[0], std::min(2, deg)});
            if (dfs(left - 1)) return true;
            if (arcs.count == 1) peel.pop_back();
            removed[v] = 0;
            if (exhausted) return false;
        }
        dead.insert(key);
        return false;
    };

    Certificate c;
    if (dfs(n)) {
        AngleAssignment asg;
        for (const auto& a : peel) asg.add(a);
        asg.normalize();
        c.verdict = Verdict::yes;
        c.assignment = std::move(asg);
        c.nodes = nodes;
        return c;
    }
    c = oracle_solve(g, CoverSpec::basic(), budget);
    c.nodes += nodes;
    return c;
}

AllocationResult min_allocation_bruteforce(const RotationGraph& g, int m, int cap) {
    const int ne = g.num_edges();
    if (ne > cap) throw CapExceeded("allocation brute force is capped at " + std::to_string(cap) + " edges");
    if (m < 1) throw MalformedInput("angle width must be positive");
    DartTable dt(g);
    const int n = g.num_vertices();
    std::vector<std::vector<int>> cost(n);
    for (int v = 0; v < n; ++v) {
        int deg = g.degree(v);
        if (deg > 24) throw CapExceeded("allocation brute force is capped at degree 24");
        cost[v].resize(std::size_t{1} << deg);
        for (std::size_t s = 0; s < cost[v].size(); ++s)
            cost[v][s] = min_arc_cover_mask(s, deg, std::min(m, std::max(deg, 1)));
    }
    std::vector<std::uint64_t> mask(n, 0);
    auto place = [&](int d, bool on) {
        Dart t = dt.dart(d);
        if (on)
            mask[t.vertex] |= 1ULL << t.slot;
        else
            mask[t.vertex] &= ~(1ULL << t.slot);
    };
    // choice bit e: 0 -> dart 2e, 1 -> dart 2e+1; walk in Gray-code order
    for (int e = 0; e < ne; ++e) place(2 * e, true);
    auto total = [&] {
        long long t = 0;
        for (int v = 0; v < n; ++v) t += cost[v][mask[v]];
        return t;
    };
    long long cur = total(), best = cur;
    std::uint64_t best_code = 0, code = 0;
    const std::uint64_t steps = std::uint64_t{1} << ne;
    for (std::uint64_t i = 1; i < steps; ++i) {
        int e = std::countr_zero(i);
        int d_old = 2 * e + static_cast<int>((code >> e) & 1);
        int d_new = d_old ^ 1;
        int a = dt.dart(d_old).vertex, b = dt.dart(d_new).vertex;
        cur -= cost[a][mask[a]];
        if (b != a) cur -= cost[b][mask[b]];
        place(d_old, false);
        place(d_new, true);
        cur += cost[a][mask[a]];
        if (b != a) cur += cost[b][mask[b]];
        code ^= std::uint64_t{1} << e;
        if (cur < best) {
            best = cur;
            best_code = code;
        }
    }
    std::vector<std::vector<int>> slots(n);
    for (int e = 0; e < ne; ++e) {
        Dart t = dt.dart(2 * e + static_cast<int>((best_code >> e) & 1));
        slots[t.vertex].push_back(t.slot);
    }
    AllocationResult r;
    for (int v = 0; v < n; ++v) {
        if (slots[v].empty()) continue;
        int w = std::min(m, g.degree(v));
        for (int s : min_arc_cover(g.degree(v), slots[v], w).starts) r.allocation.add({v, s, w});
    }
    r.allocation.normalize();
    r.size = r.allocation.size();
    if (r.size != best) throw std::logic_error("allocation witness does not match its cost");
    return r;
}

}  // namespace angleset
