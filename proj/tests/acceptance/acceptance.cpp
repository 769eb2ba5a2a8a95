// One line per acceptance criterion. With an argument N only criterion N runs.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "angleset/allocate.hpp"
#include "angleset/density.hpp"
#include "angleset/instances.hpp"
#include "angleset/reduce.hpp"
#include "angleset/solve.hpp"
#include "angleset/thickness.hpp"
#include "angleset/transform.hpp"

using namespace angleset;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail.str("");
        pass = false;
        detail << why << "; ";
    }
};

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

PlainGraph complete(int k) {
    PlainGraph p;
    p.num_vertices = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) p.add_edge(i, j);
    return p;
}

bool valid(const RotationGraph& g, const Certificate& c, CoverSpec spec) {
    return c.yes() && c.assignment && check_cover(g, *c.assignment, spec).valid;
}

void c1(Outcome& o) {
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Rng rng(seed);
        auto g = gen_random_bounded_degree(1 + rng.below(300), 4, seed);
        if (!valid(g, solve_deg4(g), CoverSpec::basic())) ++failures;
    }
    if (failures) o.fail(std::to_string(failures) + " of 500 random graphs without a valid cover");
    auto big = gen_random_bounded_degree(100000, 4, 12345);
    auto t = Clock::now();
    auto c = solve_deg4(big);
    double secs = since(t);
    if (!valid(big, c, CoverSpec::basic())) o.fail("n=1e5 probe produced no valid cover");
    if (secs >= 5.0) o.fail("n=1e5 probe took " + std::to_string(secs) + " s");
    o.detail << "500/500 valid, n=1e5 in " << secs << " s";
}

void c2(Outcome& o) {
    const std::vector<std::pair<std::string, Verdict>> want = {
        {"fig2a", Verdict::no}, {"fig2b", Verdict::no},     {"fig3", Verdict::no},    {"laman-fig6", Verdict::no},
        {"fig1", Verdict::yes}, {"fig4-yes", Verdict::yes}, {"fig4-no", Verdict::no}};
    for (const auto& [name, v] : want) {
        auto g = get_instance(name).graph;
        auto t = Clock::now();
        auto c = oracle_solve(g, CoverSpec::basic(), 10'000'000);
        double secs = since(t);
        if (c.verdict != v) o.fail(name + " gave " + to_string(c.verdict));
        if (secs > 60) o.fail(name + " took " + std::to_string(secs) + " s");
        if (c.yes() && !valid(g, c, CoverSpec::basic())) o.fail(name + " certificate invalid");
        o.detail << name << "=" << to_string(c.verdict) << " ";
    }
}

void c3(Outcome& o) {
    const int allowed[] = {1, 2, 4, 5};
    int yes = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        std::vector<int> deg(1 + rng.below(12));
        for (auto& d : deg) d = allowed[rng.below(4)];
        int sum = 0;
        for (int d : deg) sum += d;
        if (sum % 2) deg[0] = deg[0] == 1 ? 2 : deg[0] == 2 ? 1 : deg[0] == 4 ? 5 : 4;
        auto g = gen_degree_sequence(deg, seed);
        auto s = solve_no_deg3(g);
        auto r = oracle_solve(g, CoverSpec::basic());
        if (s.verdict != r.verdict) o.fail("seed " + std::to_string(seed) + " disagrees");
        if (s.yes()) {
            ++yes;
            if (!valid(g, s, CoverSpec::basic())) o.fail("seed " + std::to_string(seed) + " certificate invalid");
        }
    }
    o.detail << "200 agree (" << yes << " YES)";
}

void c4(Outcome& o) {
    int crossed = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        auto tg = gen_random_topological(2 + rng.below(9), 3, seed);
        crossed += tg.num_crossings() > 0;
        auto a = oracle_solve(tg.base, CoverSpec::basic());
        auto b = oracle_solve(planarize(tg), CoverSpec::basic());
        if (a.verdict != b.verdict || a.verdict == Verdict::indeterminate)
            o.fail("seed " + std::to_string(seed) + ": " + to_string(a.verdict) + " vs " + to_string(b.verdict));
    }
    o.detail << "100 agree (" << crossed << " with crossings)";
}

bool connected(const PlainGraph& g) {
    int count = 0;
    connected_components(g.num_vertices, g.edges, &count);
    return count <= 1;
}

void c5(Outcome& o) {
    std::vector<PlainGraph> cases;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        for (int mask = 0; mask < (1 << pairs.size()); ++mask) {
            PlainGraph g;
            g.num_vertices = n;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask >> k & 1) g.add_edge(pairs[k].first, pairs[k].second);
            if (connected(g)) cases.push_back(g);
        }
    }
    const std::size_t small = cases.size();
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed + 1000);
        PlainGraph g;
        g.num_vertices = 5;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (rng.below(10) < 6) g.add_edge(i, j);
        cases.push_back(g);
    }
    int yes = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& g = cases[i];
        auto r = reduce_3col(g);
        const int m = static_cast<int>(g.edges.size());
        if (r.graph.num_vertices() != g.num_vertices + 18 * m || r.graph.num_edges() != 21 * m)
            o.fail("case " + std::to_string(i) + " has wrong size");
        auto col = brute_3col(g);
        auto c = oracle_solve(r.graph, CoverSpec::basic());
        if (c.verdict == Verdict::indeterminate) o.fail("case " + std::to_string(i) + " indeterminate");
        if (c.yes() != col.has_value()) o.fail("case " + std::to_string(i) + " disagrees");
        if (c.yes()) {
            ++yes;
            if (!check_3colouring(g, extract_3colouring(r.graph, *c.assignment, r.map)))
                o.fail("case " + std::to_string(i) + " extracted colouring improper");
        }
    }
    o.detail << cases.size() << " cases (" << small << " on <= 4 vertices, " << yes << " YES)";
}

void c6(Outcome& o) {
    for (int delta : {6, 8, 12}) {
        int ok = 0;
        const CoverSpec spec{sextet_angle_bound(delta), 2};
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Rng rng(seed * 31 + delta);
            int n = 2 + rng.below(40);
            if ((n * delta) % 2) ++n;
            auto g = gen_regular(n, delta, seed);
            try {
                if (valid(g, solve_sextet(g, delta), spec)) ++ok;
            } catch (const std::exception& e) {
                o.fail("delta " + std::to_string(delta) + " seed " + std::to_string(seed) + ": " + e.what());
            }
        }
        if (ok != 100) o.fail("delta " + std::to_string(delta) + ": " + std::to_string(ok) + "/100");
        o.detail << "delta " << delta << " a=" << spec.a << " " << ok << "/100 ";
    }
}

void c7(Outcome& o) {
    int done = 0;
    for (std::uint64_t seed = 0; done < 200; ++seed) {
        Rng rng(seed);
        auto g = gen_random_bounded_degree(2 + rng.below(11), 2 + rng.below(5), seed);
        if (g.num_edges() > 18) continue;
        ++done;
        auto opt = optimal_allocation(g);
        auto brute = min_allocation_bruteforce(g);
        if (opt.result.size != brute.size) o.fail("seed " + std::to_string(seed) + ": not optimal");
        if (opt.result.size != g.num_edges() - opt.matched) o.fail("seed " + std::to_string(seed) + ": size != |E|-|M|");
        if (!check_cover(g, opt.result.allocation, CoverSpec::allocation()).valid)
            o.fail("seed " + std::to_string(seed) + ": allocation invalid");
    }
    o.detail << "200 graphs optimal";
}

void c8(Outcome& o) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        auto g = gen_random_plane(3 + rng.below(40), 4, seed);
        if (!trace_faces(g).is_plane) {
            o.fail("seed " + std::to_string(seed) + " not plane");
            continue;
        }
        auto c = solve_deg4(g);
        try {
            auto rep = verify_decomposition(g, blowup_decomposition(g, *c.assignment));
            if (!rep.valid) o.fail("seed " + std::to_string(seed) + ": " + rep.violations.front());
        } catch (const std::exception& e) {
            o.fail("seed " + std::to_string(seed) + ": " + e.what());
        }
    }
    o.detail << "100 decompositions verified";
}

void c9(Outcome& o) {
    auto k3 = complete(3);
    for (int a : {2, 3}) {
        int d = reduce_multi(k3, a).graph.max_degree();
        if (d != 4 * a + 1) o.fail("multi a=" + std::to_string(a) + " max degree " + std::to_string(d));
    }
    auto r8 = reduce_2angle_deg8(k3);
    if (r8.graph.max_degree() != 8) o.fail("2angle8 max degree " + std::to_string(r8.graph.max_degree()));
    for (int v = 0; v < 3; ++v) {
        if (r8.graph.degree(r8.map.centre[v]) != 7) o.fail("2angle8 centre degree != 7");
        for (int k = 0; k < 3; ++k) {
            const auto& p = r8.map.path[v][k];
            for (std::size_t j = 0; j + 1 < p.size(); ++j)
                if (r8.graph.degree(p[j]) != 8) o.fail("2angle8 path degree != 8");
        }
    }
    for (int m : {3, 4}) {
        int d = reduce_wide(k3, m).graph.max_degree();
        if (d != 3 * m - 3)
            o.fail("wide m=" + std::to_string(m) + " max degree " + std::to_string(d) + ", expected " +
                   std::to_string(3 * m - 3));
    }
    auto t = build_T();
    if (t.internal_vertices != 9 || t.graph.num_edges() != 37) o.fail("T size");
    OracleOptions opt;
    opt.spec = {2, 2};
    if (oracle_search(t.graph, opt).verdict != Verdict::yes) o.fail("T plus v has no 2-angle cover at all");
    opt.angle_limit.assign(t.graph.num_vertices(), 2);
    opt.angle_limit[t.external] = 0;
    auto r = oracle_search(t.graph, opt);
    if (r.verdict != Verdict::no) o.fail("T covered without v: " + std::string(to_string(r.verdict)));
    if (o.pass) o.detail << "all degree bounds hold; T forces a stub";
}

void c10(Outcome& o) {
    auto expect = [&](const std::string& what, const RotationGraph& g, bool low) {
        auto rep = check_low_density(g);
        if (rep.low_density != low) o.fail(what + " misclassified");
        if (!low && induced_edge_count(g, rep.witness) <= 2 * static_cast<int>(rep.witness.size()))
            o.fail(what + " witness not dense");
    };
    expect("K5", with_sorted_rotation(complete(5)), true);
    expect("fig2a", get_instance("fig2a").graph, true);
    expect("fig2b", get_instance("fig2b").graph, true);
    expect("laman-fig6", get_instance("laman-fig6").graph, true);
    for (std::uint64_t seed = 0; seed < 50; ++seed) expect("laman seed " + std::to_string(seed), gen_random_laman(2 + seed % 30, seed), true);
    expect("K6", with_sorted_rotation(complete(6)), false);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen_regular(10 + static_cast<int>(seed), 4, seed);  // exactly 2n edges
        expect("4-regular seed " + std::to_string(seed), g, true);
        g.add_edge_appended(0, 1);
        expect("4-regular plus one seed " + std::to_string(seed), g, false);
    }
    if (o.pass) o.detail << "all classifications and witnesses correct";
}

void c11(Outcome& o) {
    auto k3 = oracle_solve(reduce_wide(complete(3), 3).graph, {1, 3});
    auto k4 = oracle_solve(reduce_wide(complete(4), 3).graph, {1, 3});
    if (k3.verdict != Verdict::yes) o.fail(std::string("K3 gave ") + to_string(k3.verdict));
    if (k4.verdict != Verdict::no) o.fail(std::string("K4 gave ") + to_string(k4.verdict));
    o.detail << "K3=" << to_string(k3.verdict) << " K4=" << to_string(k4.verdict);
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
    {"deg4 universality", c1}, {"figure corpus", c2},     {"no-degree-3 equivalence", c3},
    {"planarization", c4},     {"3col equivalence", c5},  {"sextet covers", c6},
    {"allocation optimality", c7}, {"blowup decomposition", c8}, {"reduction degree bounds", c9},
    {"low density", c10},      {"wide equivalence", c11}};

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int num = static_cast<int>(i) + 1;
        if (only && only != num) continue;
        Outcome o;
        auto t = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << num << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " - "
                  << o.detail.str() << " [" << since(t) << " s]" << std::endl;
        all &= o.pass;
    }
    return all ? 0 : 1;
}
