#include <doctest.h>

#include <chrono>

#include "angleset/errors.hpp"
#include "angleset/solve.hpp"
#include "helpers.hpp"

using namespace angleset;
using namespace testing;

TEST_CASE("oracle agrees with exhaustive enumeration") {
    int yes = 0, no = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Rng rng(seed);
        int n = 3 + rng.below(5);
        auto g = gen_random_bounded_degree(n, 3 + rng.below(4), seed);
        for (int extra = rng.below(4); extra > 0; --extra) {
            int u = rng.below(n), v = rng.below(n);
            if (u == v) continue;
            int e = g.add_edge(u, v);
            g.rotation(u).insert(g.rotation(u).begin() + rng.below(g.degree(u) + 1), e);
            g.rotation(v).insert(g.rotation(v).begin() + rng.below(g.degree(v) + 1), e);
        }
        auto c = oracle_solve(g, CoverSpec::basic());
        bool brute = brute_cover_exists(g);
        CHECK(c.verdict == (brute ? Verdict::yes : Verdict::no));
        if (c.yes()) CHECK(check_cover(g, *c.assignment, CoverSpec::basic()).valid);
        (brute ? yes : no)++;
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("oracle for multi-angle and wide specs matches enumeration") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = with_sorted_rotation(random_simple(6, 0.8, seed));
        auto rng = Rng(seed);
        shuffle_rotations(g, rng);
        for (CoverSpec s : {CoverSpec{2, 2}, CoverSpec{1, 3}}) {
            auto c = oracle_solve(g, s);
            CHECK(c.verdict == (brute_cover_exists(g, s.a, s.m) ? Verdict::yes : Verdict::no));
            if (c.yes()) CHECK(check_cover(g, *c.assignment, s).valid);
        }
    }
}

TEST_CASE("oracle budget yields indeterminate") {
    auto g = get_instance("fig3").graph;
    auto c = oracle_solve(g, CoverSpec::basic(), 1);
    CHECK(c.verdict != Verdict::yes);
    CHECK(oracle_solve(g, CoverSpec::basic()).verdict == Verdict::no);
}

TEST_CASE("oracle verdict is invariant under rotation shifts") {
    for (const char* name : {"fig1", "fig2a", "fig4-yes", "fig4-no"}) {
        auto g = get_instance(name).graph;
        auto base = oracle_solve(g, CoverSpec::basic()).verdict;
        for (int v = 0; v < g.num_vertices(); ++v) {
            auto& r = g.rotation(v);
            if (!r.empty()) std::rotate(r.begin(), r.begin() + v % r.size(), r.end());
        }
        CHECK(oracle_solve(g, CoverSpec::basic()).verdict == base);
    }
}

TEST_CASE("oracle_max_cover finds the fewest uncovered edges") {
    auto k6 = with_sorted_rotation(complete_graph(6));
    auto r = oracle_max_cover(k6, CoverSpec::basic());
    CHECK(r.verdict == Verdict::yes);
    CHECK(r.uncovered.size() == 3);  // 15 edges, at most 12 coverable
    auto fig2a = get_instance("fig2a").graph;
    auto f = oracle_max_cover(fig2a, CoverSpec::basic());
    CHECK(f.verdict == Verdict::yes);
    CHECK(f.uncovered.size() >= 1);
    auto cov = covered_edges(fig2a, f.assignment);
    for (int e : f.uncovered) CHECK_FALSE(cov[e]);
}

TEST_CASE("oracle_max_cover matches enumeration") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = with_sorted_rotation(random_simple(6, 0.85, seed));
        Rng rng(seed);
        shuffle_rotations(g, rng);
        auto r = oracle_max_cover(g, CoverSpec::basic());
        REQUIRE(r.verdict == Verdict::yes);
        CHECK(static_cast<int>(r.uncovered.size()) == brute_min_uncovered(g));
        auto cov = covered_edges(g, r.assignment);
        CHECK(std::count(cov.begin(), cov.end(), 0) == static_cast<long>(r.uncovered.size()));
    }
}

TEST_CASE("angle limits per vertex") {
    auto t = get_instance("T").graph;
    OracleOptions opt;
    opt.spec = {2, 2};
    opt.angle_limit.assign(t.num_vertices(), 2);
    CHECK(oracle_search(t, opt).verdict == Verdict::yes);
    opt.angle_limit[9] = 0;
    CHECK(oracle_search(t, opt).verdict == Verdict::no);
}

TEST_CASE("degree-4 solver") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = gen_random_bounded_degree(1 + static_cast<int>(seed % 60), 4, seed);
        auto c = solve_deg4(g);
        REQUIRE(c.yes());
        CHECK(check_cover(g, *c.assignment, CoverSpec::basic()).valid);
    }
    RotationGraph loops(1);
    int a = loops.add_edge(0, 0), b = loops.add_edge(0, 0);
    loops.set_rotation(0, {a, b, a, b});
    auto c = solve_deg4(loops);
    REQUIRE(c.yes());
    CHECK(check_cover(loops, *c.assignment, CoverSpec::basic()).valid);
    CHECK_THROWS_AS(solve_deg4(with_sorted_rotation(complete_graph(6))), UnsupportedInput);
}

TEST_CASE("2-SAT solver on graphs without degree 3") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Rng rng(seed);
        std::vector<int> deg(4 + rng.below(6));
        const int choices[] = {1, 2, 4, 5};
        for (auto& d : deg) d = choices[rng.below(4)];
        int sum = 0;
        for (int d : deg) sum += d;
        if (sum % 2) deg[0] = deg[0] == 1 ? 2 : deg[0] == 2 ? 1 : deg[0] == 4 ? 5 : 4;
        auto g = gen_degree_sequence(deg, seed);
        auto c = solve_no_deg3(g);
        CHECK(c.verdict == (brute_cover_exists(g) ? Verdict::yes : Verdict::no));
        if (c.yes()) CHECK(check_cover(g, *c.assignment, CoverSpec::basic()).valid);
    }
    CHECK(solve_no_deg3(get_instance("k5").graph).verdict == oracle_solve(get_instance("k5").graph, CoverSpec::basic()).verdict);
    CHECK_THROWS_AS(solve_no_deg3(get_instance("k4").graph), UnsupportedInput);
}

TEST_CASE("sextet solver") {
    CHECK(sextet_angle_bound(6) == 2);
    CHECK(sextet_angle_bound(8) == 3);
    CHECK(sextet_angle_bound(12) == 4);
    CHECK(sextet_angle_bound(2) == 1);
    for (int delta : {2, 4, 6, 8, 10, 12, 14, 18}) {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            int n = 2 + static_cast<int>(seed % 9);
            if ((n * delta) % 2) ++n;
            auto g = gen_regular(n, delta, seed);
            auto c = solve_sextet(g, delta);
            REQUIRE(c.yes());
            CHECK(check_cover(g, *c.assignment, {sextet_angle_bound(delta), 2}).valid);
        }
    }
    // not regular: lower degrees are padded with dummies
    auto g = gen_random_bounded_degree(40, 6, 3);
    auto c = solve_sextet(g, 6);
    REQUIRE(c.yes());
    CHECK(check_cover(g, *c.assignment, {2, 2}).valid);
    CHECK_THROWS_AS(solve_sextet(g, 5), UnsupportedInput);
}

TEST_CASE("outerplane solver") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = gen_random_outerplane(3 + static_cast<int>(seed % 20), seed);
        REQUIRE(is_outerplane(g));
        auto c = solve_outerplane(g);
        REQUIRE(c.yes());
        CHECK(check_cover(g, *c.assignment, CoverSpec::basic()).valid);
    }
    CHECK_FALSE(is_outerplane(get_instance("fig1").graph));
    CHECK_THROWS_AS(solve_outerplane(get_instance("fig1").graph), UnsupportedInput);
}

TEST_CASE("brute-force allocation") {
    auto c4 = with_sorted_rotation(cycle_graph(4));
    CHECK(min_allocation_bruteforce(c4).size == 2);
    auto k4 = with_sorted_rotation(complete_graph(4));
    auto r = min_allocation_bruteforce(k4);
    CHECK(check_cover(k4, r.allocation, CoverSpec::allocation()).valid);
    CHECK(r.size == r.allocation.size());
    CHECK_THROWS_AS(min_allocation_bruteforce(with_sorted_rotation(complete_graph(7))), CapExceeded);
}

TEST_CASE("degree-4 solver scales linearly") {
    auto g = gen_random_bounded_degree(100000, 4, 7);
    auto t0 = std::chrono::steady_clock::now();
    auto c = solve_deg4(g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    REQUIRE(c.yes());
    CHECK(check_cover(g, *c.assignment, CoverSpec::basic()).valid);
    CHECK(secs < 5.0);
}
