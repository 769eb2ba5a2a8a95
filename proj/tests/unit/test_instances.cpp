#include <doctest.h>

#include <algorithm>

#include "angleset/errors.hpp"
#include "angleset/solve.hpp"
#include "helpers.hpp"

using namespace angleset;
using namespace testing;

TEST_CASE("catalogue sizes") {
    auto size = [](const char* n) {
        auto g = get_instance(n).graph;
        return std::pair{g.num_vertices(), g.num_edges()};
    };
    CHECK(size("fig1") == std::pair{8, 16});
    CHECK(size("fig2a") == std::pair{21, 42});
    CHECK(size("fig2b") == std::pair{27, 54});
    CHECK(size("fig3") == std::pair{23, 46});
    CHECK(size("fig4-no") == std::pair{16, 32});
    CHECK(size("laman-fig6") == std::pair{9, 15});
    CHECK_THROWS_AS(get_instance("fig99"), MalformedInput);
}

TEST_CASE("every instance validates and meets its expectation") {
    for (const auto& name : instance_names()) {
        auto in = get_instance(name);
        CAPTURE(name);
        CHECK(validate_graph(in.graph).empty());
        if (!in.vertex_names.empty()) CHECK(in.vertex_names.size() == static_cast<std::size_t>(in.graph.num_vertices()));
        if (in.expected) CHECK(oracle_solve(in.graph, CoverSpec::basic()).verdict == *in.expected);
    }
}

TEST_CASE("figure degrees") {
    auto g = get_instance("fig2a").graph;
    CHECK(trace_faces(g).is_plane);
    int lo = 99, hi = 0;
    for (int v = 0; v < g.num_vertices(); ++v) lo = std::min(lo, g.degree(v)), hi = std::max(hi, g.degree(v));
    CHECK(lo == 2);
    CHECK(hi == 5);
    auto b = get_instance("fig2b").graph;
    lo = 99, hi = 0;
    for (int v = 0; v < b.num_vertices(); ++v) lo = std::min(lo, b.degree(v)), hi = std::max(hi, b.degree(v));
    CHECK(lo == 3);
    CHECK(hi == 5);
}

TEST_CASE("fig4 is one graph with two embeddings") {
    auto no = get_instance("fig4-no").graph, yes = get_instance("fig4-yes").graph;
    CHECK(no.edges() == yes.edges());
    CHECK(trace_faces(no).is_plane);
    CHECK(trace_faces(yes).is_plane);
}

TEST_CASE("laman-fig6: four black vertices carry all five black edges") {
    auto g = get_instance("laman-fig6").graph;
    std::vector<char> black(9, 0);
    for (int v = 0; v < 4; ++v) black[v] = 1;
    int black_edges = 0;
    for (const auto& e : g.edges()) {
        if (black[e.u] && black[e.v]) ++black_edges;
        CHECK((black[e.u] || black[e.v]));
    }
    CHECK(black_edges == 5);
    CHECK(g.num_edges() == 2 * g.num_vertices() - 3);
}

TEST_CASE("bounded-degree generator") {
    CHECK(gen_random_bounded_degree(1, 0, 5).num_vertices() == 1);
    CHECK_THROWS_AS(gen_random_bounded_degree(3, 1, 5), UnsupportedInput);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen_random_bounded_degree(50, 4, seed);
        CHECK(g.max_degree() <= 4);
        int count = 0;
        connected_components(g.num_vertices(), g.edges(), &count);
        CHECK(count == 1);
        CHECK(validate_graph(g).empty());
        auto p = gen_random_bounded_degree(12, 2, seed);
        CHECK(p.max_degree() <= 2);
    }
    auto a = gen_random_bounded_degree(30, 4, 9), b = gen_random_bounded_degree(30, 4, 9);
    CHECK(a.edges() == b.edges());
    for (int v = 0; v < 30; ++v) CHECK(a.rotation(v) == b.rotation(v));
}

TEST_CASE("regular generator") {
    auto g = gen_regular(2, 2, 4);
    CHECK(g.num_edges() == 2);
    for (int v = 0; v < 2; ++v) CHECK(g.degree(v) == 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto h = gen_regular(9, 8, seed);
        for (int v = 0; v < 9; ++v) CHECK(h.degree(v) == 8);
        CHECK(validate_graph(h).empty());
    }
    CHECK_THROWS_AS(gen_regular(3, 3, 1), UnsupportedInput);
}

TEST_CASE("Henneberg constructions give Laman counts") {
    auto base = gen_henneberg_laman({}, 1);
    CHECK(base.num_vertices() == 2);
    CHECK(base.num_edges() == 1);
    auto tri = gen_henneberg_laman({{HennebergStep::s1, 0, 1}}, 1);
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);
    auto sub = gen_henneberg_laman({{HennebergStep::s1, 0, 1}, {HennebergStep::s2, 0, 2}}, 1);
    CHECK(sub.num_edges() == 5);
    CHECK(underlying(sub).is_simple());
    CHECK_THROWS_AS(gen_henneberg_laman({{HennebergStep::s2, 0, 1}}, 1), MalformedInput);
    CHECK_THROWS_AS(gen_henneberg_laman({{HennebergStep::s1, 0, 5}}, 1), MalformedInput);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 2 + static_cast<int>(seed % 30);
        auto g = gen_random_laman(n, seed);
        CHECK(g.num_vertices() == n);
        CHECK(g.num_edges() == 2 * n - 3);
        CHECK(validate_graph(g).empty());
        // every subset has at most 2k - 3 edges
        if (n <= 12) {
            for (int mask = 1; mask < (1 << n); ++mask) {
                std::vector<int> s;
                for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) s.push_back(v);
                if (s.size() < 2) continue;
                int inside = 0;
                for (const auto& e : g.edges()) inside += (mask >> e.u & 1) && (mask >> e.v & 1);
                CHECK(inside <= 2 * static_cast<int>(s.size()) - 3);
            }
        }
    }
}

TEST_CASE("outerplane generator") {
    auto tri = gen_random_outerplane(3, 2);
    CHECK(tri.num_edges() == 3);
    CHECK_THROWS_AS(gen_random_outerplane(2, 1), UnsupportedInput);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen_random_outerplane(4 + static_cast<int>(seed % 15), seed);
        CHECK(trace_faces(g).is_plane);
        CHECK(is_outerplane(g));
        CHECK(oracle_solve(g, CoverSpec::basic()).verdict == Verdict::yes);
    }
}

TEST_CASE("plane generator") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen_random_plane(25, 4, seed);
        CHECK(g.max_degree() <= 4);
        CHECK(trace_faces(g).is_plane);
        CHECK(underlying(g).is_simple());
    }
}
