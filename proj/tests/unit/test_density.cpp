#include <doctest.h>

#include "angleset/density.hpp"
#include "helpers.hpp"

using namespace angleset;
using namespace testing;

TEST_CASE("Hopcroft-Karp on small bipartite graphs") {
    BipartiteGraph b{3, 3, {{0, 0}, {0, 1}, {1, 0}, {2, 1}, {2, 2}}};
    auto m = max_bipartite_matching(b);
    CHECK(m.matching.size() == 3);
    for (auto [l, r] : m.matching.pairs) {
        CHECK(m.mate_left[l] == r);
        CHECK(m.mate_right[r] == l);
    }
    BipartiteGraph star{3, 1, {{0, 0}, {1, 0}, {2, 0}}};
    CHECK(max_bipartite_matching(star).matching.size() == 1);
    CHECK(max_bipartite_matching(BipartiteGraph{}).matching.size() == 0);
}

TEST_CASE("low density of complete graphs") {
    CHECK(check_low_density(with_sorted_rotation(complete_graph(5))).low_density);
    auto k6 = with_sorted_rotation(complete_graph(6));
    auto rep = check_low_density(k6);
    CHECK_FALSE(rep.low_density);
    CHECK(induced_edge_count(k6, rep.witness) > 2 * static_cast<int>(rep.witness.size()));
}

TEST_CASE("witness is a dense subgraph inside a sparse host") {
    PlainGraph p = complete_graph(6);
    p.num_vertices = 12;
    for (int v = 6; v < 12; ++v) p.add_edge(v - 1, v);
    auto g = with_sorted_rotation(p);
    auto rep = check_low_density(g);
    CHECK_FALSE(rep.low_density);
    CHECK(induced_edge_count(g, rep.witness) > 2 * static_cast<int>(rep.witness.size()));
    for (int v : rep.witness) CHECK(v < 6);
}

TEST_CASE("a double loop at one vertex is still low density, a triple is not") {
    RotationGraph g(1);
    int a = g.add_edge(0, 0), b = g.add_edge(0, 0);
    g.set_rotation(0, {a, a, b, b});
    CHECK(check_low_density(g).low_density);
    int c = g.add_edge(0, 0);
    g.set_rotation(0, {a, a, b, b, c, c});
    CHECK_FALSE(check_low_density(g).low_density);
}

TEST_CASE("density agrees with subset enumeration on small graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto p = random_simple(7, 0.75, seed);
        auto g = with_sorted_rotation(p);
        bool dense = false;
        for (int mask = 1; mask < (1 << 7); ++mask) {
            std::vector<int> s;
            for (int v = 0; v < 7; ++v)
                if (mask >> v & 1) s.push_back(v);
            dense |= induced_edge_count(g, s) > 2 * static_cast<int>(s.size());
        }
        CHECK(check_low_density(g).low_density == !dense);
    }
}
