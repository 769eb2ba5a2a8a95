#include <doctest.h>

#include "angleset/errors.hpp"
#include "angleset/transform.hpp"
#include "helpers.hpp"

using namespace angleset;
using namespace testing;

namespace {

// Square with both diagonals crossing once.
TopologicalGraph crossed_square(int bit) {
    TopologicalGraph tg;
    tg.base = from_drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
    tg.crossings.push_back({0, 4, 5, bit});
    tg.sequence.assign(6, {});
    tg.sequence[4] = {0};
    tg.sequence[5] = {0};
    return tg;
}

}  // namespace

TEST_CASE("piece labels are the Cantor pairing") {
    CHECK(piece_label(0, 0) == 0);
    CHECK(piece_label(1, 0) == 1);
    CHECK(piece_label(0, 1) == 2);
    CHECK(piece_label(3, 2) == 17);
}

TEST_CASE("planarize a crossed square") {
    auto tg = crossed_square(0);
    CHECK(validate_topological(tg).empty());
    auto p = planarize(tg);
    CHECK(p.num_vertices() == 5);
    CHECK(p.num_edges() == 8);
    CHECK(validate_graph(p).empty());
    CHECK(p.degree(4) == 4);
    CHECK(p.vertex_label(4) == 4);
    CHECK(trace_faces(p).is_plane);
    // the wrong interleaving gives a non-plane rotation
    CHECK_FALSE(trace_faces(planarize(crossed_square(1))).is_plane);
}

TEST_CASE("validate_topological rejects malformed crossings") {
    auto tg = crossed_square(0);
    tg.crossings[0].f = 4;
    CHECK_FALSE(validate_topological(tg).empty());
    tg = crossed_square(0);
    tg.crossings[0].f = 0;  // shares an endpoint with edge 4
    tg.sequence[5].clear();
    tg.sequence[0] = {0};
    CHECK_FALSE(validate_topological(tg).empty());
    tg = crossed_square(0);
    tg.sequence[5].clear();
    CHECK_FALSE(validate_topological(tg).empty());
    tg = crossed_square(0);
    tg.crossings[0].bit = 2;
    CHECK_FALSE(validate_topological(tg).empty());
    CHECK_THROWS_AS(planarize(tg), MalformedInput);
}

TEST_CASE("planarization of drawn graphs is plane") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto tg = gen_random_topological(9, 3, seed);
        REQUIRE(validate_topological(tg).empty());
        CHECK(tg.num_crossings() <= 3);
        auto p = planarize(tg);
        CHECK(p.num_vertices() == tg.base.num_vertices() + tg.num_crossings());
        CHECK(p.num_edges() == tg.base.num_edges() + 2 * tg.num_crossings());
        CHECK(trace_faces(p).is_plane);
    }
}

TEST_CASE("G_mat has one left node per edge and two right nodes per vertex") {
    auto g = with_sorted_rotation(complete_graph(4));
    auto b = build_gmat(g);
    CHECK(b.left == 6);
    CHECK(b.right == 8);
    CHECK(b.edges.size() == 24);
    RotationGraph loop(1);
    int e = loop.add_edge(0, 0);
    loop.set_rotation(0, {e, e});
    CHECK(build_gmat(loop).edges.size() == 2);
}

TEST_CASE("medial graph") {
    auto c4 = with_sorted_rotation(cycle_graph(4));
    auto md = medial_graph(c4);
    CHECK(md.graph.num_vertices == 4);
    CHECK(md.graph.edges.size() == 4);
    REQUIRE(md.provenance.size() == 4);
    for (std::size_t i = 0; i < md.provenance.size(); ++i) {
        auto [v, s] = md.provenance[i];
        const auto& r = c4.rotation(v);
        auto x = md.graph.edges[i];
        int a = r[s], b = r[(s + 1) % r.size()];
        CHECK(((x.u == a && x.v == b) || (x.u == b && x.v == a)));
    }
    auto k4 = with_sorted_rotation(complete_graph(4));
    CHECK(medial_graph(k4).graph.edges.size() == 12);
    // a path's middle vertex contributes one medial edge, degree-1 ends none
    PlainGraph path;
    path.num_vertices = 3;
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(medial_graph(with_sorted_rotation(path)).graph.edges.size() == 1);
}

TEST_CASE("2-blowup") {
    auto g = with_sorted_rotation(cycle_graph(3));
    auto b = blowup2(g);
    CHECK(b.num_vertices == 6);
    CHECK(b.edges.size() == 12);
    RotationGraph loop(1);
    int e = loop.add_edge(0, 0);
    loop.set_rotation(0, {e, e});
    CHECK_THROWS_AS(blowup2(loop), UnsupportedInput);
}
