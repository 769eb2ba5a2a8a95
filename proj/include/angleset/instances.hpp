#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "angleset/cover.hpp"
#include "angleset/graph.hpp"
#include "angleset/transform.hpp"

namespace angleset {

struct NamedInstance {
    std::string name;
    RotationGraph graph;
    std::optional<Verdict> expected;  // for spec (1,2)
    std::vector<std::string> vertex_names;  // empty when vertices are just numbered
};

// fig1, fig2a, fig2b, fig3, fig4-no, fig4-yes, laman-fig6, T, c4, k4, k5, k6.
std::vector<std::string> instance_names();

// Throws MalformedInput for unknown names.
NamedInstance get_instance(const std::string& name);

// Straight-line drawing to rotation system: counterclockwise order of the
// incident edges around each point. Loops are not allowed.
struct Point {
    double x = 0;
    double y = 0;
};
RotationGraph from_drawing(const std::vector<Point>& points, const std::vector<Edge>& edges);

// Seeded source of randomness. Draws are defined here rather than through
// std distributions so output is identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int below(int n);  // uniform in [0, n)
    double unit();     // uniform in [0, 1)
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 eng_;
};

void shuffle_rotations(RotationGraph& g, Rng& rng);

// Throws UnsupportedInput if no connected graph with these parameters exists.
RotationGraph gen_random_bounded_degree(int n, int max_degree, std::uint64_t seed);

// Configuration-model multigraph; throws UnsupportedInput on odd n * degree.
RotationGraph gen_regular(int n, int degree, std::uint64_t seed);
RotationGraph gen_degree_sequence(const std::vector<int>& degrees, std::uint64_t seed);

struct HennebergStep {
    enum Kind { s1, s2 } kind = s1;
    // s1: new vertex joined to vertices a and b.
    // s2: edge a is subdivided and the new vertex joined to vertex b.
    int a = 0;
    int b = 1;
};

// Starts from the single edge (0, 1). Throws MalformedInput on bad references.
RotationGraph gen_henneberg_laman(const std::vector<HennebergStep>& steps, std::uint64_t seed);
// n >= 2 vertices from random valid steps.
RotationGraph gen_random_laman(int n, std::uint64_t seed);

// Convex polygon plus a random subset of a random triangulation's chords.
RotationGraph gen_random_outerplane(int n, std::uint64_t seed);

// Random points, greedy non-crossing straight edges under a degree cap.
RotationGraph gen_random_plane(int n, int max_degree, std::uint64_t seed);

// Straight-line drawing of a random simple graph with at most
// max_crossings edge crossings; crossings recorded from the geometry.
TopologicalGraph gen_random_topological(int n, int max_crossings, std::uint64_t seed);

}  // namespace angleset
