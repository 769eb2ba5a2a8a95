#pragma once

#include <string>
#include <vector>

namespace angleset {

struct Edge {
    int u = 0;
    int v = 0;

    bool is_loop() const { return u == v; }
    int other(int w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Multigraph with a cyclic ordering of edge ends ("slots") at every vertex.
//
// Vertices and edges are dense indices 0..n-1 and 0..m-1. The external ids used
// by files live in the label vectors and default to the index. A self-loop
// occupies two slots in its vertex's rotation. Mutators do not keep rotations
// consistent; run validate_graph() on anything built by hand.
class RotationGraph {
public:
    RotationGraph() = default;
    explicit RotationGraph(int num_vertices);

    int add_vertex();
    int add_vertex(int label);
    // Rotations are left untouched.
    int add_edge(int u, int v);
    int add_edge(int u, int v, int label);
    // Appends the new edge to the end of the rotation of both endpoints
    // (twice for a loop).
    int add_edge_appended(int u, int v);

    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    int max_degree() const;
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    std::vector<int>& rotation(int v) { return rot_[v]; }
    void set_rotation(int v, std::vector<int> order) { rot_[v] = std::move(order); }

    int vertex_label(int v) const { return vlabel_[v]; }
    int edge_label(int e) const { return elabel_[e]; }
    void set_vertex_label(int v, int label) { vlabel_[v] = label; }
    void set_edge_label(int e, int label) { elabel_[e] = label; }
    // Restores label == index for every vertex and edge.
    void reset_labels();

    // Index of the vertex/edge carrying a label, or -1.
    int find_vertex(int label) const;
    int find_edge(int label) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> rot_;
    std::vector<int> vlabel_;
    std::vector<int> elabel_;
};

// Multigraph without rotation system.
struct PlainGraph {
    int num_vertices = 0;
    std::vector<Edge> edges;

    int add_vertex() { return num_vertices++; }
    int add_edge(int u, int v) {
        edges.push_back({u, v});
        return static_cast<int>(edges.size()) - 1;
    }
    std::vector<int> degrees() const;
    int max_degree() const;
    bool is_simple() const;
};

PlainGraph underlying(const RotationGraph& g);
// Builds a rotation graph whose rotations list edges in ascending neighbour
// order (loops listed twice, adjacent).
RotationGraph with_sorted_rotation(const PlainGraph& g);

// Half-edge (vertex, slot).
struct Dart {
    int vertex = 0;
    int slot = 0;
};

// Dart bookkeeping for a valid rotation graph. Dart 2e sits at the first
// endpoint of edge e, 2e+1 at the second; for a loop 2e is the occurrence that
// comes first in the rotation.
class DartTable {
public:
    // Throws MalformedInput if g violates the rotation invariants.
    explicit DartTable(const RotationGraph& g);

    int num_darts() const { return static_cast<int>(dart_.size()); }
    Dart dart(int d) const { return dart_[d]; }
    int at(int v, int slot) const { return by_slot_[offset_[v] + slot]; }
    int degree(int v) const { return offset_[v + 1] - offset_[v]; }

    static int twin(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }

    // Dart that follows d on its face: cross the edge, then step to the next
    // slot of the rotation at the far end.
    int face_next(int d) const;

private:
    std::vector<Dart> dart_;
    std::vector<int> offset_;
    std::vector<int> by_slot_;
};

// Empty iff every rotation invariant holds.
std::vector<std::string> validate_graph(const RotationGraph& g);

struct FaceReport {
    std::vector<std::vector<int>> faces;    // dart cycles
    std::vector<int> component_of_vertex;
    std::vector<int> genus;                 // per component
    std::vector<int> faces_per_component;
    bool is_plane = true;

    int num_faces() const { return static_cast<int>(faces.size()); }
    int max_genus() const;
};

FaceReport trace_faces(const RotationGraph& g);

// Connected components by vertex; returns component index per vertex.
std::vector<int> connected_components(int num_vertices, const std::vector<Edge>& edges, int* count = nullptr);

}  // namespace angleset
