#include "angleset/cover.hpp"

#include <algorithm>

#include "angleset/arcs.hpp"
#include "angleset/errors.hpp"

namespace angleset {

int effective_width(const RotationGraph& g, int v, const CoverSpec& spec) {
    return std::min(spec.m, g.degree(v));
}

void AngleAssignment::normalize() { std::sort(angles.begin(), angles.end()); }

std::vector<std::vector<Angle>> AngleAssignment::by_vertex(int num_vertices) const {
    std::vector<std::vector<Angle>> out(num_vertices);
    for (const auto& a : angles) {
        if (a.vertex < 0 || a.vertex >= num_vertices) throw MalformedInput("angle at unknown vertex");
        out[a.vertex].push_back(a);
    }
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "YES";
        case Verdict::no: return "NO";
        case Verdict::indeterminate: return "INDETERMINATE";
    }
    return "?";
}

static void check_angle_ref(const RotationGraph& g, const Angle& a) {
    if (a.vertex < 0 || a.vertex >= g.num_vertices())
        throw MalformedInput("angle references unknown vertex " + std::to_string(a.vertex));
    const int deg = g.degree(a.vertex);
    if (a.start < 0 || a.start >= deg)
        throw MalformedInput("angle at vertex " + std::to_string(g.vertex_label(a.vertex)) + " starts at slot " +
                             std::to_string(a.start) + " of a degree-" + std::to_string(deg) + " vertex");
    if (a.width < 1) throw MalformedInput("angle width must be positive");
}

std::vector<char> covered_edges(const RotationGraph& g, const AngleAssignment& asg) {
    std::vector<char> covered(g.num_edges(), 0);
    for (const auto& a : asg.angles) {
        check_angle_ref(g, a);
        const auto& r = g.rotation(a.vertex);
        const int deg = static_cast<int>(r.size());
        for (int k = 0; k < std::min(a.width, deg); ++k) covered[r[(a.start + k) % deg]] = 1;
    }
    return covered;
}

CoverReport check_cover(const RotationGraph& g, const AngleAssignment& asg, const CoverSpec& spec) {
    CoverReport rep;
    auto covered = covered_edges(g, asg);
    std::vector<int> count(g.num_vertices(), 0);
    for (const auto& a : asg.angles) {
        ++count[a.vertex];
        int w = effective_width(g, a.vertex, spec);
        if (a.width != w)
            rep.violations.push_back("vertex " + std::to_string(g.vertex_label(a.vertex)) + ": angle at slot " +
                                     std::to_string(a.start) + " has width " + std::to_string(a.width) +
                                     ", expected " + std::to_string(w));
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (count[v] > spec.a)
            rep.violations.push_back("vertex " + std::to_string(g.vertex_label(v)) + ": " + std::to_string(count[v]) +
                                     " angles, at most " + std::to_string(spec.a) + " allowed");
    for (int e = 0; e < g.num_edges(); ++e)
        if (!covered[e]) rep.uncovered_edges.push_back(e);
    rep.valid = rep.violations.empty() && rep.uncovered_edges.empty();
    return rep;
}

CoverReport check_slot_selection(const RotationGraph& g, const SlotSelection& sel, const CoverSpec& spec) {
    CoverReport rep;
    std::vector<char> covered(g.num_edges(), 0);
    for (int v = 0; v < static_cast<int>(sel.slots.size()); ++v) {
        if (v >= g.num_vertices()) throw MalformedInput("selection names unknown vertex " + std::to_string(v));
        const int deg = g.degree(v);
        for (int s : sel.slots[v]) {
            if (s < 0 || s >= deg) throw MalformedInput("selection names unknown slot " + std::to_string(s));
            covered[g.rotation(v)[s]] = 1;
        }
        if (sel.slots[v].empty()) continue;
        auto arcs = min_arc_cover(deg, sel.slots[v], spec.m);
        if (arcs.count > spec.a) {
            std::string list;
            std::vector<int> sorted(sel.slots[v]);
            std::sort(sorted.begin(), sorted.end());
            for (int s : sorted) list += (list.empty() ? "" : ",") + std::to_string(s);
            rep.violations.push_back("vertex " + std::to_string(g.vertex_label(v)) + ": selected slots {" + list +
                                     "} are not consecutive enough: need " + std::to_string(arcs.count) +
                                     " arcs of width " + std::to_string(spec.m) + ", only " +
                                     std::to_string(spec.a) + " allowed (contiguity)");
        }
    }
    for (int e = 0; e < g.num_edges(); ++e)
        if (!covered[e]) rep.uncovered_edges.push_back(e);
    rep.valid = rep.violations.empty() && rep.uncovered_edges.empty();
    return rep;
}

SlotSelection to_selection(const RotationGraph& g, const AngleAssignment& asg) {
    SlotSelection sel;
    sel.slots.resize(g.num_vertices());
    for (const auto& a : asg.angles) {
        check_angle_ref(g, a);
        const int deg = g.degree(a.vertex);
        for (int k = 0; k < std::min(a.width, deg); ++k) sel.slots[a.vertex].push_back((a.start + k) % deg);
    }
    for (auto& s : sel.slots) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return sel;
}

}  // namespace angleset
