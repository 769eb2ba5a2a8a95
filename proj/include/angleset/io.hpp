#pragma once

#include <string>

#include "angleset/cover.hpp"
#include "angleset/graph.hpp"
#include "angleset/transform.hpp"

namespace angleset {

// InstanceFile:
//   # comment
//   v <id>
//   e <eid> <u> <v>
//   rot <v>: <eid> ...
//   x <xid> <e> <f> <bit>
//   seq <e>: <xid> ...
// Ids become labels; indices follow ascending id order. Throws MalformedInput.
TopologicalGraph parse_topological(const std::string& text);
// Same, but crossing records are rejected.
RotationGraph parse_instance(const std::string& text);

// Canonical form: v lines, e lines, rot lines, then x and seq lines, all by
// ascending id.
std::string serialize_instance(const RotationGraph& g);
std::string serialize_topological(const TopologicalGraph& tg);

// Rotation-free graph as an InstanceFile with ascending-neighbour rotations.
std::string serialize_plain(const PlainGraph& g);

// CoverFile: "angle <v> <start> <width>" by ascending (v, start); v is the
// vertex id (label) from the instance.
AngleAssignment parse_cover(const std::string& text, const RotationGraph& g);
std::string serialize_cover(const RotationGraph& g, const AngleAssignment& cover);

// Source graphs for reductions: either an InstanceFile (rotations ignored) or
// one "u v" pair per line with an optional "n <count>" line. Vertex ids of a
// bare edge list must be 0..n-1.
PlainGraph parse_source_graph(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace angleset
