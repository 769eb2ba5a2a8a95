#include "angleset/io.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "angleset/errors.hpp"

namespace angleset {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw MalformedInput("line " + std::to_string(line) + ": " + msg);
}

int to_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < INT_MIN || v > INT_MAX) throw std::invalid_argument(tok);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + tok + "'");
    }
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// Splits "head: a b c" style lines; returns the ids after the colon.
std::pair<int, std::vector<int>> colon_list(const std::vector<std::string>& tok, int line) {
    if (tok.size() < 2) fail(line, "missing id");
    std::string head = tok[1];
    std::size_t rest = 2;
    if (!head.empty() && head.back() == ':') {
        head.pop_back();
    } else if (tok.size() > 2 && tok[2] == ":") {
        rest = 3;
    } else {
        fail(line, "expected ':' after id");
    }
    std::vector<int> ids;
    for (std::size_t i = rest; i < tok.size(); ++i) ids.push_back(to_int(tok[i], line));
    return {to_int(head, line), ids};
}

std::string strip_comment(const std::string& s) {
    auto p = s.find('#');
    return p == std::string::npos ? s : s.substr(0, p);
}

}  // namespace

TopologicalGraph parse_topological(const std::string& text) {
    std::map<int, int> vertex_line;
    std::map<int, std::array<int, 3>> edges;  // eid -> u, v, line
    std::map<int, std::pair<std::vector<int>, int>> rots;
    std::map<int, std::array<int, 4>> xs;     // xid -> e, f, bit, line
    std::map<int, std::pair<std::vector<int>, int>> seqs;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto tok = tokens(strip_comment(raw));
        if (tok.empty()) continue;
        const auto& kw = tok[0];
        if (kw == "v") {
            if (tok.size() != 2) fail(line, "expected 'v <id>'");
            vertex_line.emplace(to_int(tok[1], line), line);
        } else if (kw == "e") {
            if (tok.size() != 4) fail(line, "expected 'e <eid> <u> <v>'");
            int id = to_int(tok[1], line);
            if (!edges.emplace(id, std::array{to_int(tok[2], line), to_int(tok[3], line), line}).second)
                fail(line, "duplicate edge id " + tok[1]);
        } else if (kw == "rot") {
            auto [v, ids] = colon_list(tok, line);
            if (!rots.emplace(v, std::pair{ids, line}).second) fail(line, "duplicate rotation for vertex " + std::to_string(v));
        } else if (kw == "x") {
            if (tok.size() != 5) fail(line, "expected 'x <xid> <e> <f> <bit>'");
            int id = to_int(tok[1], line);
            if (!xs.emplace(id, std::array{to_int(tok[2], line), to_int(tok[3], line), to_int(tok[4], line), line}).second)
                fail(line, "duplicate crossing id " + tok[1]);
        } else if (kw == "seq") {
            auto [e, ids] = colon_list(tok, line);
            if (!seqs.emplace(e, std::pair{ids, line}).second) fail(line, "duplicate sequence for edge " + std::to_string(e));
        } else {
            fail(line, "unknown record '" + kw + "'");
        }
    }

    for (const auto& [id, rec] : edges) {
        vertex_line.emplace(rec[0], rec[2]);
        vertex_line.emplace(rec[1], rec[2]);
    }
    for (const auto& [v, rec] : rots) vertex_line.emplace(v, rec.second);

    TopologicalGraph tg;
    auto& g = tg.base;
    std::map<int, int> vindex, eindex, xindex;
    for (const auto& [id, l] : vertex_line) vindex[id] = g.add_vertex(id);
    for (const auto& [id, rec] : edges) eindex[id] = g.add_edge(vindex.at(rec[0]), vindex.at(rec[1]), id);
    for (const auto& [v, rec] : rots) {
        std::vector<int> r;
        for (int e : rec.first) {
            auto it = eindex.find(e);
            if (it == eindex.end()) fail(rec.second, "rotation names unknown edge " + std::to_string(e));
            r.push_back(it->second);
        }
        g.set_rotation(vindex.at(v), std::move(r));
    }
    auto bad = validate_graph(g);
    if (!bad.empty()) throw MalformedInput("invalid rotation system: " + bad.front());

    for (const auto& [id, rec] : xs) {
        auto fe = eindex.find(rec[0]), ff = eindex.find(rec[1]);
        if (fe == eindex.end() || ff == eindex.end()) fail(rec[3], "crossing names an unknown edge");
        xindex[id] = tg.num_crossings();
        tg.crossings.push_back({id, fe->second, ff->second, rec[2]});
    }
    tg.sequence.assign(g.num_edges(), {});
    for (const auto& [e, rec] : seqs) {
        auto it = eindex.find(e);
        if (it == eindex.end()) fail(rec.second, "sequence for unknown edge " + std::to_string(e));
        for (int x : rec.first) {
            auto ix = xindex.find(x);
            if (ix == xindex.end()) fail(rec.second, "sequence names unknown crossing " + std::to_string(x));
            tg.sequence[it->second].push_back(ix->second);
        }
    }
    if (!tg.crossings.empty()) {
        auto tbad = validate_topological(tg);
        if (!tbad.empty()) throw MalformedInput("invalid crossing data: " + tbad.front());
    }
    return tg;
}

RotationGraph parse_instance(const std::string& text) {
    auto tg = parse_topological(text);
    if (!tg.crossings.empty()) throw MalformedInput("instance has crossing records; use planarize first");
    return std::move(tg.base);
}

namespace {

template <class Labels>
std::vector<int> by_label(int count, Labels label) {
    std::vector<int> order(count);
    for (int i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return label(a) < label(b); });
    return order;
}

void write_base(std::ostringstream& out, const RotationGraph& g) {
    auto vs = by_label(g.num_vertices(), [&](int v) { return g.vertex_label(v); });
    auto es = by_label(g.num_edges(), [&](int e) { return g.edge_label(e); });
    for (int v : vs) out << "v " << g.vertex_label(v) << '\n';
    for (int e : es) out << "e " << g.edge_label(e) << ' ' << g.vertex_label(g.edge(e).u) << ' ' << g.vertex_label(g.edge(e).v) << '\n';
    for (int v : vs) {
        out << "rot " << g.vertex_label(v) << ':';
        for (int e : g.rotation(v)) out << ' ' << g.edge_label(e);
        out << '\n';
    }
}

}  // namespace

std::string serialize_instance(const RotationGraph& g) {
    std::ostringstream out;
    write_base(out, g);
    return out.str();
}

std::string serialize_topological(const TopologicalGraph& tg) {
    std::ostringstream out;
    const auto& g = tg.base;
    write_base(out, g);
    auto xs = by_label(tg.num_crossings(), [&](int x) { return tg.crossings[x].label; });
    for (int x : xs) {
        const auto& c = tg.crossings[x];
        out << "x " << c.label << ' ' << g.edge_label(c.e) << ' ' << g.edge_label(c.f) << ' ' << c.bit << '\n';
    }
    auto es = by_label(g.num_edges(), [&](int e) { return g.edge_label(e); });
    for (int e : es) {
        if (e >= static_cast<int>(tg.sequence.size()) || tg.sequence[e].empty()) continue;
        out << "seq " << g.edge_label(e) << ':';
        for (int x : tg.sequence[e]) out << ' ' << tg.crossings[x].label;
        out << '\n';
    }
    return out.str();
}

std::string serialize_plain(const PlainGraph& g) { return serialize_instance(with_sorted_rotation(g)); }

AngleAssignment parse_cover(const std::string& text, const RotationGraph& g) {
    AngleAssignment a;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto tok = tokens(strip_comment(raw));
        if (tok.empty()) continue;
        if (tok[0] != "angle" || tok.size() != 4) fail(line, "expected 'angle <v> <start> <width>'");
        int label = to_int(tok[1], line);
        int v = g.find_vertex(label);
        if (v < 0) fail(line, "unknown vertex " + tok[1]);
        a.add({v, to_int(tok[2], line), to_int(tok[3], line)});
    }
    return a;
}

std::string serialize_cover(const RotationGraph& g, const AngleAssignment& cover) {
    auto angles = cover.angles;
    std::sort(angles.begin(), angles.end(), [&](const Angle& x, const Angle& y) {
        return std::tuple(g.vertex_label(x.vertex), x.start, x.width) < std::tuple(g.vertex_label(y.vertex), y.start, y.width);
    });
    std::ostringstream out;
    for (const auto& a : angles) out << "angle " << g.vertex_label(a.vertex) << ' ' << a.start << ' ' << a.width << '\n';
    return out.str();
}

PlainGraph parse_source_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    bool instance = false;
    while (std::getline(in, raw)) {
        auto tok = tokens(strip_comment(raw));
        if (tok.empty()) continue;
        instance = tok[0] == "v" || tok[0] == "e" || tok[0] == "rot";
        break;
    }
    if (instance) {
        auto g = parse_instance(text);
        return underlying(g);
    }
    PlainGraph p;
    int declared = -1;
    in.clear();
    in.str(text);
    int line = 0;
    int max_id = -1;
    while (std::getline(in, raw)) {
        ++line;
        auto tok = tokens(strip_comment(raw));
        if (tok.empty()) continue;
        if (tok[0] == "n") {
            if (tok.size() != 2) fail(line, "expected 'n <count>'");
            declared = to_int(tok[1], line);
            continue;
        }
        if (tok.size() != 2) fail(line, "expected '<u> <v>'");
        int u = to_int(tok[0], line), v = to_int(tok[1], line);
        if (u < 0 || v < 0) fail(line, "vertex ids must be non-negative");
        max_id = std::max({max_id, u, v});
        p.edges.push_back({u, v});
    }
    p.num_vertices = declared >= 0 ? declared : max_id + 1;
    if (max_id >= p.num_vertices) throw MalformedInput("edge names a vertex beyond the declared count");
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace angleset
