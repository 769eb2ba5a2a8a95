#include "angleset/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "angleset/allocate.hpp"
#include "angleset/density.hpp"
#include "angleset/errors.hpp"
#include "angleset/instances.hpp"
#include "angleset/io.hpp"
#include "angleset/reduce.hpp"
#include "angleset/solve.hpp"
#include "angleset/thickness.hpp"
#include "angleset/transform.hpp"

namespace angleset::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long budget_default() {
    if (const char* env = std::getenv("ANGLESET_BUDGET")) {
        try {
            long long b = std::stoll(env);
            if (b > 0) return b;
        } catch (const std::exception&) {
        }
        throw UsageError("ANGLESET_BUDGET must be a positive integer");
    }
    return default_budget;
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::yes: return ok;
        case Verdict::no: return negative;
        default: return indeterminate;
    }
}

CoverSpec make_spec(int angles, int width) {
    if (angles < 1 || width < 1) throw UsageError("--angles and --width must be positive");
    return {angles, width};
}

struct SolveOutcome {
    Certificate cert;
    CoverSpec spec;
    std::string algo;
};

SolveOutcome solve_with(const RotationGraph& g, std::string algo, int angles, int width, bool angles_given, long long budget) {
    CoverSpec spec = make_spec(angles, width);
    const bool basic = spec.a == 1 && spec.m == 2;
    if (algo == "auto") {
        bool has3 = false;
        for (int v = 0; v < g.num_vertices(); ++v) has3 |= g.degree(v) == 3;
        if (!basic)
            algo = "oracle";
        else if (g.max_degree() <= 4)
            algo = "deg4";
        else if (!has3)
            algo = "2sat";
        else
            algo = "oracle";
    }
    auto need_basic = [&] {
        if (!basic) throw UsageError("--algo " + algo + " solves only the (1,2) problem");
    };
    SolveOutcome r{{}, spec, algo};
    if (algo == "oracle") {
        r.cert = oracle_solve(g, spec, budget);
    } else if (algo == "deg4") {
        need_basic();
        r.cert = solve_deg4(g);
    } else if (algo == "2sat") {
        need_basic();
        r.cert = solve_no_deg3(g);
    } else if (algo == "outerplane") {
        need_basic();
        r.cert = solve_outerplane(g, budget);
    } else if (algo == "sextet") {
        int delta = std::max(2, g.max_degree() + g.max_degree() % 2);
        int bound = sextet_angle_bound(delta);
        if (width != 2) throw UsageError("--algo sextet uses width 2");
        if (angles_given && angles < bound)
            throw UsageError("--algo sextet needs --angles >= " + std::to_string(bound));
        r.spec = {angles_given ? angles : bound, 2};
        r.cert = solve_sextet(g, delta);
    } else {
        throw UsageError("unknown algorithm '" + algo + "'");
    }
    return r;
}

bool verify_cover(const RotationGraph& g, const AngleAssignment& a, const CoverSpec& spec, std::ostream& err) {
    auto rep = check_cover(g, a, spec);
    if (!rep.valid) {
        err << "certificate failed verification";
        if (!rep.violations.empty()) err << ": " << rep.violations.front();
        err << '\n';
    }
    return rep.valid;
}

std::string label_list(const RotationGraph& g, const std::vector<int>& vs) {
    std::vector<int> labels;
    for (int v : vs) labels.push_back(g.vertex_label(v));
    std::sort(labels.begin(), labels.end());
    std::string s;
    for (int l : labels) s += ' ' + std::to_string(l);
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Angle covers of rotation-system graphs", "angleset"};
    app.require_subcommand(1);

    std::string file, file2, algo = "auto", name, kind, witness;
    int angles = 1, width = 2, a = 2, m = 3, n = 10, degree = 4, crossings = 3;
    long long budget = 0;
    std::uint64_t seed = 1;
    bool verify = false;

    auto* solve = app.add_subcommand("solve", "Decide whether an angle cover exists and print one");
    solve->add_option("--algo", algo, "auto|oracle|deg4|2sat|sextet|outerplane")
        ->check(CLI::IsMember({"auto", "oracle", "deg4", "2sat", "sextet", "outerplane"}));
    auto* angles_opt = solve->add_option("--angles", angles, "Angles per vertex");
    solve->add_option("--width", width, "Edges per angle");
    solve->add_option("--budget", budget, "Oracle node budget");
    solve->add_flag("--verify", verify, "Re-check the emitted cover");
    solve->add_option("FILE", file)->required();

    auto* check = app.add_subcommand("check", "Validate a cover file");
    check->add_option("FILE", file)->required();
    check->add_option("COVERFILE", file2)->required();
    check->add_option("--angles", angles);
    check->add_option("--width", width);

    auto* density = app.add_subcommand("density", "Test whether every k-vertex subgraph has at most 2k edges");
    density->add_option("FILE", file)->required();

    auto* allocate = app.add_subcommand("allocate", "Minimum angle allocation");
    allocate->add_option("FILE", file)->required();
    allocate->add_flag("--verify", verify);

    auto* planar = app.add_subcommand("planarize", "Replace crossings by degree-4 vertices");
    planar->add_option("FILE", file)->required();

    auto* medial = app.add_subcommand("medial", "Medial graph");
    medial->add_option("FILE", file)->required();

    auto* blowup = app.add_subcommand("blowup", "2-blowup");
    blowup->add_option("FILE", file)->required();

    auto* decompose = app.add_subcommand("decompose", "Split the 2-blowup of a plane graph into two isomorphic plane layers");
    decompose->add_option("FILE", file)->required();
    decompose->add_option("COVERFILE", file2);
    decompose->add_option("--budget", budget);
    decompose->add_flag("--verify", verify);

    auto* reduce = app.add_subcommand("reduce", "Build a hardness reduction instance from a source graph");
    reduce->add_option("KIND", kind, "3col|multi|2angle8|wide|witness")
        ->required()
        ->check(CLI::IsMember({"3col", "multi", "2angle8", "wide", "witness"}));
    reduce->add_option("FILE", file)->required();
    reduce->add_option("--angles,-a", a, "a for multi and witness");
    reduce->add_option("--width,-m", m, "m for wide");
    reduce->add_option("--witness", witness, "Witness instance for KIND witness");
    reduce->add_option("--budget", budget);

    auto* instance = app.add_subcommand("instance", "Print a built-in instance");
    instance->add_option("NAME", name)->required();

    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("KIND", kind, "deg4|regular|laman|outerplane|plane|topological")
        ->required()
        ->check(CLI::IsMember({"deg4", "regular", "laman", "outerplane", "plane", "topological"}));
    gen->add_option("--n", n, "Vertex count");
    gen->add_option("--degree", degree, "Degree (regular) or degree cap (deg4, plane)");
    gen->add_option("--crossings", crossings, "Crossing cap (topological)");
    gen->add_option("--seed", seed)->required();

    std::vector<const char*> argv{"angleset"};
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage;
    }

    try {
        if (budget <= 0) budget = budget_default();

        if (solve->parsed()) {
            auto g = parse_instance(read_file(file));
            auto r = solve_with(g, algo, angles, width, angles_opt->count() > 0, budget);
            out << "# algo " << r.algo << '\n' << "# verdict " << to_string(r.cert.verdict) << '\n';
            if (r.cert.yes()) {
                if (verify && !verify_cover(g, *r.cert.assignment, r.spec, err)) return negative;
                out << serialize_cover(g, *r.cert.assignment);
            }
            return exit_for(r.cert.verdict);
        }
        if (check->parsed()) {
            auto g = parse_instance(read_file(file));
            auto cover = parse_cover(read_file(file2), g);
            auto rep = check_cover(g, cover, make_spec(angles, width));
            out << (rep.valid ? "valid" : "invalid") << '\n';
            for (const auto& v : rep.violations) out << "violation: " << v << '\n';
            for (int e : rep.uncovered_edges) out << "uncovered " << g.edge_label(e) << '\n';
            return rep.valid ? ok : negative;
        }
        if (density->parsed()) {
            auto g = parse_instance(read_file(file));
            auto rep = check_low_density(g);
            out << "low-density " << (rep.low_density ? "yes" : "no") << '\n';
            if (!rep.low_density) {
                out << "witness" << label_list(g, rep.witness) << '\n';
                out << "witness-edges " << induced_edge_count(g, rep.witness) << " > " << 2 * rep.witness.size() << '\n';
            }
            return rep.low_density ? ok : negative;
        }
        if (allocate->parsed()) {
            auto g = parse_instance(read_file(file));
            auto opt = optimal_allocation(g);
            if (verify && !verify_cover(g, opt.result.allocation, CoverSpec::allocation(), err)) return negative;
            out << "# size " << opt.result.size << '\n' << serialize_cover(g, opt.result.allocation);
            return ok;
        }
        if (planar->parsed()) {
            auto tg = parse_topological(read_file(file));
            out << serialize_instance(planarize(tg));
            return ok;
        }
        if (medial->parsed()) {
            auto g = parse_instance(read_file(file));
            out << serialize_plain(medial_graph(g).graph);
            return ok;
        }
        if (blowup->parsed()) {
            auto g = parse_instance(read_file(file));
            out << serialize_plain(blowup2(g));
            return ok;
        }
        if (decompose->parsed()) {
            auto g = parse_instance(read_file(file));
            AngleAssignment cover;
            if (!file2.empty()) {
                cover = parse_cover(read_file(file2), g);
            } else {
                auto r = solve_with(g, "auto", 1, 2, false, budget);
                if (!r.cert.yes()) {
                    err << "graph has no angle cover (" << to_string(r.cert.verdict) << ")\n";
                    return exit_for(r.cert.verdict);
                }
                cover = *r.cert.assignment;
            }
            auto d = blowup_decomposition(g, cover);
            auto rep = verify_decomposition(g, d);
            out << "# H\n" << serialize_instance(d.h) << "# H_tilde\n" << serialize_instance(d.h_tilde);
            for (const auto& v : rep.violations) err << "violation: " << v << '\n';
            return rep.valid ? ok : negative;
        }
        if (reduce->parsed()) {
            auto src_text = read_file(file);
            if (kind == "witness") {
                if (witness.empty()) throw UsageError("reduce witness needs --witness FILE");
                auto g = parse_instance(src_text);
                auto h = parse_instance(read_file(witness));
                auto w = reduce_witness(g, h, a, budget);
                out << "# copies " << w.copies << '\n' << serialize_instance(w.graph);
                return ok;
            }
            auto g = parse_source_graph(src_text);
            Reduction r;
            if (kind == "3col")
                r = reduce_3col(g);
            else if (kind == "multi")
                r = reduce_multi(g, a);
            else if (kind == "2angle8")
                r = reduce_2angle_deg8(g);
            else
                r = reduce_wide(g, m);
            out << serialize_instance(r.graph);
            return ok;
        }
        if (instance->parsed()) {
            auto in = get_instance(name);
            out << "# " << in.name << '\n';
            if (in.expected) out << "# expected " << to_string(*in.expected) << '\n';
            out << serialize_instance(in.graph);
            return ok;
        }
        if (gen->parsed()) {
            if (kind == "topological") {
                out << serialize_topological(gen_random_topological(n, crossings, seed));
                return ok;
            }
            RotationGraph g;
            if (kind == "deg4")
                g = gen_random_bounded_degree(n, std::min(degree, 4), seed);
            else if (kind == "regular")
                g = gen_regular(n, degree, seed);
            else if (kind == "laman")
                g = gen_random_laman(n, seed);
            else if (kind == "outerplane")
                g = gen_random_outerplane(n, seed);
            else
                g = gen_random_plane(n, degree, seed);
            out << serialize_instance(g);
            return ok;
        }
    } catch (const InvalidWitness& e) {
        err << "invalid witness: " << e.what() << '\n';
        return negative;
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace angleset::cli
