#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "angleset/allocate.hpp"
#include "angleset/cli.hpp"
#include "angleset/density.hpp"
#include "angleset/errors.hpp"
#include "angleset/instances.hpp"
#include "angleset/io.hpp"
#include "angleset/reduce.hpp"
#include "angleset/solve.hpp"
#include "angleset/thickness.hpp"
#include "angleset/transform.hpp"

namespace py = pybind11;
using namespace angleset;

namespace {

RotationGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::optional<std::vector<std::vector<int>>>& rotations) {
    if (!rotations) {
        PlainGraph p;
        p.num_vertices = n;
        for (auto [u, v] : edges) p.add_edge(u, v);
        return with_sorted_rotation(p);
    }
    RotationGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    if (static_cast<int>(rotations->size()) != n) throw MalformedInput("need one rotation per vertex");
    for (int v = 0; v < n; ++v) g.set_rotation(v, (*rotations)[v]);
    auto bad = validate_graph(g);
    if (!bad.empty()) throw MalformedInput(bad.front());
    return g;
}

std::vector<std::tuple<int, int, int>> angles_of(const AngleAssignment& a) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& x : a.angles) out.emplace_back(x.vertex, x.start, x.width);
    return out;
}

AngleAssignment to_assignment(const std::vector<std::tuple<int, int, int>>& angles) {
    AngleAssignment a;
    for (auto [v, s, w] : angles) a.add({v, s, w});
    return a;
}

py::dict certificate(const Certificate& c) {
    py::dict d;
    d["verdict"] = to_string(c.verdict);
    d["nodes"] = c.nodes;
    if (c.assignment)
        d["angles"] = angles_of(*c.assignment);
    else
        d["angles"] = py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Angle covers of rotation-system graphs";

    py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
    py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);
    py::register_exception<InvalidWitness>(m, "InvalidWitness", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_OverflowError);

    py::class_<RotationGraph>(m, "RotationGraph")
        .def(py::init(&make_graph), py::arg("num_vertices"), py::arg("edges"), py::arg("rotations") = py::none(),
             "Edges as (u, v) pairs; rotations list edge indices per vertex (ascending neighbour order if omitted).")
        .def_property_readonly("num_vertices", &RotationGraph::num_vertices)
        .def_property_readonly("num_edges", &RotationGraph::num_edges)
        .def_property_readonly("max_degree", &RotationGraph::max_degree)
        .def("degree", &RotationGraph::degree)
        .def("rotation", [](const RotationGraph& g, int v) { return g.rotation(v); })
        .def("edges", [](const RotationGraph& g) {
            std::vector<std::pair<int, int>> out;
            for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
            return out;
        })
        .def("genus", [](const RotationGraph& g) { return trace_faces(g).max_genus(); })
        .def("is_plane", [](const RotationGraph& g) { return trace_faces(g).is_plane; })
        .def("to_text", [](const RotationGraph& g) { return serialize_instance(g); })
        .def_static("from_text", [](const std::string& s) { return parse_instance(s); })
        .def("__repr__", [](const RotationGraph& g) {
            return "<RotationGraph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("validate_graph", &validate_graph);
    m.def("instance_names", &instance_names);
    m.def("get_instance", [](const std::string& name) {
        auto in = get_instance(name);
        py::dict d;
        d["name"] = in.name;
        d["graph"] = in.graph;
        d["expected"] = in.expected ? py::object(py::str(to_string(*in.expected))) : py::object(py::none());
        d["vertex_names"] = in.vertex_names;
        return d;
    });

    m.def("check_cover", [](const RotationGraph& g, const std::vector<std::tuple<int, int, int>>& angles, int a, int width) {
        auto rep = check_cover(g, to_assignment(angles), {a, width});
        py::dict d;
        d["valid"] = rep.valid;
        d["uncovered_edges"] = rep.uncovered_edges;
        d["violations"] = rep.violations;
        return d;
    }, py::arg("graph"), py::arg("angles"), py::arg("a") = 1, py::arg("width") = 2);

    m.def("oracle_solve", [](const RotationGraph& g, int a, int width, long long budget) {
        return certificate(oracle_solve(g, {a, width}, budget));
    }, py::arg("graph"), py::arg("a") = 1, py::arg("width") = 2, py::arg("budget") = default_budget);
    m.def("solve_deg4", [](const RotationGraph& g) { return certificate(solve_deg4(g)); });
    m.def("solve_no_deg3", [](const RotationGraph& g) { return certificate(solve_no_deg3(g)); });
    m.def("solve_sextet", [](const RotationGraph& g, int delta) { return certificate(solve_sextet(g, delta)); });
    m.def("solve_outerplane", [](const RotationGraph& g) { return certificate(solve_outerplane(g)); });
    m.def("sextet_angle_bound", &sextet_angle_bound);

    m.def("check_low_density", [](const RotationGraph& g) {
        auto rep = check_low_density(g);
        return py::make_tuple(rep.low_density, rep.witness);
    });
    m.def("optimal_allocation", [](const RotationGraph& g) {
        auto r = optimal_allocation(g);
        return py::make_tuple(r.result.size, angles_of(r.result.allocation));
    });
    m.def("decompose", [](const RotationGraph& g, const std::vector<std::tuple<int, int, int>>& angles) {
        auto d = blowup_decomposition(g, to_assignment(angles));
        auto rep = verify_decomposition(g, d);
        return py::make_tuple(d.h, d.h_tilde, rep.valid);
    });

    m.def("reduce_3col", [](int n, const std::vector<std::pair<int, int>>& edges) {
        PlainGraph p;
        p.num_vertices = n;
        for (auto [u, v] : edges) p.add_edge(u, v);
        return reduce_3col(p).graph;
    });

    m.def("gen_random_bounded_degree", &gen_random_bounded_degree);
    m.def("gen_regular", &gen_regular);
    m.def("gen_random_laman", &gen_random_laman);
    m.def("gen_random_outerplane", &gen_random_outerplane);
    m.def("gen_random_plane", &gen_random_plane);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
