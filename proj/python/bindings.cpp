#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "curvechi/burling.hpp"
#include "curvechi/cli.hpp"
#include "curvechi/errors.hpp"
#include "curvechi/families.hpp"
#include "curvechi/graph.hpp"
#include "curvechi/io.hpp"
#include "curvechi/reductions.hpp"

namespace py = pybind11;
using namespace curvechi;

namespace {

// Families and results cross the boundary as JSON text; the Python package
// converts them to and from dicts.
CurveFamily family_of(const std::string& text) { return family_from_json(parse_json(text)).family; }

IntersectionGraph graph_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    IntersectionGraph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n || u == v) throw FormatError("edge endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

SolverBudget budget_of(std::optional<std::uint64_t> ms) {
    SolverBudget b = SolverBudget::from_env();
    if (ms) b.time_limit = std::chrono::milliseconds(*ms);
    return b;
}

}  // namespace

PYBIND11_MODULE(_curvechi, m) {
    static py::exception<Error> error(m, "CurvechiError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(std::string(e.kind()) + ": " + e.what());
            exc.attr("kind") = e.kind();
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def("generate_burling", [](int k, bool allow_large) { return dump_json(burling_to_json(generate_burling(k, allow_large))); },
          py::arg("k"), py::arg("allow_large") = false);
    m.def("burling_sizes", [](int k) { return std::make_pair(burling_member_count(k), burling_probe_count(k)); });
    m.def("verify_burling", [](const std::string& text) {
        const auto inst = burling_from_file(family_from_json(parse_json(text)));
        return dump_json(trace_json(verify_properties(inst)));
    });
    m.def("validate_family", [](const std::string& text) {
        const auto cert = validate_family(family_of(text));
        py::dict d;
        d["kind"] = to_string(cert.kind);
        d["t"] = cert.t;
        d["members"] = cert.members;
        d["lr_verified"] = cert.lr_verified;
        d["incidences"] = cert.incidences;
        return d;
    });
    m.def("validate_lr", [](const std::string& text) { return dump_json(trace_json(validate_lr(family_of(text)))); });
    m.def("intersection_graph", [](const std::string& text) {
        const auto g = build_graph(family_of(text));
        return std::make_pair(g.size(), g.edges());
    });
    m.def("clique_number", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                              std::optional<std::uint64_t> ms) { return clique_number(graph_of(n, edges), budget_of(ms)); },
          py::arg("n"), py::arg("edges"), py::arg("time_limit_ms") = py::none());
    m.def("chromatic_number",
          [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::optional<std::uint64_t> ms) {
              const auto r = chromatic_number(graph_of(n, edges), std::nullopt, budget_of(ms));
              return std::make_pair(r.chi, r.witness.colors);
          },
          py::arg("n"), py::arg("edges"), py::arg("time_limit_ms") = py::none());
    m.def("is_proper", [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          const std::vector<int>& colors) {
        Coloring c{colors, 0};
        return colors.size() == n && is_proper(graph_of(n, edges), c);
    });
    m.def("xi", [](const std::string& text) { return xi_of_family(family_of(text)).xi; });
    m.def("color_cross_component", [](const std::string& text) {
        const auto split = component_split(family_of(text));
        return dump_json(trace_json(split, color_cross_component(split)));
    });
    m.def("rewire", [](const std::string& text) { return dump_json(trace_json(rewire_semicircles(family_of(text)))); });
    m.def("split_2t", [](const std::string& text) { return dump_json(trace_json(split_2t(family_of(text)))); });
    m.def("color_2t", [](const std::string& text) {
        const auto f = family_of(text);
        return dump_json(trace_json(f, color_2t_family(f)));
    });
    m.def("mcguinness",
          [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
             const std::vector<std::size_t>& order, int alpha, int beta) {
              return dump_json(trace_json(mcguinness_subgraph(graph_of(n, edges), order, alpha, beta)));
          },
          py::arg("n"), py::arg("edges"), py::arg("order"), py::arg("alpha"), py::arg("beta"));
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
