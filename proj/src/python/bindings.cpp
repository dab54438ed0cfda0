#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holey/bounds.hpp"
#include "holey/constructions.hpp"
#include "holey/enumeration.hpp"
#include "holey/error.hpp"
#include "holey/metrics.hpp"
#include "holey/polyomino.hpp"
#include "holey/random.hpp"
#include "holey/textio.hpp"
#include "holey/transform.hpp"

namespace py = pybind11;
using namespace holey;

namespace {

std::vector<Cell> to_cells(const std::vector<std::pair<int, int>>& xs) {
    std::vector<Cell> cells;
    cells.reserve(xs.size());
    for (auto [x, y] : xs) cells.push_back({x, y});
    return cells;
}

std::vector<std::pair<int, int>> from_cells(const std::vector<Cell>& cells) {
    std::vector<std::pair<int, int>> xs;
    xs.reserve(cells.size());
    for (Cell c : cells) xs.emplace_back(c.x, c.y);
    return xs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hole-maximizing polyominoes: core types, constructions, bounds, enumeration";

    py::register_exception<Error>(m, "HoleyError");

    py::class_<Polyomino>(m, "Polyomino")
        .def(py::init([](const std::vector<std::pair<int, int>>& cells) {
                 return Polyomino::from_cells(to_cells(cells));
             }),
             py::arg("cells"))
        .def_property_readonly("cells", [](const Polyomino& p) { return from_cells(p.cells()); })
        .def_property_readonly("n", &Polyomino::size)
        .def_property_readonly("width", &Polyomino::width)
        .def_property_readonly("height", &Polyomino::height)
        .def("__eq__", [](const Polyomino& a, const Polyomino& b) { return a == b; })
        .def("__len__", &Polyomino::size)
        .def("__repr__", [](const Polyomino& p) {
            return "<Polyomino n=" + std::to_string(p.size()) + ">";
        });

    py::class_<MetricsReport>(m, "MetricsReport")
        .def_readonly("n", &MetricsReport::n)
        .def_readonly("holes", &MetricsReport::holes)
        .def_property_readonly("hole_components",
                               [](const MetricsReport& m) {
                                   std::vector<std::vector<std::pair<int, int>>> out;
                                   for (const auto& comp : m.hole_components)
                                       out.push_back(from_cells(comp));
                                   return out;
                               })
        .def_readonly("p", &MetricsReport::p)
        .def_readonly("b", &MetricsReport::b)
        .def_readonly("p_h", &MetricsReport::p_h)
        .def_readonly("p_o", &MetricsReport::p_o)
        .def_property_readonly("bbox", [](const MetricsReport& m) {
            return std::make_pair(m.bbox_w, m.bbox_h);
        });

    m.def("metrics", &metrics, py::arg("p"));
    m.def(
        "holes",
        [](const Polyomino& p) {
            auto [count, comps] = holes(p);
            std::vector<std::vector<std::pair<int, int>>> out;
            for (const auto& comp : comps) out.push_back(from_cells(comp));
            return std::make_pair(count, out);
        },
        py::arg("p"));

    py::enum_<Symmetry>(m, "Symmetry")
        .value("IDENTITY", Symmetry::Identity)
        .value("ROT90", Symmetry::Rot90)
        .value("ROT180", Symmetry::Rot180)
        .value("ROT270", Symmetry::Rot270)
        .value("FLIP_X", Symmetry::FlipX)
        .value("FLIP_Y", Symmetry::FlipY)
        .value("FLIP_DIAG", Symmetry::FlipDiag)
        .value("FLIP_ANTI", Symmetry::FlipAnti);

    m.def("transform", &transform, py::arg("p"), py::arg("g"));
    m.def(
        "rotate_about_tile_center",
        [](const Polyomino& p, std::pair<int, int> pivot, int quarter_turns) {
            return rotate_about_tile_center(p, {pivot.first, pivot.second}, quarter_turns);
        },
        py::arg("p"), py::arg("pivot"), py::arg("quarter_turns"));

    m.def("serialize", &serialize, py::arg("p"));
    m.def("parse", &parse, py::arg("text"));
    m.def("render_ascii", &render_ascii, py::arg("p"));
    m.def("render_svg", &render_svg, py::arg("p"));
    m.def("random_polyomino", &random_polyomino, py::arg("n"), py::arg("seed"));

    py::enum_<Family>(m, "Family")
        .value("S", Family::S)
        .value("A", Family::A)
        .value("R", Family::R)
        .value("R_EXT", Family::R_ext)
        .value("R_PRIME", Family::R_prime);

    py::class_<ConstructionReport>(m, "ConstructionReport")
        .def_readonly("family", &ConstructionReport::family)
        .def_readonly("polyomino", &ConstructionReport::polyomino)
        .def_readonly("expected_tiles", &ConstructionReport::expected_tiles)
        .def_readonly("expected_holes", &ConstructionReport::expected_holes)
        .def_property_readonly("k", [](const ConstructionReport& r) { return r.params.k; })
        .def_property_readonly("l", [](const ConstructionReport& r) { return r.params.l; });

    m.def("build_s", &build_S, py::arg("k"));
    m.def("build_a", &build_A, py::arg("k"));
    m.def("build_r", &build_R, py::arg("k"));
    m.def("build_r_ext", &build_R_ext, py::arg("k"), py::arg("l"));
    m.def("build_r_prime", &build_R_prime, py::arg("n"));
    m.def("extension_capacity", &extension_capacity, py::arg("k"));
    m.def("mk", &mk, py::arg("k"));
    m.def("tk", &tk, py::arg("k"));

    m.def("p_min", &p_min, py::arg("n"));
    m.def("b_min", &b_min, py::arg("n"));
    m.def("p_max_upper", &p_max_upper, py::arg("n"));
    m.def("ub_from_lb", &ub_from_lb, py::arg("n"), py::arg("lb"));
    m.def("ub_fixed_point", &ub_fixed_point, py::arg("n"));
    m.def("nk", &nk, py::arg("k"));
    m.def("hk", &hk, py::arg("k"));
    m.def("g_of_hk", &g_of_hk, py::arg("k"));
    m.def("exact_formula", &exact_formula, py::arg("n"));
    m.def("exact_formula_exact", &exact_formula_exact, py::arg("n"));

    py::class_<Theorem1Values>(m, "Theorem1Values")
        .def_readonly("f_at_nk", &Theorem1Values::f_at_nk)
        .def_readonly("f_at_nk_minus_1", &Theorem1Values::f_at_nk_minus_1)
        .def_readonly("f_at_nk_minus_2", &Theorem1Values::f_at_nk_minus_2);
    m.def("theorem1_values", &theorem1_values, py::arg("k"));

    py::class_<Theorem2Check>(m, "Theorem2Check")
        .def_readonly("lower", &Theorem2Check::lower)
        .def_readonly("upper", &Theorem2Check::upper)
        .def_readonly("lb_construction", &Theorem2Check::lb_construction)
        .def_readonly("ub", &Theorem2Check::ub)
        .def_readonly("holds", &Theorem2Check::holds);
    m.def("theorem2_check", &theorem2_check, py::arg("n"), py::arg("c1"), py::arg("c2"));

    py::class_<CensusRow>(m, "CensusRow")
        .def_readonly("n", &CensusRow::n)
        .def_readonly("total", &CensusRow::total)
        .def_readonly("counts_by_holes", &CensusRow::counts_by_holes)
        .def_readonly("f", &CensusRow::f)
        .def_readonly("min_perimeter", &CensusRow::min_perimeter);

    py::class_<EnumerationTable>(m, "EnumerationTable")
        .def_readonly("max_n", &EnumerationTable::max_n)
        .def_readonly("per_n", &EnumerationTable::per_n);

    m.def("census", &census, py::arg("max_n"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def(
        "enumerate_fixed",
        [](int n, const py::object& visitor) {
            if (visitor.is_none()) return enumerate_fixed(n, [](const Polyomino&) {});
            return enumerate_fixed(n, [&](const Polyomino& p) { visitor(p); });
        },
        py::arg("n"), py::arg("visitor") = py::none());
    m.def(
        "g_table",
        [](int max_m, const EnumerationTable& table) {
            std::map<int, std::int64_t> out = g_table(max_m, table).per_m;
            return out;
        },
        py::arg("max_m"), py::arg("table"));

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("g", &SearchResult::g)
        .def_readonly("witness", &SearchResult::witness)
        .def_readonly("witness_holes", &SearchResult::witness_holes)
        .def_readonly("nodes_visited", &SearchResult::nodes_visited);
    m.def(
        "search_g",
        [](int m, std::uint64_t node_budget, bool prune) {
            return search_g(m, {.node_budget = node_budget, .prune = prune});
        },
        py::arg("m"), py::arg("node_budget") = 1'000'000'000ull, py::arg("prune") = true,
        py::call_guard<py::gil_scoped_release>());
}
