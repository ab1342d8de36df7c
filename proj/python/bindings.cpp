#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dhlrw/decomposition.hpp"
#include "dhlrw/errors.hpp"
#include "dhlrw/generators.hpp"
#include "dhlrw/io.hpp"
#include "dhlrw/lrw.hpp"
#include "dhlrw/matroid.hpp"
#include "dhlrw/oracle.hpp"

namespace py = pybind11;
using namespace dhlrw;

namespace {

int checked_index(const Graph& g, Label l) {
  int v = g.index_of(l);
  if (v < 0) throw py::key_error("no vertex labelled " + std::to_string(l));
  return v;
}

std::vector<std::pair<Label, Label>> edge_labels(const Graph& g) {
  std::vector<std::pair<Label, Label>> out;
  for (auto [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
  return out;
}

BinaryMatroid matroid_from_rows(const std::vector<std::string>& rows) {
  std::string text = "matroid " + std::to_string(rows.size()) + " " +
                     std::to_string(rows.empty() ? 0 : rows[0].size()) + "\n";
  for (const auto& r : rows) text += r + "\n";
  return parse_matrix(text);
}

}  // namespace

PYBIND11_MODULE(_dhlrw, m) {
  m.doc() = "Linear rank-width of distance-hereditary graphs";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<NotDistanceHereditary>(m, "NotDistanceHereditary", base);
  py::register_exception<BranchWidthTooLarge>(m, "BranchWidthTooLarge", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](const std::vector<Label>& labels, const std::vector<std::pair<Label, Label>>& edges) {
             return graph_from_edges(labels, edges);
           }),
           py::arg("labels"), py::arg("edges"))
      .def("__len__", &Graph::size)
      .def_property_readonly("labels", &Graph::labels)
      .def("edges", &edge_labels)
      .def("add_edge",
           [](Graph& g, Label a, Label b) {
             int u = checked_index(g, a), v = checked_index(g, b);
             if (u == v) throw InvalidArgument("self-loop");
             g.add_edge(u, v);
           })
      .def("adjacent", [](const Graph& g, Label a, Label b) { return g.adjacent(checked_index(g, a), checked_index(g, b)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return same_labelled(a, b); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.size()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("format_graph", [](const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
  });
  m.def("is_distance_hereditary", &is_distance_hereditary);
  m.def("lrw", &compute_lrw, py::arg("graph"), "linear rank-width of a distance-hereditary graph");
  m.def(
      "layout",
      [](const Graph& g) {
        LayoutResult r = extract_layout(g);
        return py::make_tuple(r.k, layout_to_labels(g, r.order));
      },
      py::arg("graph"), "(width, vertex labels in layout order)");
  m.def(
      "layout_width", [](const Graph& g, const std::vector<Label>& order) { return layout_width(g, labels_to_layout(g, order)); },
      py::arg("graph"), py::arg("order"));
  m.def(
      "cut_rank",
      [](const Graph& g, const std::vector<Label>& x) {
        VertexSet vs;
        for (Label l : x) vs.push_back(checked_index(g, l));
        return cut_rank(g, vs);
      },
      py::arg("graph"), py::arg("subset"));
  m.def(
      "lrw_exact", [](const Graph& g) { return lrw_exact(g); }, py::arg("graph"),
      "exact value by dynamic programming over vertex subsets");
  m.def(
      "decompose",
      [](const Graph& g) {
        std::ostringstream os;
        write_decomposition(os, build_canonical(g));
        return os.str();
      },
      py::arg("graph"), "canonical split decomposition of a connected graph, as text");
  m.def(
      "recompose",
      [](const std::string& text) {
        std::istringstream in(text);
        return recompose(read_decomposition(in));
      },
      py::arg("text"));
  m.def(
      "gen_random_dh",
      [](int n, std::uint64_t seed, double pendant, double true_twin, double false_twin) {
        return gen_random_dh({n, seed, pendant, true_twin, false_twin});
      },
      py::arg("n"), py::arg("seed"), py::arg("pendant") = 0.3, py::arg("true_twin") = 0.35,
      py::arg("false_twin") = 0.35);
  m.def(
      "matroid_pathwidth",
      [](const std::vector<std::string>& rows) {
        BinaryMatroid mat = matroid_from_rows(rows);
        MatroidLayout r = pathwidth_bw2(oracle_of(mat));
        return py::make_tuple(r.width, r.order);
      },
      py::arg("rows"), "path-width of the column matroid of a 0/1 matrix given as row strings");
  m.def(
      "matroid_pathwidth_exact", [](const std::vector<std::string>& rows) { return matroid_pw_exact(matroid_from_rows(rows)); },
      py::arg("rows"));
}
