#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "trifree/degseq.hpp"
#include "trifree/graph.hpp"
#include "trifree/harness.hpp"
#include "trifree/search.hpp"

namespace py = pybind11;
using namespace trifree;

namespace {

using PyEdges = std::vector<std::pair<int, int>>;

PyEdges to_py(const LabeledGraph& g) {
  PyEdges out;
  for (const Edge& e : canonical_edge_list(g)) out.emplace_back(e.u, e.v);
  return out;
}

LabeledGraph from_py(int n, const PyEdges& edges) {
  LabeledGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SearchOptions make_options(Mode mode, bool feasibility,
                           bool residual_graphicality, bool mantel,
                           bool residue_rule, bool murphy) {
  SearchOptions o;
  o.mode = mode;
  o.feasibility_checks = feasibility;
  o.residual_graphicality = residual_graphicality;
  o.stage1 = {mantel, residue_rule, murphy};
  return o;
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["arrivals"] = s.arrivals;
  d["revisits"] = s.revisits;
  d["commits"] = s.commits;
  d["subsets_tried"] = s.subsets_tried;
  d["small_candidate_set"] = s.small_candidate_set;
  d["rejected_sum"] = s.rejected_sum;
  d["rejected_max"] = s.rejected_max;
  d["rejected_tight"] = s.rejected_tight;
  d["rejected_graphicality"] = s.rejected_graphicality;
  d["leaves"] = s.leaves;
  d["rejected_bipartite"] = s.rejected_bipartite;
  return d;
}

py::object big_to_py(const BigInt& v) {
  return py::int_(py::str(v.str()));
}

// Keyword arguments shared by count/enumerate/Enumerator.
#define TRIFREE_SEARCH_KWARGS                                              \
  py::arg("mode") = Mode::TriangleFree, py::arg("feasibility") = true,     \
      py::arg("residual_graphicality") = true, py::arg("mantel") = true,   \
      py::arg("residue") = true, py::arg("murphy") = true

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Labeled triangle-free and bipartite realizations of degree "
            "sequences";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<DegreeSequence>(m, "DegreeSequence")
      .def(py::init([](const std::vector<int>& degrees) {
             return DegreeSequence::from_degrees(degrees);
           }),
           py::arg("degrees"))
      .def(py::init([](const std::string& text) {
             return parse_sequence(text);
           }),
           py::arg("text"))
      .def_property_readonly("degrees", &DegreeSequence::degrees)
      .def_property_readonly("n", &DegreeSequence::size)
      .def_property_readonly("sum", &DegreeSequence::sum)
      .def_property_readonly("runs",
                             [](const DegreeSequence& d) {
                               std::vector<std::pair<int, int>> out;
                               for (auto r : d.runs()) {
                                 out.emplace_back(r.value, r.count);
                               }
                               return out;
                             })
      .def("__len__", &DegreeSequence::size)
      .def("__str__", &DegreeSequence::to_string)
      .def("__repr__",
           [](const DegreeSequence& d) {
             return "DegreeSequence('" + d.to_string() + "')";
           })
      .def(py::self == py::self);
  py::implicitly_convertible<py::str, DegreeSequence>();
  py::implicitly_convertible<py::list, DegreeSequence>();
  py::implicitly_convertible<py::tuple, DegreeSequence>();

  py::enum_<Mode>(m, "Mode")
      .value("ALL", Mode::All)
      .value("TRIANGLE_FREE", Mode::TriangleFree)
      .value("BIPARTITE", Mode::Bipartite);

  py::enum_<Stage1Outcome>(m, "Stage1Outcome")
      .value("PROCEED", Stage1Outcome::Proceed)
      .value("REJECT_MANTEL", Stage1Outcome::RejectMantel)
      .value("REJECT_RESIDUE", Stage1Outcome::RejectResidue)
      .value("REJECT_MURPHY", Stage1Outcome::RejectMurphy);

  py::class_<Stage1Verdict>(m, "Stage1Verdict")
      .def_readonly("outcome", &Stage1Verdict::outcome)
      .def_readonly("value", &Stage1Verdict::value)
      .def_readonly("threshold", &Stage1Verdict::threshold)
      .def_property_readonly("rejected", &Stage1Verdict::rejected)
      .def("__repr__", [](const Stage1Verdict& v) {
        std::ostringstream os;
        os << "Stage1Verdict(" << to_string(v.outcome) << ", value="
           << v.value << ", threshold=" << v.threshold << ")";
        return os.str();
      });

  m.def("parse_sequence", &parse_sequence, py::arg("text"));
  m.def(
      "is_graphical",
      [](const std::vector<int>& degrees) { return is_graphical(degrees); },
      py::arg("degrees"),
      "Erdos-Gallai test; zeros and any order are accepted.");
  m.def(
      "complement",
      [](const std::vector<int>& degrees) { return complement(degrees); },
      py::arg("degrees"));
  m.def(
      "residue",
      [](const std::vector<int>& degrees) { return residue(degrees); },
      py::arg("degrees"));
  m.def(
      "murphy_bound",
      [](const std::vector<int>& degrees) { return murphy_bound(degrees); },
      py::arg("degrees"));
  m.def(
      "stage1_triangle_free",
      [](const DegreeSequence& d, bool mantel, bool residue_rule,
         bool murphy) {
        return stage1_triangle_free(d, {mantel, residue_rule, murphy});
      },
      py::arg("d"), py::arg("mantel") = true, py::arg("residue") = true,
      py::arg("murphy") = true);

  m.def(
      "count",
      [](const DegreeSequence& d, Mode mode, bool feasibility, bool rg,
         bool mantel, bool residue_rule, bool murphy) {
        const auto options =
            make_options(mode, feasibility, rg, mantel, residue_rule, murphy);
        py::gil_scoped_release release;
        return count(d, options);
      },
      py::arg("d"), TRIFREE_SEARCH_KWARGS);

  m.def(
      "enumerate",
      [](const DegreeSequence& d, Mode mode, std::optional<std::uint64_t> limit,
         bool feasibility, bool rg, bool mantel, bool residue_rule,
         bool murphy) {
        std::vector<PyEdges> out;
        enumerate(
            d,
            make_options(mode, feasibility, rg, mantel, residue_rule, murphy),
            [&](const LabeledGraph& g) {
              out.push_back(to_py(g));
              return true;
            },
            limit);
        return out;
      },
      py::arg("d"), py::arg("mode") = Mode::TriangleFree,
      py::arg("limit") = py::none(), py::arg("feasibility") = true,
      py::arg("residual_graphicality") = true, py::arg("mantel") = true,
      py::arg("residue") = true, py::arg("murphy") = true,
      "Realizations as lists of 0-based (u, v) edges, in increasing order.");

  py::class_<Enumerator>(m, "Enumerator")
      .def(py::init([](const DegreeSequence& d, Mode mode, bool feasibility,
                       bool rg, bool mantel, bool residue_rule, bool murphy) {
             return std::make_unique<Enumerator>(
                 d, make_options(mode, feasibility, rg, mantel, residue_rule,
                                 murphy));
           }),
           py::arg("d"), TRIFREE_SEARCH_KWARGS)
      .def("__iter__", [](Enumerator& e) -> Enumerator& { return e; })
      .def("__next__",
           [](Enumerator& e) {
             if (!e.next()) throw py::stop_iteration();
             return to_py(e.graph());
           })
      .def_property_readonly("stage1", &Enumerator::stage1)
      .def_property_readonly(
          "stats", [](const Enumerator& e) { return stats_dict(e.stats()); });

  m.def(
      "is_triangle_free",
      [](int n, const PyEdges& edges) {
        return is_triangle_free(from_py(n, edges));
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "is_bipartite",
      [](int n, const PyEdges& edges) {
        return is_bipartite(from_py(n, edges));
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "to_graph6",
      [](int n, const PyEdges& edges) { return to_graph6(from_py(n, edges)); },
      py::arg("n"), py::arg("edges"));

  m.def(
      "labeled_multiplier",
      [](const DegreeSequence& d) { return big_to_py(labeled_multiplier(d)); },
      py::arg("d"));

  m.def(
      "sweep",
      [](int n, Mode mode, int oracle_max_order, int threads) {
        SweepOptions options;
        options.search.mode = mode;
        options.oracle_max_order = oracle_max_order;
        options.threads = threads;
        std::string dumped;
        {
          py::gil_scoped_release release;
          dumped = to_json(sweep(n, options)).dump();
        }
        return py::module_::import("json").attr("loads")(dumped);
      },
      py::arg("n"), py::arg("mode") = Mode::TriangleFree,
      py::arg("oracle_max_order") = 7, py::arg("threads") = 1,
      "Sweep report as a dict; big integers are decimal strings.");
}
