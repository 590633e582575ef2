// Copyright 2026 The conflictfair Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "conflictfair/chain.h"
#include "conflictfair/checks.h"
#include "conflictfair/cli.h"
#include "conflictfair/graph_classes.h"
#include "conflictfair/hardness.h"
#include "conflictfair/io.h"
#include "conflictfair/oracle.h"
#include "conflictfair/swap.h"
#include "conflictfair/treecolor.h"

namespace py = pybind11;
namespace cf = conflictfair;

namespace {

using Lists = std::vector<std::vector<std::size_t>>;

cf::Allocation to_allocation(const cf::InstanceFile& file, const Lists& bundles) {
  return cf::Allocation::from_lists(file.instance.m(), bundles);
}

cf::EnumerationBudget budget(std::uint64_t max_assignments, unsigned workers) {
  cf::EnumerationBudget b;
  b.max_assignments = max_assignments;
  b.workers = workers;
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximal EF1 allocations under conflict graphs";

  py::register_exception<cf::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<cf::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cf::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<cf::InstanceFile>(m, "Instance")
      .def_static("from_json", &cf::parse_instance, py::arg("text"))
      .def("to_json", [](const cf::InstanceFile& f) { return cf::serialize_instance(f); })
      .def_property_readonly("agents", [](const cf::InstanceFile& f) { return f.instance.agents(); })
      .def_property_readonly("goods", [](const cf::InstanceFile& f) { return f.instance.m(); })
      .def_property_readonly("edges",
                             [](const cf::InstanceFile& f) { return f.instance.graph().edges(); })
      .def_property_readonly("mode",
                             [](const cf::InstanceFile& f) { return cf::to_string(f.instance.mode()); })
      .def_property_readonly("identical",
                             [](const cf::InstanceFile& f) { return f.instance.identical(); })
      .def("__repr__", [](const cf::InstanceFile& f) {
        std::ostringstream out;
        out << "Instance(agents=" << f.instance.agents() << ", goods=" << f.instance.m()
            << ", mode=" << cf::to_string(f.instance.mode()) << ")";
        return out.str();
      });

  m.def("is_maximal", [](const cf::InstanceFile& f, const Lists& bundles) {
    return cf::is_maximal(f.instance, to_allocation(f, bundles));
  });
  m.def("is_ef1", [](const cf::InstanceFile& f, const Lists& bundles) {
    return cf::is_ef1(f.instance, to_allocation(f, bundles));
  });
  m.def("is_wellformed", [](const cf::InstanceFile& f, const Lists& bundles) {
    return cf::validate_allocation(f.instance, to_allocation(f, bundles)).wellformed;
  });

  m.def("swap_ef1", [](const cf::InstanceFile& f) {
    const cf::SwapResult result = cf::swap_ef1(f.instance);
    return py::make_tuple(result.allocation.to_lists(), result.trace.iterations.size());
  });
  m.def("bipartite_ef1", [](const cf::InstanceFile& f) {
    return cf::bipartite_ef1(f.instance).allocation().to_lists();
  });
  m.def("interval_ef1", [](const cf::InstanceFile& f) {
    if (!f.intervals) throw cf::InvalidInput("instance has no intervals");
    return cf::interval_ef1(f.instance, *f.intervals).allocation.to_lists();
  });
  m.def("round_robin_small",
        [](const cf::InstanceFile& f) { return cf::round_robin_small(f.instance).to_lists(); });
  m.def("cut_and_choose",
        [](const cf::InstanceFile& f) { return cf::cut_and_choose(f.instance).to_lists(); });
  m.def("iteration_bound_additive", &cf::iteration_bound_additive, py::arg("m"));

  m.def(
      "exists_maximal_ef1",
      [](const cf::InstanceFile& f, std::uint64_t max_assignments, unsigned workers) {
        const cf::ExistenceResult r =
            cf::exists_maximal_ef1(f.instance, budget(max_assignments, workers));
        std::optional<Lists> witness;
        if (r.witness) witness = r.witness->to_lists();
        return py::make_tuple(r.exists, witness);
      },
      py::arg("instance"), py::arg("max_assignments") = cf::EnumerationBudget{}.max_assignments,
      py::arg("workers") = 1);
  m.def(
      "compute_gamma",
      [](const cf::InstanceFile& f, std::uint64_t max_assignments) {
        return cf::format_value(cf::compute_gamma(f.instance, budget(max_assignments, 1)));
      },
      py::arg("instance"), py::arg("max_assignments") = cf::EnumerationBudget{}.max_assignments);

  m.def("gen_counterexample",
        [](std::size_t n) { return cf::InstanceFile{cf::gen_counterexample(n), std::nullopt}; });
  m.def(
      "build_reduction",
      [](const cf::InstanceFile& base, std::size_t vertices, const std::vector<cf::Edge>& edges,
         std::size_t t) {
        cf::Reduction r = cf::build_reduction(
            base.instance, cf::ISInstance{cf::ConflictGraph(vertices, edges), t});
        return py::make_tuple(cf::InstanceFile{r.instance, std::nullopt},
                              cf::format_value(r.spec.gamma), cf::format_value(r.spec.lambda));
      },
      py::arg("base"), py::arg("vertices"), py::arg("edges"), py::arg("t"));

  m.def(
      "equitable_tree_coloring",
      [](std::size_t vertices, const std::vector<cf::Edge>& edges, std::size_t n,
         std::size_t root) {
        const cf::RootedTree tree = cf::RootedTree::from_edges(vertices, edges, root);
        const cf::PartialColoring c = cf::equitable_tree_coloring(tree, n);
        return py::make_tuple(c.color, c.class_sizes);
      },
      py::arg("vertices"), py::arg("edges"), py::arg("n"), py::arg("root") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cf::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
