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

#include "conflictfair/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "conflictfair/chain.h"
#include "conflictfair/checks.h"
#include "conflictfair/graph_classes.h"
#include "conflictfair/hardness.h"
#include "conflictfair/io.h"
#include "conflictfair/oracle.h"
#include "conflictfair/swap.h"
#include "conflictfair/treecolor.h"

namespace conflictfair {
namespace {

// Carries an exit code out of a subcommand.
struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kExitInvalidParams, "cannot write " + path};
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string lists_text(const std::vector<std::vector<std::size_t>>& lists) {
  std::string out = "[";
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (i > 0) out += ",";
    out += "[";
    for (std::size_t k = 0; k < lists[i].size(); ++k) {
      if (k > 0) out += ",";
      out += std::to_string(lists[i][k]);
    }
    out += "]";
  }
  return out + "]";
}

std::string sizes_text(const std::vector<std::size_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path)); }

EnumerationBudget budget_from(std::uint64_t max_assignments, std::uint64_t time_limit_ms,
                              unsigned workers) {
  EnumerationBudget budget;
  budget.max_assignments = max_assignments;
  budget.time_limit = std::chrono::milliseconds(time_limit_ms);
  budget.workers = std::max(1u, workers);
  return budget;
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  std::string instance;
  std::string algorithm = "auto";
  std::string out_path;
  std::string dot_path;
};

struct NoEf1Step {};

std::string pick_algorithm(const InstanceFile& file) {
  const Instance& instance = file.instance;
  const std::size_t n = instance.agents();
  if (instance.m() <= n + 1) return "roundrobin";
  if (n == 1) return "single";
  if (n != 2) {
    throw Failure{kExitNoAlgorithm, "no algorithm applies to n = " + std::to_string(n) +
                                        " agents with m = " + std::to_string(instance.m()) +
                                        " > n + 1 goods"};
  }
  if (file.intervals) return "interval";
  if (instance.graph().two_coloring()) return "bipartite";
  return "swap";
}

IdenticalSolver identical_solver(const std::string& algorithm, const InstanceFile& file) {
  if (algorithm == "swap") {
    return [](const Instance& identical) { return swap_ef1(identical).allocation; };
  }
  if (algorithm == "bipartite") {
    return [](const Instance& identical) { return bipartite_ef1(identical).allocation(); };
  }
  if (algorithm == "interval") {
    const IntervalSet intervals = *file.intervals;
    return [intervals](const Instance& identical) {
      return interval_ef1(identical, intervals).allocation;
    };
  }
  // chain: the ascending-scan maximal independent set as source.
  return [](const Instance& identical) {
    const GoodSet source =
        complete_to_maximal_is(identical.graph(), GoodSet(identical.m()));
    const std::vector<Good> order = source.to_vector();
    ChainOutcome outcome = chain_ef1(identical, order);
    if (!outcome.found()) throw NoEf1Step{};
    return outcome.allocation();
  };
}

int cmd_solve(const SolveOptions& options, std::ostream& out) {
  const InstanceFile file = load_instance(options.instance);
  const Instance& instance = file.instance;
  const std::size_t n = instance.agents();

  std::string algorithm = options.algorithm;
  if (algorithm == "auto") algorithm = pick_algorithm(file);

  if (algorithm == "roundrobin" && instance.m() > n + 1) {
    throw Failure{kExitInvalidParams, "roundrobin needs m <= n + 1"};
  }
  const bool two_agent = algorithm == "chain" || algorithm == "swap" ||
                         algorithm == "bipartite" || algorithm == "interval";
  if (two_agent && n != 2) {
    throw Failure{kExitInvalidParams,
                  algorithm + " needs exactly 2 agents, instance has " + std::to_string(n)};
  }
  if (algorithm == "bipartite" && !instance.graph().two_coloring()) {
    throw Failure{kExitInvalidParams, "conflict graph is not bipartite"};
  }
  if (algorithm == "interval" && !file.intervals) {
    throw Failure{kExitInvalidParams, "instance has no intervals field"};
  }

  Allocation allocation;
  try {
    if (algorithm == "roundrobin") {
      allocation = round_robin_small(instance);
    } else if (algorithm == "single") {
      allocation = Allocation({complete_to_maximal_is(instance.graph(), GoodSet(instance.m()))});
    } else {
      const IdenticalSolver solver = identical_solver(algorithm, file);
      if (instance.identical()) {
        allocation = solver(instance.to_goods());
      } else {
        allocation = cut_and_choose(instance, solver);
      }
    }
  } catch (const NoEf1Step&) {
    out << "algorithm:" << algorithm << "\n";
    out << "found:false\n";
    return kExitCertificateFalse;
  }

  const AllocationReport report = validate_allocation(instance, allocation);
  Certificate certificate{report.wellformed && is_maximal(instance, allocation),
                          report.wellformed && is_ef1(instance, allocation)};
  out << "algorithm:" << algorithm << "\n";
  out << "mode:" << to_string(instance.mode()) << "\n";
  out << "bundles:" << lists_text(allocation.to_lists()) << "\n";
  out << "maximal:" << bool_text(certificate.maximal) << "\n";
  out << "ef1:" << bool_text(certificate.ef1) << "\n";
  if (!options.out_path.empty()) {
    write_file(options.out_path, serialize_allocation(AllocationFile{allocation, certificate}));
  }
  if (!options.dot_path.empty()) {
    write_file(options.dot_path, allocation_dot(instance.graph(), allocation));
  }
  return certificate.maximal && certificate.ef1 ? kExitOk : kExitCertificateFalse;
}

// ---------------------------------------------------------------- check

struct CheckOptions {
  std::string instance;
  std::string allocation;
};

int cmd_check(const CheckOptions& options, std::ostream& out) {
  const InstanceFile file = load_instance(options.instance);
  const Instance& instance = file.instance;
  const AllocationFile allocation = parse_allocation(read_file(options.allocation), instance.m());

  bool wellformed = false;
  bool maximal = false;
  bool ef1 = false;
  if (allocation.allocation.agents() == instance.agents()) {
    wellformed = validate_allocation(instance, allocation.allocation).wellformed;
    maximal = is_maximal(instance, allocation.allocation);
    ef1 = is_ef1(instance, allocation.allocation);
  }
  out << "mode:" << to_string(instance.mode()) << "\n";
  out << "wellformed:" << bool_text(wellformed) << "\n";
  out << "maximal:" << bool_text(maximal) << "\n";
  out << "ef1:" << bool_text(ef1) << "\n";
  return wellformed && maximal && ef1 ? kExitOk : kExitCertificateFalse;
}

// ---------------------------------------------------------------- oracle

struct OracleOptions {
  std::string instance;
  bool witness = false;
  std::string witness_path;
  bool count = false;
  bool gamma = false;
  std::uint64_t max_assignments = EnumerationBudget{}.max_assignments;
  std::uint64_t time_limit_ms = 0;
  unsigned workers = 1;
};

int cmd_oracle(const OracleOptions& options, std::ostream& out) {
  const InstanceFile file = load_instance(options.instance);
  const Instance& instance = file.instance;
  const EnumerationBudget budget =
      budget_from(options.max_assignments, options.time_limit_ms, options.workers);
  if (options.gamma && !instance.identical()) {
    throw Failure{kExitInvalidParams, "gamma needs identical valuations"};
  }

  const ExistenceResult existence = exists_maximal_ef1(instance, budget);
  out << "exists:" << bool_text(existence.exists) << "\n";
  if ((options.witness || !options.witness_path.empty()) && existence.witness) {
    out << "witness:" << lists_text(existence.witness->to_lists()) << "\n";
    if (!options.witness_path.empty()) {
      write_file(options.witness_path,
                 serialize_allocation(AllocationFile{*existence.witness, Certificate{true, true}}));
    }
  }
  if (options.count) {
    std::uint64_t count = 0;
    enumerate_maximal_allocations(instance, budget, [&](const Allocation&) {
      ++count;
      return true;
    });
    out << "count:" << count << "\n";
  }
  if (options.gamma) out << "gamma:" << format_value(compute_gamma(instance, budget)) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string kind;
  std::size_t n = 3;
  std::string base;
  std::string graph;
  std::size_t t = 0;
  std::string out_path;
  std::string spec_path;
  std::uint64_t max_assignments = EnumerationBudget{}.max_assignments;
};

int cmd_gen(const GenOptions& options, std::ostream& out) {
  if (options.kind == "counterexample") {
    Instance instance = [&] {
      try {
        return gen_counterexample(options.n);
      } catch (const InvalidInput& e) {
        throw Failure{kExitInvalidParams, e.what()};
      }
    }();
    const std::string text = serialize_instance(instance);
    if (options.out_path.empty()) {
      out << text;
      return kExitOk;
    }
    write_file(options.out_path, text);
    out << "agents:" << instance.agents() << "\n";
    out << "goods:" << instance.m() << "\n";
    out << "edges:" << instance.graph().edges().size() << "\n";
    return kExitOk;
  }

  // reduction
  if (options.base.empty() || options.graph.empty()) {
    throw Failure{kExitInvalidParams, "reduction needs --base and --graph"};
  }
  const InstanceFile base = load_instance(options.base);
  const GraphFile h = parse_graph(read_file(options.graph));
  EnumerationBudget budget;
  budget.max_assignments = options.max_assignments;
  Reduction reduction = [&] {
    try {
      return build_reduction(base.instance, ISInstance{h.graph, options.t}, budget);
    } catch (const BaseAdmitsEf1& e) {
      throw Failure{kExitBaseAdmitsEf1, e.what()};
    } catch (const InvalidInput& e) {
      throw Failure{kExitInvalidParams, e.what()};
    }
  }();
  const std::string text = serialize_instance(reduction.instance);
  const std::string spec = serialize_reduction_spec(reduction.spec);
  if (!options.spec_path.empty()) write_file(options.spec_path, spec);
  if (options.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  write_file(options.out_path, text);
  if (options.spec_path.empty()) write_file(options.out_path + ".spec.json", spec);
  out << "agents:" << reduction.instance.agents() << "\n";
  out << "goods:" << reduction.instance.m() << "\n";
  out << "edges:" << reduction.instance.graph().edges().size() << "\n";
  out << "gamma:" << format_value(reduction.spec.gamma) << "\n";
  out << "lambda:" << format_value(reduction.spec.lambda) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- color-tree

struct ColorOptions {
  std::string tree;
  std::size_t n = 2;
  std::string out_path;
  std::string dot_path;
};

int cmd_color_tree(const ColorOptions& options, std::ostream& out) {
  const GraphFile file = parse_graph(read_file(options.tree));
  if (options.n == 0) throw Failure{kExitInvalidParams, "need n >= 1 colors"};
  const RootedTree tree = [&] {
    try {
      return RootedTree::from_edges(file.graph.m(), file.graph.edges(), file.root.value_or(0));
    } catch (const InvalidInput& e) {
      throw Failure{kExitInvalidParams, std::string("not a tree: ") + e.what()};
    }
  }();
  const PartialColoring coloring = equitable_tree_coloring(tree, options.n);
  const ColoringReport report = check_coloring(tree, coloring, options.n);
  out << "colors:" << sizes_text(coloring.color) << "\n";
  out << "classSizes:" << sizes_text(coloring.class_sizes) << "\n";
  out << "valid:" << bool_text(report.ok()) << "\n";
  if (!options.out_path.empty()) write_file(options.out_path, serialize_coloring(coloring));
  if (!options.dot_path.empty()) write_file(options.dot_path, coloring_dot(tree, coloring));
  return report.ok() ? kExitOk : kExitCertificateFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal EF1 allocations of goods with conflicts", "conflictfair"};
  app.require_subcommand(1);

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute a maximal EF1 allocation");
  solve_cmd->add_option("instance", solve.instance, "Instance JSON")->required();
  solve_cmd->add_option("-a,--algorithm", solve.algorithm, "Solver")
      ->check(CLI::IsMember({"auto", "chain", "swap", "bipartite", "interval", "roundrobin"}));
  solve_cmd->add_option("-o,--out", solve.out_path, "Allocation JSON output");
  solve_cmd->add_option("--dot", solve.dot_path, "Graphviz output");

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "Check an allocation");
  check_cmd->add_option("instance", check.instance, "Instance JSON")->required();
  check_cmd->add_option("allocation", check.allocation, "Allocation JSON")->required();

  OracleOptions oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search over allocations");
  oracle_cmd->add_option("instance", oracle.instance, "Instance JSON")->required();
  oracle_cmd->add_flag("--witness", oracle.witness, "Print the first EF1 maximal allocation");
  oracle_cmd->add_option("--witness-out", oracle.witness_path, "Write the witness as JSON");
  oracle_cmd->add_flag("--count", oracle.count, "Count maximal allocations");
  oracle_cmd->add_flag("--gamma", oracle.gamma, "Report gamma");
  oracle_cmd->add_option("--max-assignments", oracle.max_assignments, "Enumeration budget");
  oracle_cmd->add_option("--time-limit-ms", oracle.time_limit_ms, "Wall-clock limit");
  oracle_cmd->add_option("--workers", oracle.workers, "Worker threads");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->add_option("kind", gen.kind, "counterexample or reduction")
      ->required()
      ->check(CLI::IsMember({"counterexample", "reduction"}));
  gen_cmd->add_option("-n,--agents", gen.n, "Agents for counterexample");
  gen_cmd->add_option("--base", gen.base, "Base instance JSON for reduction");
  gen_cmd->add_option("--graph", gen.graph, "Graph H JSON for reduction");
  gen_cmd->add_option("-t", gen.t, "Independent set size");
  gen_cmd->add_option("-o,--out", gen.out_path, "Instance JSON output");
  gen_cmd->add_option("--spec", gen.spec_path, "Reduction sidecar output");
  gen_cmd->add_option("--max-assignments", gen.max_assignments, "Oracle budget for the base");

  ColorOptions color;
  CLI::App* color_cmd = app.add_subcommand("color-tree", "Maximal equitable tree coloring");
  color_cmd->add_option("tree", color.tree, "Tree JSON")->required();
  color_cmd->add_option("-n,--colors", color.n, "Number of colors");
  color_cmd->add_option("-o,--out", color.out_path, "Coloring JSON output");
  color_cmd->add_option("--dot", color.dot_path, "Graphviz output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidParams;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*check_cmd) return cmd_check(check, out);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*color_cmd) return cmd_color_tree(color, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCertificateFalse;
  }
  return kExitInvalidParams;
}

}  // namespace conflictfair
