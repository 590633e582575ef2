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

#include "conflictfair/io.h"

#include <sstream>

#include "json.hpp"

namespace conflictfair {
namespace {

using nlohmann::json;

const char* const kPalette[] = {"red",    "blue",  "green",     "orange",  "purple",
                                "cyan",   "brown", "magenta",   "gold",    "pink",
                                "olive",  "navy",  "turquoise", "maroon",  "khaki"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

template <typename F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

const json& field(const json& object, const char* key) {
  if (!object.is_object()) throw ParseError("expected a JSON object");
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

Value as_value(const json& j) {
  if (j.is_string()) return parse_value(j.get<std::string>());
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  throw ParseError("rationals must be strings like \"3\" or \"-1/2\"");
}

std::vector<Edge> as_edges(const json& j) {
  if (!j.is_array()) throw ParseError("edges must be a list of [u, v] pairs");
  std::vector<Edge> edges;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [u, v] pairs");
    edges.emplace_back(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
  }
  return edges;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

json values_json(const std::vector<Value>& values) {
  json out = json::array();
  for (const Value& v : values) out.push_back(format_value(v));
  return out;
}

ValuationModel parse_model(const json& j, std::size_t m) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "additive") {
    const json& values = field(j, "values");
    if (!values.is_array() || values.size() != m) {
      throw ParseError("additive model needs " + std::to_string(m) + " values");
    }
    std::vector<Value> out;
    for (const json& v : values) out.push_back(as_value(v));
    return ValuationModel::additive(std::move(out));
  }
  if (type == "uniform") return ValuationModel::uniform(m);
  if (type == "table") {
    if (m > kMaxTableGoods) {
      throw ParseError("table valuations support at most " + std::to_string(kMaxTableGoods) +
                       " goods, got " + std::to_string(m));
    }
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("table entries must be a list");
    std::vector<std::pair<std::uint64_t, Value>> pairs;
    for (const json& e : entries) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string()) {
        throw ParseError("table entries must be [bitmask-string, rational-string] pairs");
      }
      const std::string key = e[0].get<std::string>();
      std::size_t used = 0;
      std::uint64_t mask = 0;
      try {
        mask = std::stoull(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size() || key[0] == '-' || key[0] == '+') {
        throw ParseError("bad bitmask \"" + key + "\"");
      }
      pairs.emplace_back(mask, as_value(e[1]));
    }
    return ValuationModel::table(m, pairs);
  }
  if (type == "negated") return ValuationModel::negated(parse_model(field(j, "inner"), m));
  if (type == "composite") {
    std::vector<Good> base_goods;
    for (const json& g : field(j, "baseGoods")) base_goods.push_back(as_index(g, "base good"));
    std::vector<Value> extra;
    for (const json& v : field(j, "extra")) extra.push_back(as_value(v));
    if (extra.size() != m) throw ParseError("composite extra needs " + std::to_string(m) + " values");
    ValuationModel base = parse_model(field(j, "base"), base_goods.size());
    return ValuationModel::composite(std::move(base), std::move(base_goods), std::move(extra));
  }
  throw ParseError("unknown valuation type \"" + type + "\"");
}

json model_json(const ValuationModel& model) {
  return std::visit(
      [](const auto& kind) -> json {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, AdditiveModel>) {
          return {{"type", "additive"}, {"values", values_json(kind.values)}};
        } else if constexpr (std::is_same_v<T, UniformModel>) {
          return {{"type", "uniform"}};
        } else if constexpr (std::is_same_v<T, TableModel>) {
          json entries = json::array();
          for (std::size_t mask = 0; mask < kind.entries.size(); ++mask) {
            entries.push_back({std::to_string(mask), format_value(kind.entries[mask])});
          }
          return {{"type", "table"}, {"entries", entries}};
        } else if constexpr (std::is_same_v<T, NegatedModel>) {
          return {{"type", "negated"}, {"inner", model_json(*kind.inner)}};
        } else {
          return {{"type", "composite"},
                  {"base", model_json(*kind.base)},
                  {"baseGoods", kind.base_goods},
                  {"extra", values_json(kind.extra)}};
        }
      },
      model.kind());
}

std::vector<GoodSet> parse_bundles(const json& j, std::size_t goods) {
  if (!j.is_array()) throw ParseError("bundles must be a list of lists");
  std::vector<GoodSet> bundles;
  for (const json& b : j) {
    if (!b.is_array()) throw ParseError("each bundle must be a list of good indices");
    GoodSet bundle(goods);
    for (const json& g : b) {
      const std::size_t good = as_index(g, "good");
      if (good >= goods) {
        throw ParseError("good " + std::to_string(good) + " out of range [0, " +
                         std::to_string(goods) + ")");
      }
      if (bundle.contains(good)) {
        throw ParseError("good " + std::to_string(good) + " listed twice in one bundle");
      }
      bundle.insert(good);
    }
    bundles.push_back(std::move(bundle));
  }
  return bundles;
}

json bundles_json(const Allocation& allocation) {
  json out = json::array();
  for (const auto& list : allocation.to_lists()) out.push_back(list);
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    const std::size_t agents = as_index(field(j, "agents"), "agents");
    const std::size_t goods = as_index(field(j, "goods"), "goods");
    ConflictGraph graph(goods, as_edges(field(j, "edges")));
    Mode mode = Mode::kGoods;
    if (j.contains("mode")) {
      const std::string text_mode = j.at("mode").get<std::string>();
      if (text_mode == "chores") {
        mode = Mode::kChores;
      } else if (text_mode != "goods") {
        throw ParseError("mode must be \"goods\" or \"chores\"");
      }
    }
    const json& valuations = field(j, "valuations");
    std::optional<Instance> instance;
    if (valuations.contains("identical")) {
      instance.emplace(std::move(graph), agents, parse_model(valuations.at("identical"), goods),
                       mode);
    } else if (valuations.contains("perAgent")) {
      const json& list = valuations.at("perAgent");
      if (!list.is_array() || list.size() != agents) {
        throw ParseError("perAgent needs " + std::to_string(agents) + " models");
      }
      std::vector<ValuationModel> models;
      for (const json& model : list) models.push_back(parse_model(model, goods));
      instance.emplace(std::move(graph), std::move(models), mode);
    } else {
      throw ParseError("valuations must hold \"identical\" or \"perAgent\"");
    }

    InstanceFile file{std::move(*instance), std::nullopt};
    if (j.contains("intervals")) {
      const json& list = j.at("intervals");
      if (!list.is_array() || list.size() != goods) {
        throw ParseError("intervals needs one [left, right] pair per good");
      }
      std::vector<Interval> intervals;
      for (const json& pair : list) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ParseError("intervals must be [left, right] pairs");
        }
        intervals.push_back(Interval{as_value(pair[0]), as_value(pair[1])});
      }
      file.intervals.emplace(std::move(intervals));
      const ConflictGraph overlap = file.intervals->overlap_graph();
      for (Good g = 0; g < goods; ++g) {
        if (!(overlap.neighbors(g) == file.instance.graph().neighbors(g))) {
          throw ParseError("edges do not match the overlap graph of the intervals");
        }
      }
    }
    return file;
  });
}

std::string serialize_instance(const InstanceFile& file) {
  const Instance& instance = file.instance;
  json j;
  j["agents"] = instance.agents();
  j["goods"] = instance.m();
  j["edges"] = edges_json(instance.graph().edges());
  j["mode"] = to_string(instance.mode());
  if (instance.identical()) {
    j["valuations"] = {{"identical", model_json(instance.valuation(0))}};
  } else {
    json list = json::array();
    for (const auto& model : instance.valuations()) list.push_back(model_json(model));
    j["valuations"] = {{"perAgent", list}};
  }
  if (file.intervals) {
    json list = json::array();
    for (const Interval& iv : file.intervals->intervals()) {
      list.push_back({format_value(iv.left), format_value(iv.right)});
    }
    j["intervals"] = list;
  }
  return j.dump(2) + "\n";
}

std::string serialize_instance(const Instance& instance) {
  return serialize_instance(InstanceFile{instance, std::nullopt});
}

AllocationFile parse_allocation(std::string_view text, std::size_t goods) {
  const json j = parse_json(text);
  return guarded([&] {
    AllocationFile file{Allocation(parse_bundles(field(j, "bundles"), goods)), std::nullopt};
    if (j.contains("certificate")) {
      const json& c = j.at("certificate");
      file.certificate = Certificate{field(c, "maximal").get<bool>(), field(c, "ef1").get<bool>()};
    }
    return file;
  });
}

std::string serialize_allocation(const AllocationFile& file) {
  json j;
  j["bundles"] = bundles_json(file.allocation);
  if (file.certificate) {
    j["certificate"] = {{"maximal", file.certificate->maximal}, {"ef1", file.certificate->ef1}};
  }
  return j.dump(2) + "\n";
}

GraphFile parse_graph(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    const std::size_t vertices = as_index(field(j, "vertices"), "vertices");
    GraphFile file{ConflictGraph(vertices, as_edges(field(j, "edges"))), std::nullopt};
    if (j.contains("root")) file.root = as_index(j.at("root"), "root");
    return file;
  });
}

std::string serialize_graph(const ConflictGraph& graph, std::optional<std::size_t> root) {
  json j;
  j["vertices"] = graph.m();
  j["edges"] = edges_json(graph.edges());
  if (root) j["root"] = *root;
  return j.dump(2) + "\n";
}

std::string serialize_coloring(const PartialColoring& coloring) {
  json j;
  j["colors"] = coloring.color;
  j["classSizes"] = coloring.class_sizes;
  return j.dump(2) + "\n";
}

std::string serialize_reduction_spec(const ReductionSpec& spec) {
  json j;
  j["gamma"] = format_value(spec.gamma);
  j["lambda"] = format_value(spec.lambda);
  j["t"] = spec.is.t;
  j["agents"] = spec.agents();
  j["baseGoods"] = spec.base_goods;
  j["hVertices"] = spec.vertices;
  j["hEdges"] = edges_json(spec.is.graph.edges());
  json x = json::array();
  json y = json::array();
  for (std::size_t i = 0; i < spec.agents(); ++i) {
    json xi = json::array();
    json yi = json::array();
    for (std::size_t w = 0; w < spec.vertices; ++w) {
      xi.push_back(spec.x_good(i, w));
      yi.push_back(spec.y_good(i, w));
    }
    x.push_back(xi);
    y.push_back(yi);
  }
  j["x"] = x;
  j["y"] = y;
  j["baseWitness"] = bundles_json(spec.base_witness);
  return j.dump(2) + "\n";
}

std::string allocation_dot(const ConflictGraph& graph, const Allocation& allocation) {
  std::ostringstream out;
  out << "graph allocation {\n  node [style=filled, fontcolor=white];\n";
  for (Good g = 0; g < graph.m(); ++g) {
    std::string color = "gray";
    for (std::size_t a = 0; a < allocation.agents(); ++a) {
      if (allocation.bundles[a].contains(g)) color = kPalette[a % kPaletteSize];
    }
    out << "  " << g << " [fillcolor=" << quoted(color) << "];\n";
  }
  for (auto [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string coloring_dot(const RootedTree& tree, const PartialColoring& coloring) {
  std::ostringstream out;
  out << "graph coloring {\n  node [style=filled, fontcolor=white];\n";
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const std::size_t c = coloring.color.at(v);
    const std::string color = c == 0 ? "gray" : kPalette[(c - 1) % kPaletteSize];
    out << "  " << v << " [fillcolor=" << quoted(color)
        << (v == tree.root() ? ", shape=doublecircle" : "") << "];\n";
  }
  for (auto [u, v] : tree.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace conflictfair
