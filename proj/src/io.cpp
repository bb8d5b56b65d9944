// Copyright 2026 The tropjac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropjac/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tropjac/error.hpp"

namespace tropjac {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& message) { throw Error("cli", "Schema", message); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(where + " lacks '" + key + "'");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema(where + "." + key + " must be a string");
  return v.get<std::string>();
}

Rational rational_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) schema(where + "." + key + " must be a rational string such as \"3/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema(where + "." + key + ": " + e.what());
  }
}

}  // namespace

MetricGraph parse_graph(std::string_view text) {
  const json doc = parse_json(text);
  const json& vs = field(doc, "vertices", "graph");
  const json& es = field(doc, "edges", "graph");
  if (!vs.is_array() || !es.is_array()) schema("graph.vertices and graph.edges must be arrays");
  std::vector<std::string> vertices;
  for (const auto& v : vs) {
    if (!v.is_string()) schema("vertex identifiers must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<MetricGraph::EdgeSpec> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& ends = field(es[i], "ends", where);
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      schema(where + ".ends must be two vertex identifiers");
    edges.push_back({string_field(es[i], "id", where), ends[0].get<std::string>(), ends[1].get<std::string>(),
                     rational_field(es[i], "length", where)});
  }
  MetricGraph graph(std::move(vertices), std::move(edges));
  for (int v = 0; v < static_cast<int>(graph.num_vertices()); ++v) {
    if (graph.valence(v) == 1)
      throw Error("cli", "OneValentVertex", "vertex '" + graph.vertex_id(v) + "' is 1-valent; the curve must be compact");
  }
  return graph;
}

std::string serialize_graph(const MetricGraph& graph) {
  json doc;
  doc["vertices"] = graph.vertex_ids();
  doc["edges"] = json::array();
  for (const auto& e : graph.edges())
    doc["edges"].push_back({{"id", e.id}, {"ends", {graph.vertex_id(e.tail), graph.vertex_id(e.head)}}, {"length", to_string(e.length)}});
  return doc.dump(2);
}

Divisor parse_divisor(std::string_view text, const MetricGraph& graph) {
  const json doc = parse_json(text);
  const json& entries = field(doc, "entries", "divisor");
  if (!entries.is_array()) schema("divisor.entries must be an array");
  Divisor d;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const json& entry = entries[i];
    const json& c = field(entry, "coeff", where);
    if (!c.is_number_integer()) schema(where + ".coeff must be an integer");
    const auto coeff = c.get<std::int64_t>();
    if (coeff == 0) schema(where + ".coeff must be nonzero");
    const bool has_vertex = entry.contains("vertex");
    const bool has_edge = entry.contains("edge");
    if (has_vertex == has_edge) schema(where + " needs exactly one of 'vertex' and 'edge'");
    if (has_vertex) {
      const std::string id = string_field(entry, "vertex", where);
      auto v = graph.find_vertex(id);
      if (!v) schema(where + ": unknown vertex '" + id + "'");
      d.add(GraphPoint::vertex(*v), coeff);
    } else {
      const std::string id = string_field(entry, "edge", where);
      auto e = graph.find_edge(id);
      if (!e) schema(where + ": unknown edge '" + id + "'");
      const Rational offset = rational_field(entry, "offset", where);
      if (offset <= 0 || offset >= graph.edge(*e).length) schema(where + ".offset must lie strictly inside edge '" + id + "'");
      d.add(GraphPoint::on_edge(graph, *e, offset), coeff);
    }
  }
  return d;
}

std::string serialize_divisor(const Divisor& d, const MetricGraph& graph) {
  json doc;
  doc["entries"] = json::array();
  for (const auto& [p, c] : d.terms()) {
    if (p.is_vertex())
      doc["entries"].push_back({{"vertex", graph.vertex_id(p.vertex_index())}, {"coeff", c}});
    else
      doc["entries"].push_back({{"edge", graph.edge(p.edge_index()).id}, {"offset", to_string(p.offset())}, {"coeff", c}});
  }
  return doc.dump(2);
}

GraphPoint parse_point(std::string_view text, const MetricGraph& graph) {
  const std::string s(text);
  if (auto at = s.find('@'); at != std::string::npos) {
    auto e = graph.find_edge(s.substr(0, at));
    if (!e) throw Error("cli", "BadPoint", "unknown edge in point '" + s + "'");
    Rational offset;
    try {
      offset = parse_rational(s.substr(at + 1));
    } catch (const std::invalid_argument& ex) {
      throw Error("cli", "BadPoint", "bad offset in point '" + s + "': " + ex.what());
    }
    if (offset < 0 || offset > graph.edge(*e).length) throw Error("cli", "BadPoint", "offset outside the edge in '" + s + "'");
    return GraphPoint::on_edge(graph, *e, offset);
  }
  auto v = graph.find_vertex(s);
  if (!v) throw Error("cli", "BadPoint", "unknown vertex '" + s + "'");
  return GraphPoint::vertex(*v);
}

Vector parse_vector(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Vector out;
  if (s.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw Error("cli", "BadVector", "bad component in '" + std::string(text) + "': " + e.what());
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cli", "FileNotFound", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tropjac
