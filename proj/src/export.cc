// Copyright 2026 The Cycle Prefix Authors
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

#include "cpd/export.h"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cpd {
namespace {

void WriteEdgeList(const CyclePrefixDigraph& graph, std::ostream& out) {
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    const Vertex v = graph.Unrank(id);
    const std::string tail = v.ToString();
    for (const Arc& arc : graph.OutNeighbors(v)) {
      out << tail << " -> " << arc.vertex.ToString() << "  ["
          << arc.label.ToString() << "]\n";
    }
  }
}

void WriteDot(const CyclePrefixDigraph& graph, std::ostream& out) {
  out << "digraph \"" << graph.params().Name() << "\" {\n";
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    out << "  \"" << graph.Unrank(id).ToString() << "\";\n";
  }
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    const Vertex v = graph.Unrank(id);
    const std::string tail = v.ToString();
    for (const Arc& arc : graph.OutNeighbors(v)) {
      out << "  \"" << tail << "\" -> \"" << arc.vertex.ToString()
          << "\" [label=\"" << arc.label.ToString() << "\"];\n";
    }
  }
  out << "}\n";
}

void WriteJson(const CyclePrefixDigraph& graph, std::ostream& out) {
  using Json = nlohmann::ordered_json;
  const Params& params = graph.params();
  Json doc;
  doc["params"] = {{"delta", params.delta()},
                   {"d", params.d()},
                   {"r", params.r()},
                   {"alphabet_size", params.alphabet_size()},
                   {"vertex_count", params.vertex_count()},
                   {"degree", params.degree()}};
  Json vertices = Json::array();
  Json arcs = Json::array();
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    const Vertex v = graph.Unrank(id);
    vertices.push_back(v.ToString());
    for (const Arc& arc : graph.OutNeighbors(v)) {
      arcs.push_back({{"from", v.ToString()},
                      {"to", arc.vertex.ToString()},
                      {"label", arc.label.ToString()}});
    }
  }
  doc["vertices"] = std::move(vertices);
  doc["arcs"] = std::move(arcs);
  out << doc.dump(2) << '\n';
}

}  // namespace

ExportFormat ParseExportFormat(std::string_view name) {
  if (name == "edgelist") return ExportFormat::kEdgeList;
  if (name == "dot") return ExportFormat::kDot;
  if (name == "json") return ExportFormat::kJson;
  throw std::invalid_argument("unknown export format '" + std::string(name) +
                              "' (expected edgelist, dot or json)");
}

void WriteGraph(const CyclePrefixDigraph& graph, ExportFormat format,
                std::ostream& out) {
  switch (format) {
    case ExportFormat::kEdgeList:
      WriteEdgeList(graph, out);
      return;
    case ExportFormat::kDot:
      WriteDot(graph, out);
      return;
    case ExportFormat::kJson:
      WriteJson(graph, out);
      return;
  }
}

std::string RenderGraph(const CyclePrefixDigraph& graph, ExportFormat format) {
  std::ostringstream out;
  WriteGraph(graph, format, out);
  return out.str();
}

}  // namespace cpd
