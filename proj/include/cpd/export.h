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

// Byte-stable serializations of a whole digraph. Vertices are written as
// 1-based symbols joined by '.', arcs in order of source rank and then
// neighbor order (rotations by k, shifts by m).
//
//   edgelist:  1.2 -> 2.1  [R2]
//   dot:       digraph "Gamma_2(2)" { "1.2"; ... "1.2" -> "2.1" [label="R2"]; }
//   json:      {"params": {...}, "vertices": [...], "arcs": [...]}

#ifndef CPD_EXPORT_H_
#define CPD_EXPORT_H_

#include <ostream>
#include <string>
#include <string_view>

#include "cpd/digraph.h"

namespace cpd {

enum class ExportFormat { kEdgeList, kDot, kJson };

// Accepts "edgelist", "dot", "json". Throws std::invalid_argument otherwise.
ExportFormat ParseExportFormat(std::string_view name);

void WriteGraph(const CyclePrefixDigraph& graph, ExportFormat format,
                std::ostream& out);
std::string RenderGraph(const CyclePrefixDigraph& graph, ExportFormat format);

}  // namespace cpd

#endif  // CPD_EXPORT_H_
