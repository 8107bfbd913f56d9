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

// Metric properties of cycle prefix digraphs: BFS distances, eccentricity,
// diameter, strong connectivity, and the prefix-building routes.

#ifndef CPD_ANALYTICS_H_
#define CPD_ANALYTICS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "cpd/digraph.h"

namespace cpd {

inline constexpr int kUnreachable = -1;

struct DistanceTable {
  VertexId source = 0;
  // dist[id] is the directed distance from source, or kUnreachable.
  std::vector<int> dist;

  int at(VertexId id) const { return dist.at(id); }
};

// A walk in the digraph; labels[i] applied to vertices[i] gives
// vertices[i + 1].
struct Path {
  std::vector<Vertex> vertices;
  std::vector<ArcLabel> labels;

  std::size_t length() const { return labels.size(); }
  const Vertex& front() const { return vertices.front(); }
  const Vertex& back() const { return vertices.back(); }
};

// True iff every label is an arc of `graph` at its vertex and produces the
// next vertex.
bool IsValidPath(const CyclePrefixDigraph& graph, const Path& path);

DistanceTable BfsDistances(const CyclePrefixDigraph& graph,
                           const Vertex& source);
int Distance(const CyclePrefixDigraph& graph, const Vertex& from,
             const Vertex& to);

// Shortest path found by BFS. Neighbors are expanded in ascending id order,
// so the first discoverer of a vertex (its lowest-ranked shortest-path
// predecessor in BFS order) becomes its parent and the result is
// reproducible.
Path ShortestPath(const CyclePrefixDigraph& graph, const Vertex& from,
                  const Vertex& to);

struct AnalysisOptions {
  // Instances above this many vertices throw ResourceLimitError.
  std::uint64_t max_vertices = 1'000'000;
  // 0 picks WorkerCount().
  int num_threads = 0;
};

// Largest distance from `source`; nullopt when some vertex is unreachable.
std::optional<int> Eccentricity(const CyclePrefixDigraph& graph,
                                VertexId source);

// Exact diameter by BFS from every vertex; nullopt when the digraph is not
// strongly connected. Sources are spread over worker threads; the result does
// not depend on the worker count.
std::optional<int> Diameter(const CyclePrefixDigraph& graph,
                            const AnalysisOptions& options = {});

// Eccentricity of every vertex, indexed by id.
std::vector<std::optional<int>> AllEccentricities(
    const CyclePrefixDigraph& graph, const AnalysisOptions& options = {});

// Forward and backward reachability from vertex 0.
bool IsStronglyConnected(const CyclePrefixDigraph& graph);

// True iff every vertex has exactly Delta - r distinct out- and in-neighbors.
bool IsDegreeRegular(const CyclePrefixDigraph& graph);

// Prefix-building route for r = 0. Finds the longest suffix v_j ... v_D of
// `to` that already sits at the front of `from`, then prepends
// v_{j-1}, ..., v_1 in turn: by rotation when the symbol is present, by
// shift otherwise. Length is at most D and at least the BFS distance.
// Throws std::invalid_argument when r > 0.
Path GreedyRoute(const CyclePrefixDigraph& graph, const Vertex& from,
                 const Vertex& to);

// The symbol-preserving path used to extend compatibility across a shift
// arc. `start` must begin with `symbol`. For symbol > D the path prepends
// D-1, ..., 1 and finishes with the full rotation R_D, ending at
// symbol 1 2 ... (D-1); for symbol <= D it prepends D, ..., 1 and ends at
// 1 2 ... D. Every vertex on the path contains `symbol`. A start already at
// the target gives the empty path. Throws std::invalid_argument if `start`
// does not begin with `symbol`, or if r > 0 forbids a rotation the
// construction needs.
Path PathContainingSymbol(const CyclePrefixDigraph& graph, const Vertex& start,
                          int symbol);

// Target vertex of PathContainingSymbol for the given symbol.
Vertex SymbolPathTarget(const CyclePrefixDigraph& graph, int symbol);

}  // namespace cpd

#endif  // CPD_ANALYTICS_H_
