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

#include "cpd/analytics.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "cpd/parallel.h"

namespace cpd {
namespace {

constexpr VertexId kNoParent = ~VertexId{0};

struct BfsResult {
  std::vector<int> dist;
  std::vector<VertexId> parent;
};

template <typename NeighborFn>
BfsResult RunBfs(const CyclePrefixDigraph& graph, VertexId source,
                 NeighborFn neighbors, bool track_parents) {
  BfsResult result;
  result.dist.assign(graph.vertex_count(), kUnreachable);
  if (track_parents) result.parent.assign(graph.vertex_count(), kNoParent);
  std::deque<VertexId> queue{source};
  result.dist[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    std::vector<VertexId> next = neighbors(u);
    std::sort(next.begin(), next.end());
    for (const VertexId v : next) {
      if (result.dist[v] != kUnreachable) continue;
      result.dist[v] = result.dist[u] + 1;
      if (track_parents) result.parent[v] = u;
      queue.push_back(v);
    }
  }
  return result;
}

BfsResult ForwardBfs(const CyclePrefixDigraph& graph, VertexId source,
                     bool track_parents) {
  return RunBfs(
      graph, source,
      [&graph](VertexId u) { return graph.OutNeighborIds(u); }, track_parents);
}

void CheckSize(const CyclePrefixDigraph& graph,
               const AnalysisOptions& options) {
  if (graph.vertex_count() > options.max_vertices) {
    throw ResourceLimitError(graph.params().Name() + " has " +
                             std::to_string(graph.vertex_count()) +
                             " vertices, above the analysis limit of " +
                             std::to_string(options.max_vertices));
  }
}

// Appends one prepend step to `path`: brings `symbol` to the front of the
// last vertex, by rotation if present and by shift otherwise. Rotations are
// checked for legality in `graph`.
void PrependSymbol(const CyclePrefixDigraph& graph, int symbol, Path& path) {
  const Vertex& current = path.vertices.back();
  const int position = current.PositionOf(symbol);
  const ArcLabel label = position == 0 ? ArcLabel::Shift(symbol)
                                       : ArcLabel::Rotation(position);
  if (!graph.IsLegal(label, current)) {
    throw std::invalid_argument("step " + label.ToString() + " from " +
                                current.ToString() + " is not an arc of " +
                                graph.params().Name());
  }
  path.vertices.push_back(graph.Apply(label, current));
  path.labels.push_back(label);
}

// Smallest j (1-based, in [1, D + 1]) such that the first D - j + 1 symbols
// of `from` equal to_j ... to_D.
int LongestSuffixOverlap(const Vertex& from, const Vertex& to) {
  const int d = to.size();
  for (int j = 1; j <= d; ++j) {
    bool match = true;
    for (int p = 0; p + j - 1 < d && match; ++p) {
      match = from[p] == to[p + j - 1];
    }
    if (match) return j;
  }
  return d + 1;
}

Path PrependRoute(const CyclePrefixDigraph& graph, const Vertex& from,
                  const Vertex& to) {
  Path path;
  path.vertices.push_back(from);
  for (int j = LongestSuffixOverlap(from, to) - 1; j >= 1; --j) {
    PrependSymbol(graph, to[j - 1], path);
  }
  return path;
}

}  // namespace

bool IsValidPath(const CyclePrefixDigraph& graph, const Path& path) {
  if (path.vertices.empty() ||
      path.vertices.size() != path.labels.size() + 1) {
    return false;
  }
  for (const Vertex& v : path.vertices) {
    if (!graph.IsValid(v)) return false;
  }
  for (std::size_t i = 0; i < path.labels.size(); ++i) {
    const Vertex& u = path.vertices[i];
    if (!graph.IsLegal(path.labels[i], u) ||
        graph.Apply(path.labels[i], u) != path.vertices[i + 1]) {
      return false;
    }
  }
  return true;
}

DistanceTable BfsDistances(const CyclePrefixDigraph& graph,
                           const Vertex& source) {
  const VertexId id = graph.Rank(source);
  return {id, ForwardBfs(graph, id, /*track_parents=*/false).dist};
}

int Distance(const CyclePrefixDigraph& graph, const Vertex& from,
             const Vertex& to) {
  return BfsDistances(graph, from).at(graph.Rank(to));
}

Path ShortestPath(const CyclePrefixDigraph& graph, const Vertex& from,
                  const Vertex& to) {
  const VertexId source = graph.Rank(from);
  const VertexId target = graph.Rank(to);
  const BfsResult bfs = ForwardBfs(graph, source, /*track_parents=*/true);
  if (bfs.dist[target] == kUnreachable) {
    throw std::runtime_error(to.ToString() + " is unreachable from " +
                             from.ToString());
  }
  std::vector<VertexId> ids{target};
  while (ids.back() != source) ids.push_back(bfs.parent[ids.back()]);
  std::reverse(ids.begin(), ids.end());

  Path path;
  for (const VertexId id : ids) path.vertices.push_back(graph.Unrank(id));
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    path.labels.push_back(
        *graph.ClassifyArc(path.vertices[i], path.vertices[i + 1]));
  }
  return path;
}

std::optional<int> Eccentricity(const CyclePrefixDigraph& graph,
                                VertexId source) {
  const BfsResult bfs = ForwardBfs(graph, source, /*track_parents=*/false);
  int eccentricity = 0;
  for (const int d : bfs.dist) {
    if (d == kUnreachable) return std::nullopt;
    eccentricity = std::max(eccentricity, d);
  }
  return eccentricity;
}

std::vector<std::optional<int>> AllEccentricities(
    const CyclePrefixDigraph& graph, const AnalysisOptions& options) {
  CheckSize(graph, options);
  std::vector<std::optional<int>> eccentricities(graph.vertex_count());
  ParallelFor(graph.vertex_count(), WorkerCount(options.num_threads),
              [&](std::size_t id) {
                eccentricities[id] = Eccentricity(graph, id);
              });
  return eccentricities;
}

std::optional<int> Diameter(const CyclePrefixDigraph& graph,
                            const AnalysisOptions& options) {
  int diameter = 0;
  for (const auto& eccentricity : AllEccentricities(graph, options)) {
    if (!eccentricity) return std::nullopt;
    diameter = std::max(diameter, *eccentricity);
  }
  return diameter;
}

bool IsStronglyConnected(const CyclePrefixDigraph& graph) {
  const auto reaches_all = [](const BfsResult& bfs) {
    return std::none_of(bfs.dist.begin(), bfs.dist.end(),
                        [](int d) { return d == kUnreachable; });
  };
  if (!reaches_all(ForwardBfs(graph, 0, /*track_parents=*/false))) {
    return false;
  }
  return reaches_all(RunBfs(
      graph, 0, [&graph](VertexId u) { return graph.InNeighborIds(u); },
      /*track_parents=*/false));
}

bool IsDegreeRegular(const CyclePrefixDigraph& graph) {
  const auto degree = static_cast<std::size_t>(graph.params().degree());
  const auto distinct = [](std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    return static_cast<std::size_t>(
        std::unique(ids.begin(), ids.end()) - ids.begin());
  };
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    if (distinct(graph.OutNeighborIds(id)) != degree ||
        distinct(graph.InNeighborIds(id)) != degree) {
      return false;
    }
  }
  return true;
}

Path GreedyRoute(const CyclePrefixDigraph& graph, const Vertex& from,
                 const Vertex& to) {
  if (graph.params().r() != 0) {
    throw std::invalid_argument(
        "greedy routing is defined for r = 0 only; use ShortestPath");
  }
  graph.Validate(from);
  graph.Validate(to);
  return PrependRoute(graph, from, to);
}

Vertex SymbolPathTarget(const CyclePrefixDigraph& graph, int symbol) {
  const int d = graph.params().d();
  if (symbol <= d) return graph.InitialVertex();
  std::vector<int> target{symbol};
  for (int s = 1; s < d; ++s) target.push_back(s);
  return Vertex(std::move(target));
}

Path PathContainingSymbol(const CyclePrefixDigraph& graph, const Vertex& start,
                          int symbol) {
  graph.Validate(start);
  if (start[0] != symbol) {
    throw std::invalid_argument("start vertex " + start.ToString() +
                                " does not begin with " +
                                std::to_string(symbol));
  }
  const int d = graph.params().d();
  const Vertex target = SymbolPathTarget(graph, symbol);
  if (start == target) return Path{{start}, {}};
  if (symbol <= d) return PrependRoute(graph, start, target);

  // Build 1 2 ... (D-1) symbol, then close with the full rotation.
  std::vector<int> staging;
  for (int s = 1; s < d; ++s) staging.push_back(s);
  staging.push_back(symbol);
  Path path = PrependRoute(graph, start, Vertex(std::move(staging)));
  PrependSymbol(graph, symbol, path);
  return path;
}

}  // namespace cpd
