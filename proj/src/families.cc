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

#include "cpd/families.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace cpd {
namespace {

void RequireCayleyCase(const Params& params) {
  if (params.delta() != params.d()) {
    throw std::invalid_argument("the Cayley correspondence needs Delta == D");
  }
}

}  // namespace

SnElement CompleteToSn(const CyclePrefixDigraph& graph, const Vertex& v) {
  RequireCayleyCase(graph.params());
  graph.Validate(v);
  std::vector<int> images(v.symbols().begin(), v.symbols().end());
  for (int s = 1; s <= graph.params().alphabet_size(); ++s) {
    if (!v.Contains(s)) images.push_back(s);
  }
  return SnElement(std::move(images));
}

AlphabetPermutation CycleGenerator(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("cycle length out of range");
  AlphabetPermutation identity = AlphabetPermutation::Identity(n);
  std::vector<int> images(identity.images().begin(), identity.images().end());
  for (int i = 1; i < k; ++i) images[i - 1] = i + 1;
  images[k - 1] = 1;
  return AlphabetPermutation(std::move(images));
}

bool CheckCayleyCorrespondence(const CyclePrefixDigraph& graph) {
  RequireCayleyCase(graph.params());
  if (graph.params().r() != 0) {
    throw std::invalid_argument("the Cayley correspondence needs r == 0");
  }
  const int n = graph.params().alphabet_size();
  const int d = graph.params().d();

  // (tail, head, generator length k)
  using LabeledArc = std::tuple<VertexId, VertexId, int>;
  std::vector<LabeledArc> digraph_arcs;
  std::vector<LabeledArc> cayley_arcs;

  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    const Vertex v = graph.Unrank(id);
    for (const Arc& arc : graph.OutNeighbors(v)) {
      const int k = arc.label.is_rotation() ? arc.label.value : n;
      digraph_arcs.emplace_back(id, graph.Rank(arc.vertex), k);
    }

    const AlphabetPermutation position_map = CompleteToSn(graph, v).Inverse();
    for (int k = 2; k <= n; ++k) {
      const AlphabetPermutation next_word =
          CycleGenerator(n, k).Compose(position_map).Inverse();
      const std::vector<int> prefix(next_word.images().begin(),
                                    next_word.images().begin() + d);
      cayley_arcs.emplace_back(id, graph.Rank(Vertex(prefix)), k);
    }
  }
  std::sort(digraph_arcs.begin(), digraph_arcs.end());
  std::sort(cayley_arcs.begin(), cayley_arcs.end());
  return digraph_arcs == cayley_arcs;
}

std::vector<Vertex> KautzOutNeighbors(const CyclePrefixDigraph& graph,
                                      const Vertex& v) {
  if (graph.params().d() != 2) {
    throw std::invalid_argument("the Kautz model is defined for D == 2");
  }
  graph.Validate(v);
  std::vector<Vertex> neighbors;
  for (int first = 1; first <= graph.params().alphabet_size(); ++first) {
    if (first != v[0]) neighbors.push_back(Vertex{first, v[0]});
  }
  return neighbors;
}

bool KautzAdjacencyMatches(const CyclePrefixDigraph& graph) {
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    const Vertex v = graph.Unrank(id);
    std::vector<Vertex> kautz = KautzOutNeighbors(graph, v);
    std::vector<Vertex> core;
    for (Arc& arc : graph.OutNeighbors(v)) core.push_back(std::move(arc.vertex));
    std::sort(kautz.begin(), kautz.end());
    std::sort(core.begin(), core.end());
    if (kautz != core) return false;
  }
  return true;
}

}  // namespace cpd
