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

#include "cpd/automorphism.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

#include "cpd/parallel.h"

namespace cpd {

AlphabetPermutation::AlphabetPermutation(std::vector<int> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (const int s : images_) {
    if (s < 1 || s > size() || seen[s]) {
      throw std::invalid_argument("not a permutation of 1.." +
                                  std::to_string(size()) + ": " + ToString());
    }
    seen[s] = true;
  }
}

AlphabetPermutation AlphabetPermutation::Identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return AlphabetPermutation(std::move(images));
}

std::vector<AlphabetPermutation> AlphabetPermutation::All(int n) {
  std::vector<AlphabetPermutation> all;
  all.reserve(Factorial(n));
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  do {
    all.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

AlphabetPermutation AlphabetPermutation::Compose(
    const AlphabetPermutation& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("composing permutations of different sizes");
  }
  std::vector<int> images(size());
  for (int i = 1; i <= size(); ++i) images[i - 1] = (*this)(other(i));
  return AlphabetPermutation(std::move(images));
}

AlphabetPermutation AlphabetPermutation::Inverse() const {
  std::vector<int> images(size());
  for (int i = 1; i <= size(); ++i) images[(*this)(i) - 1] = i;
  return AlphabetPermutation(std::move(images));
}

Vertex AlphabetPermutation::Relabel(const Vertex& v) const {
  std::vector<int> symbols;
  symbols.reserve(v.size());
  for (const int s : v.symbols()) symbols.push_back((*this)(s));
  return Vertex(std::move(symbols));
}

std::string AlphabetPermutation::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

VertexBijection::VertexBijection(std::vector<VertexId> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (const VertexId id : images_) {
    if (id >= images_.size() || seen[id]) {
      throw std::invalid_argument("vertex map is not a bijection");
    }
    seen[id] = true;
  }
}

VertexBijection VertexBijection::Identity(std::uint64_t size) {
  std::vector<VertexId> images(size);
  std::iota(images.begin(), images.end(), VertexId{0});
  return VertexBijection(std::move(images));
}

VertexBijection VertexBijection::Compose(const VertexBijection& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("composing bijections of different sizes");
  }
  std::vector<VertexId> images(size());
  for (VertexId id = 0; id < size(); ++id) images[id] = (*this)(other(id));
  return VertexBijection(std::move(images));
}

VertexBijection VertexBijection::Inverse() const {
  std::vector<VertexId> images(size());
  for (VertexId id = 0; id < size(); ++id) images[(*this)(id)] = id;
  return VertexBijection(std::move(images));
}

DerivedPermutationError::DerivedPermutationError(int first, int second,
                                                 int image)
    : std::invalid_argument("not an automorphism: symbols " +
                            std::to_string(first) + " and " +
                            std::to_string(second) +
                            " both derive the image " + std::to_string(image)),
      first_(first),
      second_(second),
      image_(image) {}

VertexBijection InducedAutomorphism(const CyclePrefixDigraph& graph,
                                    const AlphabetPermutation& w) {
  if (w.size() != graph.params().alphabet_size()) {
    throw std::invalid_argument("permutation size " + std::to_string(w.size()) +
                                " does not match the alphabet");
  }
  std::vector<VertexId> images(graph.vertex_count());
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    images[id] = graph.Rank(w.Relabel(graph.Unrank(id)));
  }
  return VertexBijection(std::move(images));
}

bool IsAutomorphism(const CyclePrefixDigraph& graph, const VertexBijection& b) {
  if (b.size() != graph.vertex_count()) return false;
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    const Vertex image = graph.Unrank(b(u));
    for (const VertexId v : graph.OutNeighborIds(u)) {
      if (!graph.ClassifyArc(image, graph.Unrank(b(v)))) return false;
    }
  }
  return true;
}

bool ArcTypePreserved(const CyclePrefixDigraph& graph,
                      const VertexBijection& b) {
  if (b.size() != graph.vertex_count()) return false;
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    const Vertex tail = graph.Unrank(u);
    const Vertex tail_image = graph.Unrank(b(u));
    for (const Arc& arc : graph.OutNeighbors(tail)) {
      const auto image_label =
          graph.ClassifyArc(tail_image, graph.Unrank(b(graph.Rank(arc.vertex))));
      if (!image_label || image_label->kind != arc.label.kind) return false;
      if (arc.label.is_rotation() && image_label->value != arc.label.value) {
        return false;
      }
    }
  }
  return true;
}

bool PositionsPreserved(const CyclePrefixDigraph& graph,
                        const VertexBijection& b) {
  if (b.size() != graph.vertex_count()) return false;
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    const Vertex tail = graph.Unrank(u);
    const Vertex tail_image = graph.Unrank(b(u));
    for (const Arc& arc : graph.OutNeighbors(tail)) {
      const Vertex head_image = graph.Unrank(b(graph.Rank(arc.vertex)));
      for (int q = 1; q <= tail.size(); ++q) {
        const int p = arc.vertex.PositionOf(tail[q - 1]);
        if (p != 0 && head_image[p - 1] != tail_image[q - 1]) return false;
      }
    }
  }
  return true;
}

AlphabetPermutation DerivedPermutation(const CyclePrefixDigraph& graph,
                                       const VertexBijection& b) {
  if (b.size() != graph.vertex_count()) {
    throw std::invalid_argument("bijection size does not match the digraph");
  }
  const int n = graph.params().alphabet_size();
  const int d = graph.params().d();
  std::vector<int> images(n);
  const Vertex initial = graph.InitialVertex();
  const Vertex initial_image = graph.Unrank(b(graph.Rank(initial)));
  for (int i = 1; i <= d; ++i) images[i - 1] = initial_image[i - 1];
  for (int i = d + 1; i <= n; ++i) {
    const Vertex shifted = graph.Shift(initial, i);
    images[i - 1] = graph.Unrank(b(graph.Rank(shifted)))[0];
  }
  // source_of[s] = first alphabet symbol whose image is s.
  std::vector<int> source_of(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int image = images[i - 1];
    if (source_of[image] != 0) {
      throw DerivedPermutationError(source_of[image], i, image);
    }
    source_of[image] = i;
  }
  return AlphabetPermutation(std::move(images));
}

bool IsCompatible(const CyclePrefixDigraph& graph, const VertexBijection& b,
                  const AlphabetPermutation& w, const Vertex& v) {
  return graph.Unrank(b(graph.Rank(v))) == w.Relabel(v);
}

PropagationResult PropagateCompatibility(const CyclePrefixDigraph& graph,
                                         const VertexBijection& b) {
  PropagationResult result;
  try {
    result.derived = DerivedPermutation(graph, b);
  } catch (const std::invalid_argument& e) {
    result.message = e.what();
    return result;
  }
  const AlphabetPermutation& w = *result.derived;

  const Vertex initial = graph.InitialVertex();
  if (!IsCompatible(graph, b, w, initial)) {
    result.message = "incompatible at the initial vertex";
    return result;
  }
  std::vector<bool> visited(graph.vertex_count(), false);
  std::uint64_t reached = 1;
  const VertexId start = graph.Rank(initial);
  visited[start] = true;
  std::deque<VertexId> queue{start};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const Arc& arc : graph.OutNeighbors(graph.Unrank(x))) {
      ++result.arcs_checked;
      const VertexId y = graph.Rank(arc.vertex);
      if (!IsCompatible(graph, b, w, arc.vertex)) {
        result.failed_tail = x;
        result.failed_head = y;
        result.message = "compatibility lost along " + arc.label.ToString() +
                         " arc " + graph.Unrank(x).ToString() + " -> " +
                         arc.vertex.ToString();
        return result;
      }
      if (!visited[y]) {
        visited[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  result.compatible_everywhere = reached == graph.vertex_count();
  if (!result.compatible_everywhere) {
    result.message = "not every vertex is reachable from the initial vertex";
  }
  return result;
}

namespace {

// Dense arc structure used by the search; knows nothing about words.
struct ArcTable {
  std::uint64_t n = 0;
  std::vector<std::vector<VertexId>> out;
  std::vector<std::vector<VertexId>> in;
  std::vector<std::uint8_t> matrix;

  bool HasArc(VertexId u, VertexId v) const { return matrix[u * n + v] != 0; }
};

ArcTable BuildArcTable(const CyclePrefixDigraph& graph) {
  ArcTable table;
  table.n = graph.vertex_count();
  table.out.resize(table.n);
  table.in.resize(table.n);
  table.matrix.assign(table.n * table.n, 0);
  for (VertexId u = 0; u < table.n; ++u) {
    for (const VertexId v : graph.OutNeighborIds(u)) {
      if (table.matrix[u * table.n + v] != 0) continue;
      table.matrix[u * table.n + v] = 1;
      table.out[u].push_back(v);
      table.in[v].push_back(u);
    }
  }
  for (auto& list : table.out) std::sort(list.begin(), list.end());
  for (auto& list : table.in) std::sort(list.begin(), list.end());
  return table;
}

// Undirected BFS order from vertex 0. For every later vertex, records its
// BFS parent and whether the parent -> vertex arc exists (else
// vertex -> parent does).
struct VisitOrder {
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
  std::vector<bool> forward;
};

VisitOrder BuildVisitOrder(const ArcTable& table) {
  VisitOrder visit;
  std::vector<bool> seen(table.n, false);
  seen[0] = true;
  visit.order.push_back(0);
  visit.parent.push_back(0);
  visit.forward.push_back(true);
  for (std::size_t head = 0; head < visit.order.size(); ++head) {
    const VertexId u = visit.order[head];
    const auto visit_list = [&](const std::vector<VertexId>& list,
                                bool forward) {
      for (const VertexId v : list) {
        if (seen[v]) continue;
        seen[v] = true;
        visit.order.push_back(v);
        visit.parent.push_back(u);
        visit.forward.push_back(forward);
      }
    };
    visit_list(table.out[u], true);
    visit_list(table.in[u], false);
  }
  return visit;
}

class Backtracker {
 public:
  Backtracker(const ArcTable& table, const VisitOrder& visit)
      : table_(table),
        visit_(visit),
        image_(table.n, 0),
        used_(table.n, false) {}

  std::vector<VertexBijection> Run(VertexId root_image) {
    found_.clear();
    if (Consistent(0, root_image)) {
      Assign(0, root_image);
      Extend(1);
      Unassign(0);
    }
    return std::move(found_);
  }

 private:
  void Extend(std::size_t depth) {
    if (depth == visit_.order.size()) {
      if (depth == table_.n) found_.emplace_back(image_);
      return;
    }
    const VertexId parent_image = image_[visit_.parent[depth]];
    const auto& candidates = visit_.forward[depth] ? table_.out[parent_image]
                                                   : table_.in[parent_image];
    for (const VertexId candidate : candidates) {
      if (used_[candidate] || !Consistent(depth, candidate)) continue;
      Assign(depth, candidate);
      Extend(depth + 1);
      Unassign(depth);
    }
  }

  // Arcs between order[depth] and every already-assigned vertex (itself
  // included) must match arcs between their images.
  bool Consistent(std::size_t depth, VertexId candidate) const {
    const VertexId x = visit_.order[depth];
    if (table_.HasArc(x, x) != table_.HasArc(candidate, candidate)) {
      return false;
    }
    for (std::size_t t = 0; t < depth; ++t) {
      const VertexId y = visit_.order[t];
      const VertexId y_image = image_[y];
      if (table_.HasArc(x, y) != table_.HasArc(candidate, y_image) ||
          table_.HasArc(y, x) != table_.HasArc(y_image, candidate)) {
        return false;
      }
    }
    return true;
  }

  void Assign(std::size_t depth, VertexId image) {
    image_[visit_.order[depth]] = image;
    used_[image] = true;
  }
  void Unassign(std::size_t depth) {
    used_[image_[visit_.order[depth]]] = false;
  }

  const ArcTable& table_;
  const VisitOrder& visit_;
  std::vector<VertexId> image_;
  std::vector<bool> used_;
  std::vector<VertexBijection> found_;
};

}  // namespace

std::vector<VertexBijection> BruteForceAutomorphisms(
    const CyclePrefixDigraph& graph, const SearchOptions& options) {
  if (graph.vertex_count() > options.max_vertices) {
    throw ResourceLimitError(graph.params().Name() + " has " +
                             std::to_string(graph.vertex_count()) +
                             " vertices, above the search limit of " +
                             std::to_string(options.max_vertices));
  }
  const ArcTable table = BuildArcTable(graph);
  const VisitOrder visit = BuildVisitOrder(table);

  std::vector<std::vector<VertexBijection>> per_root(table.n);
  ParallelFor(table.n, WorkerCount(options.num_threads),
              [&](std::size_t root) {
                Backtracker search(table, visit);
                per_root[root] = search.Run(root);
              });

  std::vector<VertexBijection> all;
  for (auto& found : per_root) {
    for (auto& b : found) all.push_back(std::move(b));
  }
  std::sort(all.begin(), all.end());
  return all;
}

CertificationReport CertifyTheorem(const CyclePrefixDigraph& graph,
                                   const SearchOptions& options) {
  const int n = graph.params().alphabet_size();
  CertificationReport report(graph.params());
  try {
    report.expected_order = Factorial(n);
  } catch (const std::overflow_error&) {
    report.expected_order = ~std::uint64_t{0};
  }
  if (report.expected_order > options.max_group_order) {
    throw ResourceLimitError("(Delta+1)! = " + std::to_string(n) +
                             "! exceeds the group-order limit of " +
                             std::to_string(options.max_group_order));
  }

  std::vector<VertexBijection> found = BruteForceAutomorphisms(graph, options);
  report.group_order = found.size();
  if (!report.order_matches()) {
    report.failures.push_back("search found " +
                              std::to_string(report.group_order) +
                              " automorphisms, expected " +
                              std::to_string(report.expected_order));
  }

  report.all_are_automorphisms = std::all_of(
      found.begin(), found.end(),
      [&](const VertexBijection& b) { return IsAutomorphism(graph, b); });
  if (!report.all_are_automorphisms) {
    report.failures.push_back("search returned a non-automorphism");
  }

  std::vector<VertexBijection> induced;
  induced.reserve(report.expected_order);
  report.round_trip_holds = true;
  for (const AlphabetPermutation& w : AlphabetPermutation::All(n)) {
    induced.push_back(InducedAutomorphism(graph, w));
    if (DerivedPermutation(graph, induced.back()) != w) {
      report.round_trip_holds = false;
      report.failures.push_back("derived(induced(w)) != w for w = " +
                                w.ToString());
    }
  }
  std::sort(induced.begin(), induced.end());
  report.induced_injective =
      std::adjacent_find(induced.begin(), induced.end()) == induced.end();
  if (!report.induced_injective) {
    report.failures.push_back("two alphabet permutations induce the same map");
  }
  report.sets_equal = found == induced;
  if (!report.sets_equal) {
    report.failures.push_back(
        "brute-forced automorphisms differ from the induced relabelings");
  }

  report.propagation_holds = true;
  report.arc_types_preserved = true;
  for (const VertexBijection& b : found) {
    const PropagationResult propagation = PropagateCompatibility(graph, b);
    if (!propagation.compatible_everywhere) {
      report.propagation_holds = false;
      report.failures.push_back("propagation failed: " + propagation.message);
    }
    if (!ArcTypePreserved(graph, b)) {
      report.arc_types_preserved = false;
      report.failures.push_back("an automorphism changes an arc type");
    }
  }
  return report;
}

}  // namespace cpd
