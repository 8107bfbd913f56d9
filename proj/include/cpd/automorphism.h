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

// Automorphisms of cycle prefix digraphs.
//
// Every permutation w of the alphabet relabels words symbol by symbol and
// thereby induces an automorphism. Conversely, any automorphism b determines
// a "derived" alphabet permutation from the images of 1 2 ... D and of its
// shift successors i 1 2 ... (D-1), and b agrees with the relabeling by that
// permutation on every vertex. So Aut(Gamma_Delta(D, -r)) is the symmetric
// group on Delta + 1 letters.
//
// This header provides both sides of that statement: the constructive
// route (InducedAutomorphism, DerivedPermutation, PropagateCompatibility)
// and an independent backtracking search (BruteForceAutomorphisms) that
// only looks at arcs. CertifyTheorem cross-checks the two.

#ifndef CPD_AUTOMORPHISM_H_
#define CPD_AUTOMORPHISM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpd/digraph.h"

namespace cpd {

// A permutation of {1, ..., n} in one-line form: image(i) = w(i).
class AlphabetPermutation {
 public:
  // Throws std::invalid_argument unless `images` is a permutation of 1..n.
  explicit AlphabetPermutation(std::vector<int> images);

  static AlphabetPermutation Identity(int n);
  // All n! permutations in lexicographic order.
  static std::vector<AlphabetPermutation> All(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int symbol) const { return images_[symbol - 1]; }
  std::span<const int> images() const { return images_; }

  // (this o other)(i) = this(other(i)).
  AlphabetPermutation Compose(const AlphabetPermutation& other) const;
  AlphabetPermutation Inverse() const;

  // Applies the permutation symbol-wise to a word.
  Vertex Relabel(const Vertex& v) const;

  std::string ToString() const;

  auto operator<=>(const AlphabetPermutation&) const = default;

 private:
  std::vector<int> images_;
};

// A bijection on vertex ids, stored densely.
class VertexBijection {
 public:
  // Throws std::invalid_argument unless `images` is a permutation of
  // [0, images.size()).
  explicit VertexBijection(std::vector<VertexId> images);

  static VertexBijection Identity(std::uint64_t size);

  std::uint64_t size() const { return images_.size(); }
  VertexId operator()(VertexId id) const { return images_[id]; }
  std::span<const VertexId> images() const { return images_; }

  // (this o other)(v) = this(other(v)).
  VertexBijection Compose(const VertexBijection& other) const;
  VertexBijection Inverse() const;

  auto operator<=>(const VertexBijection&) const = default;

 private:
  std::vector<VertexId> images_;
};

// Raised by DerivedPermutation when the bijection is not an automorphism and
// two alphabet symbols would receive the same image.
class DerivedPermutationError : public std::invalid_argument {
 public:
  DerivedPermutationError(int first, int second, int image);

  // The two alphabet symbols mapped to `image`.
  int first() const { return first_; }
  int second() const { return second_; }
  int image() const { return image_; }

 private:
  int first_;
  int second_;
  int image_;
};

VertexBijection InducedAutomorphism(const CyclePrefixDigraph& graph,
                                    const AlphabetPermutation& w);

// True iff `b` has the right size and maps every arc to an arc. For a
// bijection on a finite digraph this also forces non-arcs to non-arcs.
bool IsAutomorphism(const CyclePrefixDigraph& graph, const VertexBijection& b);

// True iff every arc keeps its kind under `b`, and every rotation R_k maps
// to a rotation with the same k. Shift symbols may change.
bool ArcTypePreserved(const CyclePrefixDigraph& graph,
                      const VertexBijection& b);

// True iff for every arc u -> L(u) and every symbol carried over from
// position q of u to position p of L(u), the symbol at position q of b(u)
// sits at position p of b(L(u)).
bool PositionsPreserved(const CyclePrefixDigraph& graph,
                        const VertexBijection& b);

// w(i) is the i-th symbol of b(1 2 ... D) for i <= D, and the first symbol
// of b(i 1 2 ... (D-1)) for i > D. Throws DerivedPermutationError on a
// symbol collision and std::invalid_argument on a size mismatch.
AlphabetPermutation DerivedPermutation(const CyclePrefixDigraph& graph,
                                       const VertexBijection& b);

// b(v) == w(v_1) ... w(v_D).
bool IsCompatible(const CyclePrefixDigraph& graph, const VertexBijection& b,
                  const AlphabetPermutation& w, const Vertex& v);

struct PropagationResult {
  // Absent when the derived permutation could not be formed.
  std::optional<AlphabetPermutation> derived;
  // True iff b agrees with the relabeling by `derived` on every vertex.
  bool compatible_everywhere = false;
  // Arcs x -> y inspected with x already known compatible.
  std::uint64_t arcs_checked = 0;
  // On failure: the first arc whose head broke compatibility.
  std::optional<VertexId> failed_tail;
  std::optional<VertexId> failed_head;
  std::string message;
};

// Starts from 1 2 ... D, where b and its derived permutation agree by
// construction, and walks the digraph breadth-first. At every arc out of a
// compatible vertex it checks that the head is compatible too, for both
// rotation and shift arcs. Success on every arc, together with strong
// connectivity, means b is the relabeling by its derived permutation.
PropagationResult PropagateCompatibility(const CyclePrefixDigraph& graph,
                                         const VertexBijection& b);

struct SearchOptions {
  // Instances above this many vertices throw ResourceLimitError.
  std::uint64_t max_vertices = 200;
  // CertifyTheorem enumerates all (Delta+1)! relabelings; above this group
  // order it throws ResourceLimitError.
  std::uint64_t max_group_order = 40'320;
  // 0 picks WorkerCount().
  int num_threads = 0;
};

// Every arc-preserving bijection of the vertex set, sorted lexicographically
// by image array (hence first by the image of 1 2 ... D).
//
// Backtracking: vertices are visited in undirected BFS order from vertex 0.
// The image of vertex 0 ranges over all vertices; each later vertex takes
// its candidates from the out- or in-neighbors of its BFS parent's image,
// and a candidate is kept only if arcs in both directions agree with every
// vertex assigned so far. Branches over the image of vertex 0 run in
// parallel.
std::vector<VertexBijection> BruteForceAutomorphisms(
    const CyclePrefixDigraph& graph, const SearchOptions& options = {});

struct CertificationReport {
  explicit CertificationReport(Params p) : params(std::move(p)) {}

  Params params;
  std::uint64_t group_order = 0;
  std::uint64_t expected_order = 0;
  bool all_are_automorphisms = false;
  // w -> induced(w) is injective on the symmetric group.
  bool induced_injective = false;
  // {brute-forced} == {induced(w)} exactly.
  bool sets_equal = false;
  // derived(induced(w)) == w for every w.
  bool round_trip_holds = false;
  // PropagateCompatibility succeeds on every brute-forced automorphism.
  bool propagation_holds = false;
  bool arc_types_preserved = false;
  std::vector<std::string> failures;

  bool order_matches() const { return group_order == expected_order; }
  bool passed() const {
    return failures.empty() && order_matches() && all_are_automorphisms &&
           induced_injective && sets_equal && round_trip_holds &&
           propagation_holds && arc_types_preserved;
  }
};

CertificationReport CertifyTheorem(const CyclePrefixDigraph& graph,
                                   const SearchOptions& options = {});

}  // namespace cpd

#endif  // CPD_AUTOMORPHISM_H_
