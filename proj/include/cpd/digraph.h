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

// Cycle prefix digraphs Gamma_Delta(D, -r).
//
// A vertex is a D-permutation x_1 x_2 ... x_D: a word of D distinct symbols
// drawn from the alphabet {1, ..., Delta + 1}. Symbols are 1-based everywhere
// in this library. Each vertex has Delta - r successors:
//
//   rotation R_k:  x_k x_1 ... x_{k-1} x_{k+1} ... x_D   for r + 2 <= k <= D
//   shift    S_m:  m x_1 ... x_{D-1}                     for m not in the word
//
// Vertices are identified by their rank in the lexicographic order of all
// D-permutations, so a graph with (Delta + 1)_D vertices is addressed by the
// dense range [0, (Delta + 1)_D). No adjacency is stored: neighbors are
// computed arithmetically from the word.

#ifndef CPD_DIGRAPH_H_
#define CPD_DIGRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cpd {

using VertexId = std::uint64_t;

// Thrown when an instance exceeds a configured size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (n)_k = n (n - 1) ... (n - k + 1). Throws std::overflow_error if the
// result does not fit in 64 bits.
std::uint64_t FallingFactorial(int n, int k);

// n!, with the same overflow contract as FallingFactorial.
std::uint64_t Factorial(int n);

// The validated parameter triple (Delta, D, r).
class Params {
 public:
  // Instances above this many vertices trigger a warning on std::clog.
  static constexpr std::uint64_t kLargeInstanceWarning = 10'000'000;

  // Throws std::invalid_argument unless Delta >= D >= r + 2, D >= 1, r >= 0.
  static Params Create(int delta, int d, int r = 0);

  int delta() const { return delta_; }
  int d() const { return d_; }
  int r() const { return r_; }
  int alphabet_size() const { return delta_ + 1; }
  int degree() const { return delta_ - r_; }
  int claimed_diameter() const { return d_ + r_; }
  std::uint64_t vertex_count() const { return vertex_count_; }

  // "Gamma_3(3)" or "Gamma_4(4,-1)".
  std::string Name() const;

  bool operator==(const Params&) const = default;

 private:
  Params(int delta, int d, int r, std::uint64_t vertex_count)
      : delta_(delta), d_(d), r_(r), vertex_count_(vertex_count) {}

  int delta_;
  int d_;
  int r_;
  std::uint64_t vertex_count_;
};

// A word of symbols. Validity against a particular alphabet is checked by
// CyclePrefixDigraph::Validate, not here.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> symbols) : symbols_(std::move(symbols)) {}
  Vertex(std::initializer_list<int> symbols) : symbols_(symbols) {}

  // Parses "s1.s2.....sD". Throws std::invalid_argument on malformed input.
  static Vertex Parse(std::string_view text);

  std::span<const int> symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  // 0-based index.
  int operator[](int index) const { return symbols_[index]; }

  bool Contains(int symbol) const { return PositionOf(symbol) != 0; }
  // 1-based position of `symbol`, or 0 when absent.
  int PositionOf(int symbol) const;

  std::string ToString() const;

  auto operator<=>(const Vertex&) const = default;

 private:
  std::vector<int> symbols_;
};

// Classification of an arc: which operation produced it.
struct ArcLabel {
  enum class Kind { kRotation, kShift };

  Kind kind = Kind::kRotation;
  // Rotation index k for rotations, the prepended symbol m for shifts.
  int value = 0;

  static ArcLabel Rotation(int k) { return {Kind::kRotation, k}; }
  static ArcLabel Shift(int m) { return {Kind::kShift, m}; }

  bool is_rotation() const { return kind == Kind::kRotation; }
  bool is_shift() const { return kind == Kind::kShift; }

  // "R3" or "S4".
  std::string ToString() const;

  auto operator<=>(const ArcLabel&) const = default;
};

// An arc seen from one endpoint. For out-neighbors `vertex` is the head; for
// in-neighbors it is the tail, and `label` applied to it yields the query.
struct Arc {
  ArcLabel label;
  Vertex vertex;

  bool operator==(const Arc&) const = default;
};

// R_k without any legality restriction beyond 2 <= k <= |v|. Proof replay
// (distance facts, the symbol-preserving paths) needs rotations that a
// restricted graph with r > 0 does not contain.
Vertex RotatePrefix(const Vertex& v, int k);

// m x_1 ... x_{D-1}. Throws std::invalid_argument if m occurs in v or m < 1.
Vertex PrependShift(const Vertex& v, int m);

class CyclePrefixDigraph {
 public:
  explicit CyclePrefixDigraph(Params params);

  const Params& params() const { return params_; }
  std::uint64_t vertex_count() const { return params_.vertex_count(); }

  bool IsValid(const Vertex& v) const;
  // Throws std::invalid_argument naming the offending symbol.
  void Validate(const Vertex& v) const;

  // Lexicographic rank among all D-permutations of the alphabet.
  VertexId Rank(const Vertex& v) const;
  // Inverse of Rank. Throws std::out_of_range if id >= vertex_count().
  Vertex Unrank(VertexId id) const;

  // The word 1 2 ... D, rank 0.
  Vertex InitialVertex() const;

  // Rotation restricted to the arcs of this graph: r + 2 <= k <= D.
  Vertex Rotate(const Vertex& v, int k) const;
  Vertex Shift(const Vertex& v, int m) const;

  bool IsLegal(const ArcLabel& label, const Vertex& v) const;
  // Throws std::invalid_argument if the label is not legal at v.
  Vertex Apply(const ArcLabel& label, const Vertex& v) const;

  // Exactly Delta - r arcs: rotations by ascending k, then shifts by
  // ascending m.
  std::vector<Arc> OutNeighbors(const Vertex& v) const;
  // Exactly Delta - r arcs, rotations by ascending k then shifts by
  // ascending dropped symbol.
  std::vector<Arc> InNeighbors(const Vertex& v) const;

  // The unique label taking u to v, or nullopt if (u, v) is not an arc.
  std::optional<ArcLabel> ClassifyArc(const Vertex& u, const Vertex& v) const;

  // Id-level neighbor lists in the same order as OutNeighbors/InNeighbors.
  std::vector<VertexId> OutNeighborIds(VertexId id) const;
  std::vector<VertexId> InNeighborIds(VertexId id) const;

 private:
  Params params_;
  // suffix_counts_[i] = (n - 1 - i)_(D - 1 - i): the number of completions
  // of a fixed prefix of length i + 1.
  std::vector<std::uint64_t> suffix_counts_;
};

}  // namespace cpd

#endif  // CPD_DIGRAPH_H_
