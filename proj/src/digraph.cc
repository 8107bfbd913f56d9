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

#include "cpd/digraph.h"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <limits>
#include <utility>

namespace cpd {

std::uint64_t FallingFactorial(int n, int k) {
  if (k < 0 || n < 0) throw std::invalid_argument("negative falling factorial");
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) {
    const auto factor = static_cast<std::uint64_t>(n - i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("falling factorial overflows 64 bits");
    }
    result *= factor;
  }
  return result;
}

std::uint64_t Factorial(int n) { return FallingFactorial(n, n); }

Params Params::Create(int delta, int d, int r) {
  if (d < 1) throw std::invalid_argument("D must be at least 1");
  if (r < 0) throw std::invalid_argument("r must be non-negative");
  if (delta < d) {
    throw std::invalid_argument("Delta must be at least D (got Delta=" +
                                std::to_string(delta) +
                                ", D=" + std::to_string(d) + ")");
  }
  if (d < r + 2) {
    throw std::invalid_argument("D must be at least r + 2 (got D=" +
                                std::to_string(d) +
                                ", r=" + std::to_string(r) + ")");
  }
  std::uint64_t count = 0;
  try {
    count = FallingFactorial(delta + 1, d);
  } catch (const std::overflow_error&) {
    throw std::invalid_argument("vertex count (Delta+1)_D overflows 64 bits");
  }
  if (count > kLargeInstanceWarning) {
    std::clog << "warning: Gamma_" << delta << "(" << d << ",-" << r
              << ") has " << count << " vertices\n";
  }
  return Params(delta, d, r, count);
}

std::string Params::Name() const {
  std::string name = "Gamma_" + std::to_string(delta_) + "(" +
                     std::to_string(d_);
  if (r_ != 0) name += ",-" + std::to_string(r_);
  return name + ")";
}

Vertex Vertex::Parse(std::string_view text) {
  std::vector<int> symbols;
  if (text.empty()) throw std::invalid_argument("empty vertex string");
  std::size_t begin = 0;
  while (true) {
    const std::size_t dot = text.find('.', begin);
    const std::string_view token =
        text.substr(begin, dot == std::string_view::npos ? dot : dot - begin);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed vertex string '" +
                                  std::string(text) + "'");
    }
    symbols.push_back(value);
    if (dot == std::string_view::npos) break;
    begin = dot + 1;
  }
  return Vertex(std::move(symbols));
}

int Vertex::PositionOf(int symbol) const {
  const auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  return it == symbols_.end() ? 0
                              : static_cast<int>(it - symbols_.begin()) + 1;
}

std::string Vertex::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(symbols_[i]);
  }
  return out;
}

std::string ArcLabel::ToString() const {
  return (is_rotation() ? "R" : "S") + std::to_string(value);
}

Vertex RotatePrefix(const Vertex& v, int k) {
  if (k < 2 || k > v.size()) {
    throw std::invalid_argument("rotation index " + std::to_string(k) +
                                " outside [2, " + std::to_string(v.size()) +
                                "]");
  }
  std::vector<int> out(v.symbols().begin(), v.symbols().end());
  std::rotate(out.begin(), out.begin() + (k - 1), out.begin() + k);
  return Vertex(std::move(out));
}

Vertex PrependShift(const Vertex& v, int m) {
  if (m < 1) throw std::invalid_argument("shift symbol must be positive");
  if (v.Contains(m)) {
    throw std::invalid_argument("shift symbol " + std::to_string(m) +
                                " already occurs in " + v.ToString());
  }
  std::vector<int> out;
  out.reserve(v.size());
  out.push_back(m);
  out.insert(out.end(), v.symbols().begin(), v.symbols().end() - 1);
  return Vertex(std::move(out));
}

CyclePrefixDigraph::CyclePrefixDigraph(Params params)
    : params_(std::move(params)) {
  const int n = params_.alphabet_size();
  const int d = params_.d();
  suffix_counts_.resize(d);
  for (int i = 0; i < d; ++i) {
    suffix_counts_[i] = FallingFactorial(n - 1 - i, d - 1 - i);
  }
}

bool CyclePrefixDigraph::IsValid(const Vertex& v) const {
  if (v.size() != params_.d()) return false;
  std::vector<bool> seen(params_.alphabet_size() + 1, false);
  for (const int s : v.symbols()) {
    if (s < 1 || s > params_.alphabet_size() || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

void CyclePrefixDigraph::Validate(const Vertex& v) const {
  if (v.size() != params_.d()) {
    throw std::invalid_argument("vertex " + v.ToString() + " has length " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(params_.d()));
  }
  std::vector<bool> seen(params_.alphabet_size() + 1, false);
  for (const int s : v.symbols()) {
    if (s < 1 || s > params_.alphabet_size()) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " in " +
                                  v.ToString() + " outside [1, " +
                                  std::to_string(params_.alphabet_size()) +
                                  "]");
    }
    if (seen[s]) {
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " repeated in " + v.ToString());
    }
    seen[s] = true;
  }
}

VertexId CyclePrefixDigraph::Rank(const Vertex& v) const {
  Validate(v);
  const auto symbols = v.symbols();
  VertexId rank = 0;
  for (int i = 0; i < v.size(); ++i) {
    // Unused symbols smaller than x_i.
    int smaller = symbols[i] - 1;
    for (int j = 0; j < i; ++j) {
      if (symbols[j] < symbols[i]) --smaller;
    }
    rank += static_cast<VertexId>(smaller) * suffix_counts_[i];
  }
  return rank;
}

Vertex CyclePrefixDigraph::Unrank(VertexId id) const {
  if (id >= vertex_count()) {
    throw std::out_of_range("vertex id " + std::to_string(id) +
                            " out of range for " + params_.Name());
  }
  const int n = params_.alphabet_size();
  std::vector<bool> used(n + 1, false);
  std::vector<int> symbols(params_.d());
  for (int i = 0; i < params_.d(); ++i) {
    auto skip = static_cast<std::int64_t>(id / suffix_counts_[i]);
    id %= suffix_counts_[i];
    int s = 1;
    for (;; ++s) {
      if (used[s]) continue;
      if (skip-- == 0) break;
    }
    used[s] = true;
    symbols[i] = s;
  }
  return Vertex(std::move(symbols));
}

Vertex CyclePrefixDigraph::InitialVertex() const {
  std::vector<int> symbols(params_.d());
  for (int i = 0; i < params_.d(); ++i) symbols[i] = i + 1;
  return Vertex(std::move(symbols));
}

Vertex CyclePrefixDigraph::Rotate(const Vertex& v, int k) const {
  if (k < params_.r() + 2 || k > params_.d()) {
    throw std::invalid_argument("rotation R" + std::to_string(k) +
                                " is not an arc of " + params_.Name());
  }
  return RotatePrefix(v, k);
}

Vertex CyclePrefixDigraph::Shift(const Vertex& v, int m) const {
  if (m > params_.alphabet_size()) {
    throw std::invalid_argument("shift symbol " + std::to_string(m) +
                                " outside the alphabet");
  }
  return PrependShift(v, m);
}

bool CyclePrefixDigraph::IsLegal(const ArcLabel& label, const Vertex& v) const {
  if (label.is_rotation()) {
    return label.value >= params_.r() + 2 && label.value <= params_.d();
  }
  return label.value >= 1 && label.value <= params_.alphabet_size() &&
         !v.Contains(label.value);
}

Vertex CyclePrefixDigraph::Apply(const ArcLabel& label, const Vertex& v) const {
  return label.is_rotation() ? Rotate(v, label.value) : Shift(v, label.value);
}

std::vector<Arc> CyclePrefixDigraph::OutNeighbors(const Vertex& v) const {
  std::vector<Arc> arcs;
  arcs.reserve(params_.degree());
  for (int k = params_.r() + 2; k <= params_.d(); ++k) {
    arcs.push_back({ArcLabel::Rotation(k), RotatePrefix(v, k)});
  }
  for (int m = 1; m <= params_.alphabet_size(); ++m) {
    if (!v.Contains(m)) arcs.push_back({ArcLabel::Shift(m), PrependShift(v, m)});
  }
  return arcs;
}

std::vector<Arc> CyclePrefixDigraph::InNeighbors(const Vertex& v) const {
  std::vector<Arc> arcs;
  arcs.reserve(params_.degree());
  const auto symbols = v.symbols();
  for (int k = params_.r() + 2; k <= params_.d(); ++k) {
    // Undo R_k: move the front symbol back to position k.
    std::vector<int> u(symbols.begin(), symbols.end());
    std::rotate(u.begin(), u.begin() + 1, u.begin() + k);
    arcs.push_back({ArcLabel::Rotation(k), Vertex(std::move(u))});
  }
  for (int t = 1; t <= params_.alphabet_size(); ++t) {
    if (v.Contains(t)) continue;
    std::vector<int> u(symbols.begin() + 1, symbols.end());
    u.push_back(t);
    arcs.push_back({ArcLabel::Shift(symbols[0]), Vertex(std::move(u))});
  }
  return arcs;
}

std::optional<ArcLabel> CyclePrefixDigraph::ClassifyArc(const Vertex& u,
                                                        const Vertex& v) const {
  if (u.size() != v.size() || u.size() == 0) return std::nullopt;
  const int k = u.PositionOf(v[0]);
  if (k == 0) {
    const ArcLabel shift = ArcLabel::Shift(v[0]);
    if (IsLegal(shift, u) && PrependShift(u, v[0]) == v) return shift;
    return std::nullopt;
  }
  if (k < 2) return std::nullopt;
  const ArcLabel rotation = ArcLabel::Rotation(k);
  if (IsLegal(rotation, u) && RotatePrefix(u, k) == v) return rotation;
  return std::nullopt;
}

std::vector<VertexId> CyclePrefixDigraph::OutNeighborIds(VertexId id) const {
  std::vector<VertexId> ids;
  ids.reserve(params_.degree());
  for (const Arc& arc : OutNeighbors(Unrank(id))) ids.push_back(Rank(arc.vertex));
  return ids;
}

std::vector<VertexId> CyclePrefixDigraph::InNeighborIds(VertexId id) const {
  std::vector<VertexId> ids;
  ids.reserve(params_.degree());
  for (const Arc& arc : InNeighbors(Unrank(id))) ids.push_back(Rank(arc.vertex));
  return ids;
}

}  // namespace cpd
