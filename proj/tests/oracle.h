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

// Test-only reference model. Deliberately naive and independent of the
// library: words are plain vectors, vertices are enumerated by recursion,
// adjacency is written straight from the definition, distances come from
// Floyd-Warshall.

#ifndef CPD_TESTS_ORACLE_H_
#define CPD_TESTS_ORACLE_H_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cpd::oracle {

using Word = std::vector<int>;

inline void Extend(int n, int d, Word& prefix, std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == d) {
    out.push_back(prefix);
    return;
  }
  for (int s = 1; s <= n; ++s) {
    if (std::find(prefix.begin(), prefix.end(), s) != prefix.end()) continue;
    prefix.push_back(s);
    Extend(n, d, prefix, out);
    prefix.pop_back();
  }
}

// All D-permutations of {1..n} in lexicographic order.
inline std::vector<Word> EnumerateWords(int n, int d) {
  std::vector<Word> out;
  Word prefix;
  Extend(n, d, prefix, out);
  return out;
}

// Successors with a tag: ('R', k) or ('S', m).
inline std::vector<std::pair<Word, std::pair<char, int>>> Successors(
    const Word& x, int delta, int r) {
  const int d = static_cast<int>(x.size());
  std::vector<std::pair<Word, std::pair<char, int>>> out;
  for (int k = r + 2; k <= d; ++k) {
    Word y{x[k - 1]};
    for (int i = 0; i < d; ++i) {
      if (i != k - 1) y.push_back(x[i]);
    }
    out.push_back({y, {'R', k}});
  }
  for (int m = 1; m <= delta + 1; ++m) {
    if (std::find(x.begin(), x.end(), m) != x.end()) continue;
    Word y{m};
    y.insert(y.end(), x.begin(), x.end() - 1);
    out.push_back({y, {'S', m}});
  }
  return out;
}

struct Model {
  std::vector<Word> words;
  std::map<Word, int> index;
  std::set<std::pair<int, int>> arcs;
  // dist[u][v], -1 if unreachable.
  std::vector<std::vector<int>> dist;
};

inline Model BuildModel(int delta, int d, int r) {
  Model model;
  model.words = EnumerateWords(delta + 1, d);
  const int n = static_cast<int>(model.words.size());
  for (int i = 0; i < n; ++i) model.index[model.words[i]] = i;
  for (int i = 0; i < n; ++i) {
    for (const auto& [y, tag] : Successors(model.words[i], delta, r)) {
      model.arcs.insert({i, model.index.at(y)});
    }
  }
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) dist[i][i] = 0;
  for (const auto& [u, v] : model.arcs) dist[u][v] = std::min(dist[u][v], 1);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  for (auto& row : dist) {
    for (int& x : row) {
      if (x >= kInf) x = -1;
    }
  }
  model.dist = std::move(dist);
  return model;
}

}  // namespace cpd::oracle

#endif  // CPD_TESTS_ORACLE_H_
