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

// Special members of the family, checked against independent models:
//
//  * Delta = D: Gamma_D(D) is the Cayley digraph of S_n, n = D + 1, with
//    generators the cycles (1 2 ... k), 2 <= k <= n.
//  * D = 2: Gamma_Delta(2) is the Kautz digraph K(Delta, 2).

#ifndef CPD_FAMILIES_H_
#define CPD_FAMILIES_H_

#include <vector>

#include "cpd/automorphism.h"
#include "cpd/digraph.h"

namespace cpd {

// A vertex of Gamma_D(D) completed by its single missing symbol: a full
// permutation of the alphabet in one-line form.
using SnElement = AlphabetPermutation;

// Appends the missing symbol. Throws std::invalid_argument unless
// Delta == D.
SnElement CompleteToSn(const CyclePrefixDigraph& graph, const Vertex& v);

// The Cayley generator (1 2 ... k) as a permutation of {1, ..., n}.
AlphabetPermutation CycleGenerator(int n, int k);

// Action convention: a vertex is identified with its position map
// rho(s) = position of symbol s in the completed word. The arc for
// generator g = (1 2 ... k) goes from rho to g o rho (generator on the
// left). Under this convention R_k realizes (1 2 ... k) for k <= D and the
// shift realizes (1 2 ... n).
//
// Builds the Cayley arc set from permutation products alone and compares it
// with the digraph's arcs, including which generator each arc uses.
// Throws std::invalid_argument unless Delta == D and r == 0.
bool CheckCayleyCorrespondence(const CyclePrefixDigraph& graph);

// Kautz adjacency in prepend form: all y_1 y_2 with y_2 = v_1 and
// y_1 != y_2, by ascending y_1. Throws std::invalid_argument unless D == 2.
std::vector<Vertex> KautzOutNeighbors(const CyclePrefixDigraph& graph,
                                      const Vertex& v);

// Vertex-by-vertex equality of the Kautz adjacency and OutNeighbors.
bool KautzAdjacencyMatches(const CyclePrefixDigraph& graph);

}  // namespace cpd

#endif  // CPD_FAMILIES_H_
