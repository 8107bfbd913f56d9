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

#include <set>

#include "gtest/gtest.h"

namespace cpd {
namespace {

CyclePrefixDigraph Graph(int delta, int d, int r = 0) {
  return CyclePrefixDigraph(Params::Create(delta, d, r));
}

TEST(CompleteToSnTest, AppendsMissingSymbol) {
  const auto graph = Graph(3, 3);
  EXPECT_EQ(CompleteToSn(graph, Vertex{1, 2, 3}),
            AlphabetPermutation({1, 2, 3, 4}));
  EXPECT_EQ(CompleteToSn(graph, Vertex{4, 3, 1}),
            AlphabetPermutation({4, 3, 1, 2}));
  EXPECT_THROW(CompleteToSn(Graph(3, 2), Vertex{1, 2}), std::invalid_argument);
}

TEST(CompleteToSnTest, BijectiveOntoSymmetricGroup) {
  const auto graph = Graph(3, 3);
  std::set<SnElement> elements;
  for (VertexId id = 0; id < graph.vertex_count(); ++id) {
    const Vertex v = graph.Unrank(id);
    const SnElement element = CompleteToSn(graph, v);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(element.images()[i], v[i]);
    elements.insert(element);
  }
  EXPECT_EQ(elements.size(), 24u);
}

TEST(CycleGeneratorTest, OneLineForm) {
  EXPECT_EQ(CycleGenerator(4, 2), AlphabetPermutation({2, 1, 3, 4}));
  EXPECT_EQ(CycleGenerator(4, 4), AlphabetPermutation({2, 3, 4, 1}));
  EXPECT_EQ(CycleGenerator(4, 1), AlphabetPermutation::Identity(4));
}

TEST(CayleyTest, ArcSetsCoincide) {
  EXPECT_TRUE(CheckCayleyCorrespondence(Graph(2, 2)));
  EXPECT_TRUE(CheckCayleyCorrespondence(Graph(3, 3)));
  EXPECT_TRUE(CheckCayleyCorrespondence(Graph(4, 4)));
  EXPECT_TRUE(CheckCayleyCorrespondence(Graph(5, 5)));
}

TEST(CayleyTest, Preconditions) {
  EXPECT_THROW(CheckCayleyCorrespondence(Graph(3, 2)), std::invalid_argument);
  EXPECT_THROW(CheckCayleyCorrespondence(Graph(4, 4, 1)),
               std::invalid_argument);
}

TEST(KautzTest, Examples) {
  EXPECT_EQ(KautzOutNeighbors(Graph(2, 2), Vertex{1, 2}),
            (std::vector<Vertex>{Vertex{2, 1}, Vertex{3, 1}}));
  EXPECT_EQ(KautzOutNeighbors(Graph(3, 2), Vertex{3, 4}),
            (std::vector<Vertex>{Vertex{1, 3}, Vertex{2, 3}, Vertex{4, 3}}));
  EXPECT_THROW(KautzOutNeighbors(Graph(3, 3), Vertex{1, 2, 3}),
               std::invalid_argument);
}

TEST(KautzTest, MatchesCoreAdjacency) {
  for (int delta = 2; delta <= 7; ++delta) {
    EXPECT_TRUE(KautzAdjacencyMatches(Graph(delta, 2))) << delta;
  }
}

}  // namespace
}  // namespace cpd
