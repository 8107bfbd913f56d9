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

#include "cpd/export.h"

#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace cpd {
namespace {

CyclePrefixDigraph Graph(int delta, int d, int r = 0) {
  return CyclePrefixDigraph(Params::Create(delta, d, r));
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(EdgeListTest, SmallInstance) {
  const auto lines = Lines(RenderGraph(Graph(2, 2), ExportFormat::kEdgeList));
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[0], "1.2 -> 2.1  [R2]");
  EXPECT_EQ(lines[1], "1.2 -> 3.1  [S3]");
  EXPECT_EQ(lines[11], "3.2 -> 1.3  [S1]");
}

TEST(EdgeListTest, RestrictedInstanceHasNoShortRotations) {
  const std::string text =
      RenderGraph(Graph(4, 4, 1), ExportFormat::kEdgeList);
  EXPECT_EQ(Lines(text).size(), 360u);
  EXPECT_EQ(text.find("[R2]"), std::string::npos);
}

TEST(DotTest, WellFormed) {
  const auto lines = Lines(RenderGraph(Graph(3, 3), ExportFormat::kDot));
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines.front(), "digraph \"Gamma_3(3)\" {");
  EXPECT_EQ(lines.back(), "}");
  const std::regex node(R"(  "\d+(\.\d+)*";)");
  const std::regex edge(R"(  "\d+(\.\d+)*" -> "\d+(\.\d+)*" \[label="[RS]\d+"\];)");
  int nodes = 0;
  int edges = 0;
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    if (std::regex_match(lines[i], node)) {
      ++nodes;
    } else if (std::regex_match(lines[i], edge)) {
      ++edges;
    } else {
      ADD_FAILURE() << "unexpected DOT line: " << lines[i];
    }
  }
  EXPECT_EQ(nodes, 24);
  EXPECT_EQ(edges, 72);
}

TEST(JsonTest, Schema) {
  const auto doc =
      nlohmann::json::parse(RenderGraph(Graph(3, 2), ExportFormat::kJson));
  EXPECT_EQ(doc["params"]["delta"], 3);
  EXPECT_EQ(doc["params"]["d"], 2);
  EXPECT_EQ(doc["params"]["r"], 0);
  EXPECT_EQ(doc["params"]["vertex_count"], 12);
  ASSERT_EQ(doc["vertices"].size(), 12u);
  EXPECT_EQ(doc["vertices"][0], "1.2");
  EXPECT_EQ(doc["vertices"][11], "4.3");
  ASSERT_EQ(doc["arcs"].size(), 36u);
  EXPECT_EQ(doc["arcs"][0]["from"], "1.2");
  EXPECT_EQ(doc["arcs"][0]["to"], "2.1");
  EXPECT_EQ(doc["arcs"][0]["label"], "R2");
}

TEST(ExportTest, Deterministic) {
  for (const auto format :
       {ExportFormat::kEdgeList, ExportFormat::kDot, ExportFormat::kJson}) {
    EXPECT_EQ(RenderGraph(Graph(4, 3), format),
              RenderGraph(Graph(4, 3), format));
  }
}

TEST(ExportTest, ParseFormat) {
  EXPECT_EQ(ParseExportFormat("edgelist"), ExportFormat::kEdgeList);
  EXPECT_EQ(ParseExportFormat("dot"), ExportFormat::kDot);
  EXPECT_EQ(ParseExportFormat("json"), ExportFormat::kJson);
  EXPECT_THROW(ParseExportFormat("gml"), std::invalid_argument);
}

}  // namespace
}  // namespace cpd
