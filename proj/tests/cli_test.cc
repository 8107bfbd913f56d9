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

// Runs the cpd binary end to end and checks output and exit codes.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct Result {
  int exit_code = -1;
  std::string out;
};

Result RunCli(const std::string& args) {
  const std::string command = std::string(CPD_CLI_PATH) + " " + args + " 2>/dev/null";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  while (const std::size_t n = fread(buffer, 1, sizeof(buffer), pipe)) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliTest, Info) {
  Result r = RunCli("info --delta 3 --d 3 --r 0");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(Contains(r.out, "vertex count: 24"));
  EXPECT_TRUE(Contains(r.out, "degree: 3"));
  EXPECT_TRUE(Contains(r.out, "claimed diameter: 3"));

  r = RunCli("info --delta 4 --d 4 --r 1 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["vertex_count"], 120);
  EXPECT_EQ(doc["degree"], 3);
  EXPECT_EQ(doc["claimed_diameter"], 5);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli("info --delta 2 --d 3 --r 0").exit_code, 2);
  EXPECT_EQ(RunCli("info --delta 3").exit_code, 2);
  EXPECT_EQ(RunCli("bogus").exit_code, 2);
  EXPECT_EQ(RunCli("export --delta 2 --d 2 --format gml").exit_code, 2);
  EXPECT_EQ(RunCli("route --delta 3 --d 3 1.2.2 1.2.3").exit_code, 2);
  EXPECT_EQ(RunCli("route --delta 3 --d 3 1.x.3 1.2.3").exit_code, 2);
  EXPECT_EQ(RunCli("route --delta 4 --d 4 --r 1 1.2.3.4 2.3.4.5 --greedy")
                .exit_code,
            2);
  EXPECT_EQ(RunCli("export --delta 2 --d 2 --out /nonexistent/dir/x").exit_code,
            2);
}

TEST(CliTest, SizeGuards) {
  EXPECT_EQ(RunCli("certify --delta 5 --d 4").exit_code, 3);
  EXPECT_EQ(RunCli("certify --delta 8 --d 2").exit_code, 3);
}

TEST(CliTest, ExportIsByteStable) {
  const auto dir = std::filesystem::temp_directory_path() / "cpd_cli_test";
  std::filesystem::create_directories(dir);
  for (const char* format : {"edgelist", "dot", "json"}) {
    const auto a = dir / (std::string("a.") + format);
    const auto b = dir / (std::string("b.") + format);
    ASSERT_EQ(RunCli("export --delta 3 --d 3 --format " + std::string(format) +
                  " --out " + a.string())
                  .exit_code,
              0);
    ASSERT_EQ(RunCli("export --delta 3 --d 3 --format " + std::string(format) +
                  " --out " + b.string())
                  .exit_code,
              0);
    EXPECT_FALSE(ReadFile(a).empty());
    EXPECT_EQ(ReadFile(a), ReadFile(b)) << format;
  }
  const Result stdout_run = RunCli("export --delta 3 --d 3");
  EXPECT_EQ(stdout_run.out, ReadFile(dir / "a.edgelist"));
  std::filesystem::remove_all(dir);
}

TEST(CliTest, Analyze) {
  Result r = RunCli("analyze --delta 4 --d 4 --r 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(Contains(r.out, "diameter: 5 (claimed 5: match)"));
  r = RunCli("analyze --delta 3 --d 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(Contains(r.out, "strongly connected: yes"));
  EXPECT_TRUE(Contains(r.out, "degree: 3 (regular: yes)"));
}

TEST(CliTest, Certify) {
  for (const auto& [flags, order] :
       {std::pair{"--delta 3 --d 2", "24"}, std::pair{"--delta 3 --d 3", "24"},
        std::pair{"--delta 4 --d 3", "120"}}) {
    const Result r = RunCli(std::string("certify ") + flags);
    EXPECT_EQ(r.exit_code, 0) << flags;
    EXPECT_TRUE(Contains(r.out, std::string("automorphisms found: ") + order));
    EXPECT_TRUE(Contains(r.out, "result: PASS"));
  }
}

TEST(CliTest, Route) {
  Result r = RunCli("route --delta 5 --d 3 1.2.3 4.5.6 --greedy");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(Contains(r.out, "bfs length: 3"));
  EXPECT_TRUE(Contains(r.out, "greedy length: 3"));
  EXPECT_TRUE(Contains(
      r.out, "greedy path: 1.2.3 -[S6]-> 6.1.2 -[S5]-> 5.6.1 -[S4]-> 4.5.6"));

  r = RunCli("route --delta 3 --d 3 1.2.3 1.2.3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(Contains(r.out, "bfs length: 0"));

  r = RunCli("route --delta 3 --d 3 1.2.3 1.2.4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(Contains(r.out, "bfs length: 3"));
}

}  // namespace
