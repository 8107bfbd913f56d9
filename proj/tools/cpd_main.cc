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

// cpd: generate, export, analyze and certify cycle prefix digraphs.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 size guard hit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

#include "CLI11.hpp"
#include "cpd/analytics.h"
#include "cpd/automorphism.h"
#include "cpd/digraph.h"
#include "cpd/export.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr std::uint64_t kExportLimit = 1'000'000;
constexpr std::uint64_t kAnalyzeLimit = 1'000'000;
constexpr std::uint64_t kCertifyLimit = 200;

struct InstanceFlags {
  int delta = 0;
  int d = 0;
  int r = 0;

  void Register(CLI::App& app) {
    app.add_option("--delta", delta, "Delta: alphabet has Delta+1 symbols")
        ->required();
    app.add_option("--d", d, "D: word length")->required();
    app.add_option("--r", r, "r: rotations R_k need k >= r+2")
        ->capture_default_str();
  }

  cpd::CyclePrefixDigraph Graph() const {
    return cpd::CyclePrefixDigraph(cpd::Params::Create(delta, d, r));
  }
};

const char* YesNo(bool value) { return value ? "yes" : "no"; }

std::string FormatPath(const cpd::Path& path) {
  std::string out = path.front().ToString();
  for (std::size_t i = 0; i < path.labels.size(); ++i) {
    out += " -[" + path.labels[i].ToString() + "]-> " +
           path.vertices[i + 1].ToString();
  }
  return out;
}

int RunInfo(const InstanceFlags& flags, bool json) {
  const cpd::Params params =
      cpd::Params::Create(flags.delta, flags.d, flags.r);
  if (json) {
    nlohmann::ordered_json doc = {
        {"name", params.Name()},
        {"delta", params.delta()},
        {"d", params.d()},
        {"r", params.r()},
        {"alphabet_size", params.alphabet_size()},
        {"vertex_count", params.vertex_count()},
        {"degree", params.degree()},
        {"claimed_diameter", params.claimed_diameter()}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "instance: " << params.Name() << '\n'
              << "alphabet size: " << params.alphabet_size() << '\n'
              << "vertex count: " << params.vertex_count() << '\n'
              << "degree: " << params.degree() << '\n'
              << "claimed diameter: " << params.claimed_diameter() << '\n';
  }
  return kExitOk;
}

int RunExport(const InstanceFlags& flags, const std::string& format_name,
              const std::string& out_path, bool force) {
  const cpd::ExportFormat format = cpd::ParseExportFormat(format_name);
  const cpd::CyclePrefixDigraph graph = flags.Graph();
  if (!force && graph.vertex_count() > kExportLimit) {
    throw cpd::ResourceLimitError("refusing to export " +
                                  std::to_string(graph.vertex_count()) +
                                  " vertices without --force");
  }
  if (out_path.empty() || out_path == "-") {
    cpd::WriteGraph(graph, format, std::cout);
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kExitUsage;
  }
  cpd::WriteGraph(graph, format, out);
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing " << out_path << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int RunAnalyze(const InstanceFlags& flags, bool force) {
  const cpd::CyclePrefixDigraph graph = flags.Graph();
  const cpd::Params& params = graph.params();
  cpd::AnalysisOptions options;
  options.max_vertices =
      force ? std::numeric_limits<std::uint64_t>::max() : kAnalyzeLimit;

  const bool regular = cpd::IsDegreeRegular(graph);
  const bool connected = cpd::IsStronglyConnected(graph);
  const auto eccentricities = cpd::AllEccentricities(graph, options);
  bool connected_everywhere = true;
  bool uniform = true;
  int max_eccentricity = 0;
  for (const auto& e : eccentricities) {
    if (!e) {
      connected_everywhere = false;
      uniform = false;
      break;
    }
    max_eccentricity = std::max(max_eccentricity, *e);
    uniform = uniform && e == eccentricities.front();
  }
  const bool diameter_matches =
      connected_everywhere && max_eccentricity == params.claimed_diameter();

  std::cout << "instance: " << params.Name() << '\n'
            << "vertex count: " << params.vertex_count() << '\n'
            << "degree: " << params.degree()
            << " (regular: " << YesNo(regular) << ")\n"
            << "strongly connected: " << YesNo(connected) << '\n'
            << "diameter: "
            << (connected_everywhere ? std::to_string(max_eccentricity) : "infinite")
            << " (claimed " << params.claimed_diameter() << ": "
            << (diameter_matches ? "match" : "MISMATCH") << ")\n"
            << "uniform eccentricity: " << YesNo(uniform) << '\n';
  const bool pass = regular && connected && diameter_matches;
  std::cout << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitOk : kExitCheckFailed;
}

int RunCertify(const InstanceFlags& flags, bool force) {
  const cpd::CyclePrefixDigraph graph = flags.Graph();
  cpd::SearchOptions options;
  if (force) {
    options.max_vertices = std::numeric_limits<std::uint64_t>::max();
    options.max_group_order = std::numeric_limits<std::uint64_t>::max();
  } else {
    options.max_vertices = kCertifyLimit;
  }
  const cpd::CertificationReport report = cpd::CertifyTheorem(graph, options);
  std::cout << "instance: " << graph.params().Name() << '\n'
            << "automorphisms found: " << report.group_order << '\n'
            << "expected (Delta+1)!: " << report.expected_order << " ("
            << graph.params().alphabet_size() << "!)\n"
            << "all verified automorphisms: "
            << YesNo(report.all_are_automorphisms) << '\n'
            << "relabeling injective: " << YesNo(report.induced_injective)
            << '\n'
            << "found set equals relabelings: " << YesNo(report.sets_equal)
            << '\n'
            << "derived permutation round trip: "
            << YesNo(report.round_trip_holds) << '\n'
            << "compatibility propagation: " << YesNo(report.propagation_holds)
            << '\n'
            << "arc types preserved: " << YesNo(report.arc_types_preserved)
            << '\n';
  for (const std::string& failure : report.failures) {
    std::cout << "failure: " << failure << '\n';
  }
  std::cout << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int RunRoute(const InstanceFlags& flags, const std::string& from_text,
             const std::string& to_text, bool greedy) {
  const cpd::CyclePrefixDigraph graph = flags.Graph();
  const cpd::Vertex from = cpd::Vertex::Parse(from_text);
  const cpd::Vertex to = cpd::Vertex::Parse(to_text);
  graph.Validate(from);
  graph.Validate(to);
  if (greedy && graph.params().r() != 0) {
    throw std::invalid_argument("--greedy requires r = 0");
  }
  const cpd::Path shortest = cpd::ShortestPath(graph, from, to);
  std::cout << "bfs length: " << shortest.length() << '\n'
            << "bfs path: " << FormatPath(shortest) << '\n';
  if (greedy) {
    const cpd::Path route = cpd::GreedyRoute(graph, from, to);
    std::cout << "greedy length: " << route.length() << '\n'
              << "greedy path: " << FormatPath(route) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle prefix digraphs: construction, metrics, automorphisms"};
  app.require_subcommand(1);

  InstanceFlags flags;
  bool json = false;
  bool force = false;
  bool greedy = false;
  std::string format = "edgelist";
  std::string out_path;
  std::string from_text;
  std::string to_text;

  CLI::App* info = app.add_subcommand("info", "Order, degree, claimed diameter");
  flags.Register(*info);
  info->add_flag("--json", json, "Print JSON");

  CLI::App* export_cmd =
      app.add_subcommand("export", "Write the digraph to a file");
  flags.Register(*export_cmd);
  export_cmd->add_option("--format", format, "edgelist | dot | json")
      ->capture_default_str();
  export_cmd->add_option("--out", out_path, "Output path (default stdout)");
  export_cmd->add_flag("--force", force, "Lift the size guard");

  CLI::App* analyze =
      app.add_subcommand("analyze", "Diameter, connectivity, regularity");
  flags.Register(*analyze);
  analyze->add_flag("--force", force, "Lift the size guard");

  CLI::App* certify = app.add_subcommand(
      "certify", "Check Aut = S_{Delta+1} by exhaustive search");
  flags.Register(*certify);
  certify->add_flag("--force", force, "Lift the size guards");

  CLI::App* route = app.add_subcommand("route", "Shortest and greedy routes");
  flags.Register(*route);
  route->add_option("from", from_text, "Source vertex, e.g. 1.2.3")->required();
  route->add_option("to", to_text, "Target vertex")->required();
  route->add_flag("--greedy", greedy, "Also print the greedy route (r = 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) return RunInfo(flags, json);
    if (*export_cmd) return RunExport(flags, format, out_path, force);
    if (*analyze) return RunAnalyze(flags, force);
    if (*certify) return RunCertify(flags, force);
    if (*route) return RunRoute(flags, from_text, to_text, greedy);
  } catch (const cpd::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
