#pragma once

#include "pmc/graph.hpp"
#include "pmc/graph_io.hpp"
#include "pmc/problem.hpp"
#include "pmc/recognition.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace pmc::cli {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json to_json(const VertexSet& s);
json to_json(const std::vector<VertexSet>& sets);
json to_json(const std::vector<Edge>& edges);
json to_json(const InducedCycle& c);
json to_json(const SolveResult& r);

struct LoadedInput {
  std::string path; // "-" for stdin
  std::string digest;
  GraphInput graph;
  double parse_ms = 0;
};

LoadedInput load_input(const std::string& path, GraphFormat format);

std::string sha256_hex(const std::string& bytes);

// Outcome of one invariant check: "pass", "fail" or "skipped".
struct InvariantReport {
  json entries = json::object();
  void pass(const std::string& name, const std::string& detail = {});
  void fail(const std::string& name, const std::string& detail);
  void skip(const std::string& name, const std::string& why);
  bool any_failed() const;
};

struct RunReport {
  RunReport(std::string sub, std::optional<LoadedInput> in)
      : subcommand(std::move(sub)), input(std::move(in)) {}

  std::string subcommand;
  std::optional<LoadedInput> input;
  double wall_ms = 0;
  json result = json::object();
  InvariantReport invariants;

  json to_json() const;
};

// Human-readable rendering for --pretty: one "key: value" line per leaf.
std::string render_pretty(const json& j);

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace pmc::cli
