#include "report.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace pmc::cli {

json to_json(const VertexSet& s) { return s.to_vector(); }

json to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const VertexSet& s : sets)
    out.push_back(to_json(s));
  return out;
}

json to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (Edge e : edges)
    out.push_back({e.u, e.v});
  return out;
}

json to_json(const InducedCycle& c) { return c.vertices; }

json to_json(const SolveResult& r) {
  json out{{"problem", std::string(problem_name(r.problem))},
           {"weight", to_string(r.weight)},
           {"witness", to_json(r.witness)},
           {"conditional", r.conditional}};
  if (r.problem == Problem::MaxDegree)
    out["k"] = r.k;
  if (r.conditional)
    out["reason"] = r.reason;
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

LoadedInput load_input(const std::string& path, GraphFormat format) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw DomainError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Stopwatch sw;
  GraphInput g = parse_graph(text, format);
  return LoadedInput{path, "sha256:" + sha256_hex(text), std::move(g), sw.ms()};
}

void InvariantReport::pass(const std::string& name, const std::string& detail) {
  entries[name] = {{"status", "pass"}, {"detail", detail}};
}

void InvariantReport::fail(const std::string& name, const std::string& detail) {
  entries[name] = {{"status", "fail"}, {"detail", detail}};
}

void InvariantReport::skip(const std::string& name, const std::string& why) {
  entries[name] = {{"status", "skipped"}, {"detail", why}};
}

bool InvariantReport::any_failed() const {
  for (const auto& [name, e] : entries.items())
    if (e["status"] == "fail")
      return true;
  return false;
}

json RunReport::to_json() const {
  json out{{"schema_version", kSchemaVersion}, {"subcommand", subcommand}};
  if (input) {
    out["input"] = {{"path", input->path},
                    {"digest", input->digest},
                    {"n", input->graph.graph.n()},
                    {"m", input->graph.graph.edge_count()}};
    out["timing"] = {{"parse_ms", input->parse_ms}, {"wall_ms", wall_ms}};
  } else {
    out["input"] = nullptr;
    out["timing"] = {{"wall_ms", wall_ms}};
  }
  out["result"] = result;
  out["invariant_report"] = invariants.entries;
  return out;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << std::left << std::setw(32) << prefix << ' ' << (j.is_string() ? j.get<std::string>() : j.dump())
       << '\n';
  }
}

} // namespace

std::string render_pretty(const json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

} // namespace pmc::cli
