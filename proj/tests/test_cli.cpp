#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PMC_BINARY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Run r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0)
    r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(PMC_TEST_DATA) + "/" + name; }

json golden(const std::string& name) {
  std::ifstream in(data(name));
  REQUIRE(in.good());
  return json::parse(in);
}

// Parses a report and checks that it survives a dump/parse round trip.
json report(const std::string& text) {
  json j = json::parse(text);
  CHECK(json::parse(j.dump()) == j);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.contains("subcommand"));
  if (!j.contains("error")) {
    for (const char* key : {"input", "timing", "result", "invariant_report"})
      CHECK(j.contains(key));
    CHECK(j["timing"].contains("wall_ms"));
  }
  return j;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "pmc_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

} // namespace

TEST_CASE("golden payloads") {
  Run r = run("recognize --input " + data("c6.edges"));
  CHECK(r.code == 0);
  CHECK(report(r.out)["result"] == golden("c6.recognize.json"));

  r = run("solve --problem mwis --input " + data("p7_weighted.edges"));
  CHECK(r.code == 0);
  CHECK(report(r.out)["result"] == golden("p7_weighted.solve.json"));

  r = run("enumerate --what both --format dimacs --input " + data("k33.dimacs"));
  CHECK(r.code == 0);
  CHECK(report(r.out)["result"] == golden("k33.enumerate.json"));
}

TEST_CASE("solve on C6") {
  Run r = run("solve --problem mwis --certify --input " + data("c6.edges"));
  REQUIRE(r.code == 0);
  json j = report(r.out);
  CHECK(j["result"]["weight"] == "3");
  CHECK(j["invariant_report"]["certified"]["status"] == "pass");
  CHECK(j["input"]["digest"].get<std::string>().rfind("sha256:", 0) == 0);

  r = run("solve --problem forest --certify --input " + data("c6.edges"));
  CHECK(report(r.out)["result"]["weight"] == "5");
  r = run("solve --problem maxdeg --k 1 --input " + data("c6.edges"));
  CHECK(report(r.out)["result"]["weight"] == "4");
}

TEST_CASE("error exits") {
  Run r = run("recognize --input " + data("malformed.edges"));
  CHECK(r.code == 1);
  json j = report(r.out);
  CHECK(j["error"]["type"] == "parse_error");
  CHECK(j["error"]["line"] == 4);

  r = run("recognize --input " + data("no_such_file.edges"));
  CHECK(r.code == 1);
  CHECK(report(r.out)["error"]["type"] == "domain");

  r = run("solve --problem knapsack --input " + data("c6.edges"));
  CHECK(r.code == 1);

  r = run("frobnicate");
  CHECK(r.code == 1);
  CHECK(report(r.out)["error"]["type"] == "usage");

  // The weighted P7 is not P7-free.
  r = run("color --t 7 --input " + data("p7_weighted.edges"));
  CHECK(r.code == 1);
  j = report(r.out);
  CHECK(j["error"]["type"] == "induced_path");
  CHECK(j["error"]["induced_path"].size() == 7);

  r = run("complete-bipartite --format dimacs --input " + data("k33.dimacs"));
  CHECK(r.code == 0);
  CHECK(report(r.out)["result"]["steps"] == 0);
}

TEST_CASE("generated fixture through the pipeline") {
  fs::path f = scratch("fixture.edges");
  Run g1 = run("gen --kind p7free_bipartite --n 24 --seed 11 --output " + f.string());
  REQUIRE(g1.code == 0);
  Run g2 = run("gen --kind p7free_bipartite --n 24 --seed 11");
  std::ifstream in(f);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == g2.out);

  Run r = run("complete-bipartite --check-invariants --input " + f.string());
  REQUIRE(r.code == 0);
  json j = report(r.out);
  for (const auto& [name, e] : j["invariant_report"].items())
    CHECK_MESSAGE(e["status"] == "pass", name);
  CHECK(j["result"]["steps"].get<int>() == static_cast<int>(j["result"]["trace"].size()));

  r = run("verify --input " + f.string());
  CHECK(r.code == 0);
  j = report(r.out);
  CHECK(j["result"]["checks_failed"] == 0);
  CHECK(j["result"]["checks_run"].get<int>() >= 5);

  r = run("solve --bags completed --problem mwis --input " + f.string());
  CHECK(r.code == 0);
  Run plain = run("solve --bags pmcs --problem mwis --input " + f.string());
  CHECK(report(r.out)["result"]["weight"] == report(plain.out)["result"]["weight"]);
}

TEST_CASE("bag files") {
  fs::path bags = scratch("c6.bags");
  std::ofstream(bags) << "# one bag holding everything\n0 1 2 3 4 5\n";
  Run r = run("solve --bags file --bags-file " + bags.string() + " --input " + data("c6.edges"));
  CHECK(r.code == 0);
  CHECK(report(r.out)["result"]["weight"] == "3");

  std::ofstream(bags) << "0 1\n";
  r = run("solve --bags file --bags-file " + bags.string() + " --input " + data("c6.edges"));
  CHECK(r.code == 1);
}

TEST_CASE("params and colouring") {
  Run r = run("params --input " + data("c6.edges"));
  json j = report(r.out);
  CHECK(j["result"]["treewidth"] == 2);
  CHECK(j["result"]["treedepth"] == 4);
  CHECK(j["result"]["degeneracy"] == 2);

  r = run("color --t 7 --input " + data("c6.edges"));
  CHECK(r.code == 0);
  j = report(r.out);
  CHECK(j["result"]["num_colors"].get<int>() <= j["result"]["bound"].get<int>());

  r = run("recognize --pretty --input " + data("c6.edges"));
  CHECK(r.code == 0);
  CHECK(r.out.find("result.c6_count") != std::string::npos);
}

TEST_CASE("bench") {
  fs::path empty = scratch("empty_corpus");
  fs::remove_all(empty);
  fs::create_directories(empty);
  Run r = run("bench --corpus " + empty.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  fs::path corpus = scratch("corpus");
  fs::remove_all(corpus);
  fs::create_directories(corpus);
  for (int s = 0; s < 5; ++s)
    run("gen --kind chordal_bipartite --n 16 --seed " + std::to_string(s) + " --output " +
        (corpus / ("g" + std::to_string(s) + ".edges")).string());
  fs::path csv = scratch("bench.csv");
  Run a = run("bench --corpus " + corpus.string() + " --csv " + csv.string());
  Run b = run("bench --corpus " + corpus.string());
  CHECK(a.code == 0);
  std::istringstream la(a.out), lb(b.out);
  std::string x, y;
  int lines = 0;
  while (std::getline(la, x) && std::getline(lb, y)) {
    json ja = report(x), jb = report(y);
    CHECK(ja["result"]["file"] == "g" + std::to_string(lines) + ".edges");
    CHECK(ja["result"]["stages"]["minseps"]["count"] == jb["result"]["stages"]["minseps"]["count"]);
    CHECK(ja["result"]["stages"]["solve_mwis"]["weight"] == jb["result"]["stages"]["solve_mwis"]["weight"]);
    ++lines;
  }
  CHECK(lines == 5);
  std::ifstream in(csv);
  int rows = 0;
  while (std::getline(in, x))
    ++rows;
  CHECK(rows == 6);
}
