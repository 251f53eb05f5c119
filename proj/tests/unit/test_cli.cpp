#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "corpus.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = blocksieve::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("bound") {
  auto r = run({"bound", "--group-order", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "N_min = 42, d in {2,3}\n");
  r = run({"bound", "--group-order", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["n_min"] == 20);
}

TEST_CASE("solve") {
  auto r = run({"solve", "--dim", "42", "--group-order", "3", "--no-skew-primitives"});
  CHECK(r.code == 0);
  CHECK(r.out.find("feasible") != std::string::npos);
  CHECK(r.out.find("regime: no nontrivial skew-primitives") != std::string::npos);

  r = run({"solve", "--dim", "45", "--group-order", "3", "--no-skew-primitives", "--format", "json"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "infeasible");
  CHECK(j.contains("refutation"));

  r = run({"solve", "--dim", "4", "--group-order", "2", "--non-cosemisimple", "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,1,1) = 2") != std::string::npos);
}

TEST_CASE("scan") {
  auto r = run({"scan", "--group-order", "2", "--t-max", "16", "--no-skew-primitives",
                "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 17);
  CHECK(r.out.starts_with("t,N,verdict,summary\n"));

  r = run({"scan", "--group-order", "2", "--t-max", "16", "--no-skew-primitives"});
  CHECK(r.out.find("excluded t: {1,2,3,4,5,6,7,8,9,11,13,15}") != std::string::npos);

  r = run({"scan", "--group-order", "3", "--t-max", "4", "--auto-nsp", "--format", "csv"});
  CHECK(r.out.starts_with("# regime: auto-nsp"));

  r = run({"scan", "--group-order", "3", "--t-max", "3", "--no-skew-primitives",
           "--format", "markdown"});
  CHECK(r.out.find("| --- |") != std::string::npos);
}

TEST_CASE("orders") {
  auto r = run({"orders", "--dim", "42", "--no-skew-primitives"});
  CHECK(r.code == 0);
  CHECK(r.out.find("admissible group orders:") != std::string::npos);
  r = run({"orders", "--dim", "12", "--no-skew-primitives"});
  CHECK(r.code == 1);
}

TEST_CASE("check") {
  const auto good = temp_file("blocksieve_cli_good.json",
                              R"({"group_order": 2, "blocks": [{"level": 0, "d1": 1, "d2": 1, "dim": 2},
                                                   {"level": 1, "d1": 1, "d2": 1, "dim": 2}]})");
  auto r = run({"check", good, "--non-cosemisimple"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass: no violations") != std::string::npos);
  r = run({"check", good, "--no-skew-primitives"});
  CHECK(r.code == 1);
  CHECK(r.out.find("R7") != std::string::npos);

  const auto bad = temp_file("blocksieve_cli_bad.json", "{");
  r = run({"check", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  r = run({"check", "/nonexistent/blocksieve.json"});
  CHECK(r.code == 2);
}

TEST_CASE("analyze") {
  auto r = run({"analyze", corpus_path("sweedler4.json"), "--non-cosemisimple"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coradical filtration dims: [2, 4]") != std::string::npos);
  CHECK(r.out.find("passes all necessary conditions") != std::string::npos);

  r = run({"analyze", corpus_path("sweedler4.json"), "--no-skew-primitives", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out).contains("q_table"));

  r = run({"analyze", corpus_path("dual_group_algebra_c3.json")});
  CHECK(r.code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"solve", "--dim", "42"}).code == 2);
  CHECK(run({"solve", "--dim", "-3", "--group-order", "3"}).code == 2);
  CHECK(run({"bound", "--group-order", "3", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("analyze") != std::string::npos);
}
