#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stern/cli.hpp"

using stern::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval prints the canonical polynomial") {
  const Result r = run({"eval", "--base", "3", "--n", "13"});
  CHECK(r.code == 0);
  CHECK(r.out == "z1^(t1 + t1^2) + z1^(t1^2)*z3 + z3^(1 + t3)\n");

  const Result j = run({"eval", "--base", "3", "--n", "4", "--format", "json"});
  CHECK(j.code == 0);
  const nlohmann::json poly = nlohmann::json::parse(j.out);
  CHECK(poly["base"] == 3);
  CHECK(poly["terms"].size() == 2);
}

TEST_CASE("table output is deterministic") {
  const Result a = run({"table", "--base", "3", "--from", "1", "--to", "27"});
  const Result b = run({"table", "--base", "3", "--from", "1", "--to", "27"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 27);
  CHECK(a.out.substr(0, 4) == "1\t1\n");
}

TEST_CASE("enumerate matches the documented line format") {
  const Result r = run({"enumerate", "--base", "3", "--n", "9"});
  CHECK(r.code == 0);
  CHECK(r.out == "9 = 3^2\n9 = 3^1*3\n9 = 3^1*2 + 3^0*3\n");
  const Result zero = run({"enumerate", "--base", "2", "--n", "0"});
  CHECK(zero.out == "0 =\n");
}

TEST_CASE("count handles decimal, digit and file input") {
  CHECK(run({"count", "--base", "3", "--n", "10"}).out == "3\n");
  CHECK(run({"count", "--base", "2", "--digits", "101"}).out == "3\n");

  const std::string path = "cli_count_input.tmp";
  {
    std::ofstream f(path);
    f << "10\n";
  }
  CHECK(run({"count", "--base", "3", "--n", "@" + path}).out == "3\n");
  std::remove(path.c_str());

  const Result bench =
      run({"count", "--base", "2", "--digits", "10110", "--bench"});
  CHECK(bench.code == 0);
  CHECK(bench.out.find("digits=5") != std::string::npos);
  CHECK(bench.out.find("digits_per_second=") != std::string::npos);
}

TEST_CASE("json formats parse and follow the schema") {
  const Result table =
      run({"table", "--base", "2", "--from", "1", "--to", "4", "--format",
           "json"});
  CHECK(table.code == 0);
  const nlohmann::json rows = nlohmann::json::parse(table.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["n"] == 1);
  CHECK(rows[3]["poly"]["base"] == 2);

  const Result en =
      run({"enumerate", "--base", "3", "--n", "9", "--format", "json"});
  const nlohmann::json expansions = nlohmann::json::parse(en.out);
  REQUIRE(expansions.size() == 3);
  CHECK(expansions[0]["mults"] == nlohmann::json({0, 0, 1}));
}

TEST_CASE("convergent output") {
  const Result ones =
      run({"convergent", "--base", "2", "--l", "4", "--which", "odd",
           "--at-ones"});
  CHECK(ones.code == 0);
  CHECK(ones.out == "34/21\n");

  const Result sym =
      run({"convergent", "--base", "3", "--l", "1", "--which", "odd"});
  CHECK(sym.code == 0);
  CHECK(sym.out == "num: z1^(t1) + z3\nden: 1\n");
}

TEST_CASE("verify runs and reports") {
  const Result r = run({"verify", "--suite", "ring", "--base-max", "2",
                        "--trials", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS ring.") != std::string::npos);
  CHECK(r.out.find("OK ") != std::string::npos);

  const Result j = run({"verify", "--suite", "cf", "--l-max", "2", "--format",
                        "json"});
  CHECK(j.code == 0);
  const nlohmann::json report = nlohmann::json::parse(j.out);
  CHECK(report.is_array());
  for (const auto& check : report) CHECK(check["pass"] == true);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"count", "--base", "2"}).code == 2);  // neither --n nor --digits
  CHECK(run({"count", "--base", "2", "--n", "5", "--digits", "101"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"eval", "--base", "1", "--n", "3"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
  CHECK(run({"table", "--base", "3", "--from", "9", "--to", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
