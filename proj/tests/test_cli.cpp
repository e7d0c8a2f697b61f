#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CURVEDRIFT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data_flag() { return std::string("--data ") + CURVEDRIFT_DATA_FILE; }

}  // namespace

TEST_CASE("bound") {
  const auto r = run("bound --family magic --n 7");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound"] == "1/23");
  CHECK(j["m"] == 4);
  CHECK(j["r"] == 23);
  CHECK(run("bound --family magic --n 3").code == 1);
  CHECK(run("bound --family nope --n 7").code != 0);
  CHECK(run("bound --family torus-even --n 9").code == 1);
  const auto h = nlohmann::json::parse(run("bound --family hyperelliptic --g 4").out);
  CHECK(h["bound"] == "1/7");
}

TEST_CASE("determinism") {
  const auto a = run("bound --family whitehead-odd --n 11");
  const auto b = run("bound --family whitehead-odd --n 11");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("report --n-range 4..6").out == run("report --n-range 4..6").out);
}

TEST_CASE("sweep") {
  const std::string path = "cli_sweep_test.csv";
  CHECK(run("sweep --family magic --n-range 4..20 --out " + path).code == 0);
  std::ifstream in(path);
  std::string line;
  int rows = 0;
  std::getline(in, line);
  CHECK(line == "group,param,lower,upper,consistent,provenance_id");
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 17);
  std::remove(path.c_str());
}

TEST_CASE("verify suites") {
  const auto occ = run("verify --suite occupancy --n 6");
  CHECK(occ.code == 0);
  CHECK(occ.out.find("max_disjoint_exponent: 14") != std::string::npos);
  CHECK(run("verify --suite homology " + data_flag()).code == 0);
  CHECK(run("verify --suite homology --data /nonexistent.json").code == 1);
  CHECK(run("verify --suite crosscheck --n 30").code == 0);
  CHECK(run("verify --suite dynnikov").code == 0);
  CHECK(run("verify --suite bogus").code != 0);
}

TEST_CASE("catalog and report") {
  const auto c = run("catalog");
  CHECK(c.code == 0);
  CHECK(c.out.find("beta_magic") != std::string::npos);
  const auto r = run("report --n-range 4..5 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).is_array());
}
