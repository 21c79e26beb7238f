// End-to-end checks of the covering-lab executable: subcommands, exit codes,
// stdout lines and the JSON report format.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(COVERING_LAB_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(COVERING_LAB_DATA) + "/" + name; }

std::string tmpfile(const std::string& name) { return "/tmp/covering_lab_test_" + name; }

}  // namespace

TEST_CASE("verify on the classic system") {
  auto r = run("verify " + data("classic5.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("covering: true") != std::string::npos);
  CHECK(r.out.find("distinct: true") != std::string::npos);
  CHECK(r.out.find("exact: false") != std::string::npos);
  CHECK(r.out.find("sum: 4/3") != std::string::npos);
}

TEST_CASE("verify answers no with exit 0 on a non-covering") {
  auto r = run("verify " + data("noncovering.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("covering: false") != std::string::npos);
  // --strict maps the no to exit 1
  auto rs = run("--strict verify " + data("noncovering.json"));
  CHECK(rs.exit_code == 1);
}

TEST_CASE("malformed json exits 2 with a diagnostic") {
  std::string bad = tmpfile("bad.json");
  std::ofstream(bad) << "[{\"a\": 0, \"m\": }]";
  auto r = run("verify " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("input error") != std::string::npos);
  auto r2 = run("verify /nonexistent/file.json");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("density and delta") {
  auto r = run("density " + data("noncovering.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("density: 2/3") != std::string::npos);
  auto rs = run("density --smooth-bound 2 " + data("noncovering.json"));
  CHECK(rs.out.find("density: 1/2") != std::string::npos);
  auto rd = run("delta " + data("noncovering.json"));
  CHECK(rd.out.find("delta: 1/3") != std::string::npos);
  auto rc = run("delta " + data("classic5.json"));
  CHECK(rc.out.find("delta: 0") != std::string::npos);
}

TEST_CASE("distort run with report") {
  std::string rep = tmpfile("distort.json");
  auto r = run("--report " + rep + " distort " + data("classic5.json") +
               " --profile 2^2,3 --delta 1/4,1/4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("chain: pass") != std::string::npos);
  std::ifstream in(rep);
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j["tool"] == "covering-lab");
  CHECK(j["config"]["precision"].is_number());
  CHECK(j["result"]["levels"].size() == 2);
  // exact rationals as strings, mass exactly one
  CHECK(j["result"]["levels"][0]["mass"] == "1");
}

TEST_CASE("lemmas subsets") {
  auto r = run("lemmas --only constants");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("tail-estimate: pass") != std::string::npos);
  auto rd = run("lemmas --only difference --delta 1/100");
  CHECK(rd.exit_code == 0);
  CHECK(rd.out.find("difference-bound: pass") != std::string::npos);
  auto rs = run("lemmas --only smooth");
  CHECK(rs.exit_code == 0);
  auto rb = run("lemmas --only nonsense");
  CHECK(rb.exit_code == 2);
}

TEST_CASE("construct both modes") {
  std::string out = tmpfile("constructed.json");
  auto r = run("construct --min-modulus 3 --epsilon 1/4 -o " + out);
  CHECK(r.exit_code == 0);
  auto rv = run("verify " + out);
  CHECK(rv.out.find("covering: true") != std::string::npos);
  CHECK(rv.out.find("distinct: true") != std::string::npos);
  auto rg = run("construct --greedy --t 2 --steps 5 -o " + out);
  CHECK(rg.exit_code == 0);
  CHECK(rg.out.find("sum = ") != std::string::npos);
  // greedy prefixes are partial coverings; the file still parses
  auto rv2 = run("verify " + out);
  CHECK(rv2.exit_code == 0);
  CHECK(rv2.out.find("covering: false") != std::string::npos);
}

TEST_CASE("full-scale streaming run with checkpoint resume") {
  std::string ck = tmpfile("checkpoint.txt");
  std::remove(ck.c_str());
  auto r1 = run("--full --sieve-limit 2000 --checkpoint-stride 100 lemmas --checkpoint " + ck);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("sum_1_over_p") != std::string::npos);
  // truncate to a mid checkpoint and resume to the same limit
  std::ifstream in(ck);
  std::string line, keep;
  int kept = 0;
  while (std::getline(in, line) && kept < 2) {
    keep += line + "\n";
    ++kept;
  }
  in.close();
  std::ofstream(ck) << keep;
  auto r2 = run("--full --sieve-limit 2000 --checkpoint-stride 100 lemmas --checkpoint " + ck);
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("resuming after") != std::string::npos);
  // final enclosures agree with the uninterrupted run
  auto pos1 = r1.out.find("sum_1_over_p");
  auto pos2 = r2.out.find("sum_1_over_p");
  CHECK(r1.out.substr(pos1, 60) == r2.out.substr(pos2, 60));
}
