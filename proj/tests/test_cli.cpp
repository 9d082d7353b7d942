#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

// Integration tests driving the quartic-brauer binary named by QB_CLI_PATH.

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("QB_CLI_PATH");
  REQUIRE_MESSAGE(p != nullptr, "QB_CLI_PATH must point at the quartic-brauer binary");
  return p;
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + cli_path() + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("purity example matches the documented output") {
  auto r = run("purity --element A --mode geometric");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "PASS: 0/24 nontrivial residues\n");
}

TEST_CASE("screen example matches the documented output") {
  auto r = run("screen --coeffs 1,1,2,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "in_W=false; verdict=inconclusive\n");
}

TEST_CASE("lines lists the 24 lines in every format") {
  auto tsv = run("lines --format tsv");
  CHECK(tsv.exit_code == 0);
  CHECK(count_lines(tsv.out) == 25);  // header + 24 rows
  CHECK(tsv.out.substr(0, tsv.out.find('\n')) == "id\tfiber\tfield\tx\ty\tz\tw\tequations");
  auto js = run("lines --format json");
  CHECK(js.exit_code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["schema"] == 1);
  CHECK(j["lines"].size() == 24);
  CHECK(j["lines"][0]["id"] == "1");
}

TEST_CASE("divisors reproduces the vertical divisor rows") {
  auto r = run("divisors --format tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("F\t1\t1") != std::string::npos);
  CHECK(r.out.find("G\t") != std::string::npos);
}

TEST_CASE("tables emits 24 rows per variant") {
  for (int v : {1, 2, 3}) {
    auto r = run("tables --variant " + std::to_string(v) + " --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 25);
  }
}

TEST_CASE("faddeev verdicts match the recorded expectations") {
  auto z8 = run("faddeev --variant 1 --field Qzeta8 --format json");
  CHECK(z8.exit_code == 0);
  auto j = nlohmann::json::parse(z8.out);
  CHECK(j["schema"] == 1);
  CHECK(j["descends"] == false);
  auto m = run("faddeev --variant 1 --field M --format json");
  CHECK(m.exit_code == 0);
  CHECK(nlohmann::json::parse(m.out)["descends"] == true);
}

TEST_CASE("obstruction json carries the invariants and a verified derivation") {
  auto r = run("obstruction --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["inv_P"] == "1/2");
  CHECK(j["inv_Q"] == "0");
  CHECK(j["sum"] == "1/2");
  CHECK(j["steps_P"].size() > 5);
  CHECK(j["steps_Q"].size() == 4);
  for (const auto& s : j["steps_P"]) CHECK(s["verified"] == true);
  for (const auto& s : j["steps_Q"]) CHECK(s["verified"] == true);
}

TEST_CASE("batch screen reads quadruples from stdin") {
  std::string cmd = "printf '1 1 2 2\\n1 1 6 10\\n' | " + cli_path() + " screen --stdin 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  CHECK(WEXITSTATUS(pclose(f)) == 0);
  CHECK(count_lines(out) == 3);
  CHECK(out.find("1\t1\t2\t2\tfalse\tinconclusive") != std::string::npos);
  CHECK(out.find("1\t1\t6\t10\ttrue\tST_holds_by_ccprop") != std::string::npos);
}

TEST_CASE("identical invocations are byte-stable") {
  for (const char* args : {"tables --variant 1 --format tsv", "obstruction --format json",
                           "lines --format json", "dyadic-demo --format json"}) {
    auto a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("QB_PRECISION and --precision override the dyadic precision") {
  auto env = run("dyadic-demo", "QB_PRECISION=60 ");
  CHECK(env.exit_code == 0);
  CHECK(env.out.find("precision=60") != std::string::npos);
  auto flag = run("dyadic-demo --precision 64");
  CHECK(flag.exit_code == 0);
  CHECK(flag.out.find("precision=64") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("purity --element A --no-such-flag").exit_code == 1);
  CHECK(run("").exit_code == 1);
  CHECK(run("screen").exit_code == 1);
}

TEST_CASE("selftest runs every paper-anchored check and exits 0") {
  auto r = run("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(count_lines(r.out) >= 20);
}
