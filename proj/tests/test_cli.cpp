#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// run the binary through the shell, capturing stdout; `redirect` may merge or
// silence stderr and `env` may prepend variable assignments
RunResult run(const std::string& args, const std::string& env = "",
              const std::string& redirect = "2>/dev/null") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(BAXTER_CLI_PATH) + " " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  res.exit_code = WEXITSTATUS(status);
  return res;
}

}  // namespace

TEST_CASE("count formula prints the bare value") {
  RunResult r = run("count formula --n 1 --k 0 --p 1 --r 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2\n");

  RunResult csv = run("count formula --n 1 --k 0 --p 1 --r 1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "count\n2\n");
}

TEST_CASE("count fpf methods agree") {
  RunResult r = run("count fpf --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "56\n");
  for (const char* method : {"formula", "paths", "brute"}) {
    RunResult m = run(std::string("count fpf --n 3 --method ") + method);
    CHECK(m.exit_code == 0);
    CHECK(m.out == "12\n");
  }
}

TEST_CASE("census output is sorted and stable") {
  const std::string expected = "n,k,p,r,count\n1,0,1,1,2\n1,1,1,0,1\n0,0,3,0,1\n";
  RunResult csv = run("count census --size 3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == expected);
  RunResult text = run("count census --size 3");
  CHECK(text.out == expected);

  RunResult one = run("count census --size 6 --jobs 1");
  RunResult many = run("count census --size 6 --jobs 3");
  CHECK(one.exit_code == 0);
  CHECK(many.exit_code == 0);
  CHECK(one.out == many.out);
}

TEST_CASE("json envelopes carry decimal string counts") {
  RunResult r = run("count census --size 3 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "count census");
  CHECK(doc["status"] == "ok");
  CHECK(doc["parameters"]["size"] == "3");
  REQUIRE(doc["results"].size() == 3);
  CHECK(doc["results"][0]["n"] == 1);
  CHECK(doc["results"][0]["count"] == "2");

  RunResult f = run("count formula --n 1 --k 0 --p 1 --r 1 --format json");
  auto fdoc = nlohmann::json::parse(f.out);
  CHECK(fdoc["command"] == "count formula");
  CHECK(fdoc["results"][0]["count"] == "2");

  RunResult v = run("verify sinkcode --max-i 3 --format json");
  CHECK(v.exit_code == 0);
  auto vdoc = nlohmann::json::parse(v.out);
  CHECK(vdoc["command"] == "verify sinkcode");
  CHECK(vdoc["status"] == "verified");
}

TEST_CASE("verify commands pass at small sizes") {
  RunResult sink = run("verify sinkcode --max-i 3");
  CHECK(sink.exit_code == 0);
  CHECK(sink.out.substr(0, 4) == "PASS");

  RunResult lgv = run("verify lgv --max-size 4 --random 10 --max-steps 12");
  CHECK(lgv.exit_code == 0);

  RunResult inv = run("verify involution --max-n 3");
  CHECK(inv.exit_code == 0);

  RunResult ident = run("verify identities --max-n 8");
  CHECK(ident.exit_code == 0);

  RunResult bij = run("verify bijection --max-size 5");
  CHECK(bij.exit_code == 0);

  RunResult formula = run("verify formula --max-size 5 --format csv");
  CHECK(formula.exit_code == 0);
  CHECK(formula.out.substr(0, 24) == "item,expected,actual,ok\n");
}

TEST_CASE("byte-identical output across repeat runs") {
  const std::string cmd = "verify lgv --max-size 4 --random 10 --max-steps 12 --format json";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("count fpf --bogus 3").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("count census --size 3 --format yaml").exit_code == 2);
  CHECK(run("count formula --n 1").exit_code == 2);  // missing required options
  CHECK(run("").exit_code == 2);
  CHECK(run("count census --size 3", "BAXTER_STEP_BOUND=banana").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count") != std::string::npos);
}

TEST_CASE("capacity bound from the environment exits with code 3") {
  RunResult r = run("verify involution --max-n 4", "BAXTER_CLASS_BOUND=3", "2>&1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("capacity bound exceeded") != std::string::npos);
}

TEST_CASE("a failed verification exits with code 1 and a counterexample") {
  RunResult r = run("verify sinkcode --max-i 2 --selftest-fail --format json");
  CHECK(r.exit_code == 1);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "mismatch");
  CHECK(doc["counterexample"]["item"] == "selftest seam");

  // the counterexample record is also emitted on stderr
  RunResult err = run("verify sinkcode --max-i 2 --selftest-fail", "", "2>&1 1>/dev/null");
  CHECK(err.exit_code == 1);
  auto rec = nlohmann::json::parse(err.out);
  CHECK(rec["counterexample"]["item"] == "selftest seam");
}
