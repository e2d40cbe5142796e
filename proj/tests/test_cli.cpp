#include "sbcas/cli.hpp"

#include <doctest.h>

#include <json.hpp>

#include <sstream>

using namespace sbcas;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("factor") {
  CHECK(run({"factor", "12", "--maple"}).out == "[1, [[2, 2], [3, 1]]]\n");
  CHECK(run({"factor", "12"}).out == "1 * (2^2 * 3^1)\n");
  CHECK(run({"--format", "sexpr", "factor", "12"}).out == "(* 1 (* (^ 2 2) (^ 3 1)))\n");
  CHECK(run({"factor", "-12", "--maple"}).out == "[-1, [[2, 2], [3, 1]]]\n");
  const Run neg = run({"factor", "-12"});
  CHECK(neg.code == kExitUndefined);
  CHECK(neg.out == "undefined\n");
  CHECK(run({"factor", "abc"}).code == kExitUsage);
}

TEST_CASE("normalizers and diff") {
  CHECK(run({"norm-expr", "x/x"}).out == "1\n");
  CHECK(run({"norm-expr", "1/(x-x)"}).out == "1 / 0\n");
  CHECK(run({"norm-fun", "fun x -> x/x"}).out == "fun x -> x / x\n");
  CHECK(run({"diff", "sin(x^2+x)"}).out == "(2 * x + 1) * cos(x^2 + x)\n");
  CHECK(run({"norm-expr", "-x+1"}).out == "-x + 1\n");
}

TEST_CASE("eval before and after normalization") {
  const Run raw = run({"eval", "(x^4-1)/(x^2-1)", "--at", "1"});
  CHECK(raw.code == kExitUndefined);
  CHECK(raw.out == "undefined\n");
  const std::string normal = run({"norm-expr", "(x^4-1)/(x^2-1)"}).out;
  const Run after = run({"eval", normal.substr(0, normal.size() - 1), "--at", "1"});
  CHECK(after.code == kExitOk);
  CHECK(after.out == "2\n");
  CHECK(run({"eval", "fun x -> 1/x", "--at", "1/2"}).out == "2\n");
  CHECK(run({"eval", "sin(x)", "--at", "0"}).out == "0\n");
  CHECK(run({"eval", "ln(x)", "--at", "0"}).code == kExitUndefined);
}

TEST_CASE("domain") {
  CHECK(run({"domain", "ln(x^2-1)", "--lo", "-2", "--hi", "2", "--n", "5"}).out ==
        "-2 defined\n-1 undefined\n0 undefined\n1 undefined\n2 defined\n");
  const auto j = nlohmann::json::parse(
      run({"--format", "json", "domain", "ln(x)", "--lo", "-1", "--hi", "1", "--n", "3"}).out);
  CHECK(j.size() == 3);
  CHECK(j[2]["status"] == "defined");
  CHECK(run({"domain", "x", "--lo", "1", "--hi", "0", "--n", "5"}).code == kExitUsage);
}

TEST_CASE("check") {
  const Run r = run({"--format", "json", "check", "factor", "--cases", "30", "--seed", "4"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
  const Run all = run({"--format", "json", "check", "all", "--cases", "20"});
  CHECK(nlohmann::json::parse(all.out).size() == 5);
  CHECK(run({"check", "nope"}).code == kExitUsage);
}

TEST_CASE("errors and exit codes") {
  const Run bad = run({"norm-expr", "x +"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("parse error") != std::string::npos);
  const Run pv = run({"norm-expr", "sin(x)"});
  CHECK(pv.code == kExitUsage);
  CHECK(pv.err.find("predicate violation") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "factor", "3"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("json output") {
  CHECK(run({"--format", "json", "factor", "12", "--maple"}).out == "{\"value\":\"[1, [[2, 2], [3, 1]]]\"}\n");
  const auto j = nlohmann::json::parse(run({"--format", "json", "norm-expr", "x/x"}).out);
  CHECK(j == nlohmann::json{{"kind", "rat"}, {"value", "1"}});
}
