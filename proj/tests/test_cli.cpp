#include "knacci/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using knacci::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen prints exact terms") {
  const auto r = invoke({"gen", "--knacci", "4", "--to", "11"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 12);
  CHECK(l.back() == "108");

  const auto fib = invoke({"gen", "--periodic2", "1,1", "--inits", "0,1", "--to", "9"});
  CHECK(lines(fib.out) == std::vector<std::string>{"0", "1", "1", "2", "3", "5", "8", "13", "21", "34"});

  const auto at = invoke({"gen", "--periodic2", "0.2,0.3", "--inits", "2,3", "--at", "2.5"});
  CHECK(at.out == "13/5\n");
}

TEST_CASE("gen from a spec file matches the fast path") {
  const auto path = std::filesystem::temp_directory_path() / "knacci_cli_spec.json";
  {
    std::ofstream f(path);
    f << R"({"kind":"constant","k":3,"coeffs":["1","1","1"],"inits":["0","0","1"]})";
  }
  const auto slow = invoke({"gen", "--spec", path.string(), "--from", "100", "--to", "100"});
  const auto fast = invoke({"gen", "--spec", path.string(), "--from", "100", "--to", "100", "--fast"});
  CHECK(slow.code == 0);
  CHECK(slow.out == fast.out);
  CHECK(lines(slow.out).size() == 1);
  CHECK(slow.out == "53324762928098149064722658\n");
  std::filesystem::remove(path);
}

TEST_CASE("gen output formats") {
  const auto j = invoke({"--output", "json", "gen", "--knacci", "3", "--from", "6", "--to", "8"});
  const json doc = json::parse(j.out);
  CHECK(doc["spec"]["kind"] == "constant");
  CHECK(doc["terms"].size() == 3);
  CHECK(doc["terms"][2]["value"] == "24");

  const auto c = invoke({"--output", "csv", "gen", "--knacci", "2", "--to", "3"});
  CHECK(c.out == "n,value\n0,0\n1,1\n2,1\n3,2\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"gen", "--to", "5"}).code == 2);
  CHECK(invoke({"gen", "--knacci", "2", "--coeffs", "1,1", "--to", "5"}).code == 2);
  CHECK(invoke({"gen", "--knacci", "1", "--to", "5"}).code == 2);
  CHECK(invoke({"gen", "--spec", "/nonexistent/spec.json", "--to", "5"}).code == 2);
  CHECK(invoke({"--precision", "10", "gen", "--knacci", "2", "--to", "5"}).code == 2);
  CHECK(invoke({"--output", "xml", "gen", "--knacci", "2", "--to", "5"}).code == 2);
  CHECK(invoke({"verify", "nonsense"}).code == 2);
  CHECK(invoke({"root", "--periodic2", "2,3"}).code == 2);
  CHECK(invoke({"gen", "--knacci", "2", "--to", "5", "--bogus"}).code == 2);
  const auto bad = invoke({"gen", "--coeffs", "1,abc", "--to", "5"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("abc") != std::string::npos);
}

TEST_CASE("verify reports holding identities") {
  CHECK(invoke({"verify", "knacci-like", "--k", "3", "--inits", "1,2,3", "--n", "3..50"}).code == 0);
  CHECK(invoke({"verify", "canonical", "--inits", "2,1", "--n", "1..20"}).code == 0);
  CHECK(invoke({"verify", "horadam-like", "--coeffs", "3,2,1", "--inits", "1,0,2", "--n", "3..40"}).code == 0);
  CHECK(invoke({"verify", "swap", "--a", "2", "--b", "3", "--n", "1..30"}).code == 0);
  CHECK(invoke({"verify", "periodic2-edson", "--trials", "5"}).code == 0);

  const auto r = invoke({"--output", "json", "verify", "periodic2", "--a", "0.2", "--b", "0.3", "--inits", "2,3"});
  const json doc = json::parse(r.out);
  CHECK(doc["holds"] == true);
  CHECK(doc["trials"][0]["parameters"]["a"] == "1/5");
}

TEST_CASE("verify renders verdicts for the periodic relations") {
  const auto r3 = invoke({"verify", "periodic3", "--a", "1", "--b", "2", "--c", "3", "--inits", "1,0,0", "--n", "2..30"});
  CHECK((r3.code == 0 || r3.code == 1));
  CHECK(r3.out.find("verdict periodic3:") != std::string::npos);

  const auto rk = invoke({"--output", "json", "verify", "periodic-k", "--leading", "1,2,3", "--inits", "1,1,0"});
  const json doc = json::parse(rk.out);
  REQUIRE(doc["verdicts"].size() == 2);
  CHECK(doc["verdicts"][0]["identity"] == "periodic-k");
  CHECK(doc["verdicts"][1]["identity"] == "periodic-k-shifted");
  CHECK(rk.code == (doc["verdicts"][0]["holds"].get<bool>() ? 0 : 1));
}

TEST_CASE("the shifted k-periodic variant does not decide the exit code") {
  const auto r = invoke({"verify", "periodic-k", "--leading", "2,3,5", "--inits", "1,2,3", "--n", "3..20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("periodic-k-shifted: FAILS") != std::string::npos);
}

TEST_CASE("randomized verification is deterministic per seed") {
  const auto a = invoke({"--seed", "99", "--output", "json", "verify", "horadam-like", "--trials", "4"});
  const auto b = invoke({"--seed", "99", "--output", "json", "verify", "horadam-like", "--trials", "4"});
  const auto c = invoke({"--seed", "100", "--output", "json", "verify", "horadam-like", "--trials", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("root reports") {
  const auto fib = invoke({"root", "--knacci", "2"});
  CHECK(fib.code == 0);
  CHECK(fib.out.find("dominant: 1.6180339887") != std::string::npos);
  CHECK(fib.out.find("|z| = 0.6180339887") != std::string::npos);

  const auto h = invoke({"root", "--coeffs", "3,2,1"});
  CHECK(h.out.find("polynomial: x^3 - 3*x^2 - 2*x - 1") != std::string::npos);
  CHECK(h.out.find("bracket (3, 4): inside") != std::string::npos);

  const json doc = json::parse(invoke({"--output", "json", "root", "--knacci", "3"}).out);
  CHECK(doc["dominant"].get<std::string>().rfind("1.8392867552", 0) == 0);
  CHECK(doc["bracket"]["inside"] == true);
}

TEST_CASE("limit reports") {
  const auto even = invoke({"limit", "--periodic2", "0.2,0.3", "--inits", "2,3", "--sub", "even"});
  CHECK(even.code == 0);
  CHECK(even.out.find("estimate: 1.3838") != std::string::npos);

  const auto eq = invoke({"limit", "--periodic2", "0.1,0.1", "--inits", "2,3"});
  CHECK(eq.out.find("estimate: 1.05124") != std::string::npos);

  const json k9 = json::parse(invoke({"--output", "json", "limit", "--knacci", "9", "--nmax", "300"}).out);
  const json k10 = json::parse(invoke({"--output", "json", "limit", "--knacci", "10", "--nmax", "300"}).out);
  const double e9 = std::stod(k9["estimate"].get<std::string>());
  const double e10 = std::stod(k10["estimate"].get<std::string>());
  CHECK(e10 > e9);
  CHECK(e10 < 2);

  const auto csv = invoke({"--output", "csv", "limit", "--knacci", "2", "--nmax", "10"});
  CHECK(csv.out.rfind("n,ratio\n", 0) == 0);
  CHECK(lines(csv.out).size() == 10);

  const auto claims = invoke({"limit", "--periodic2", "0.2,0.3", "--inits", "2,3", "--claims"});
  CHECK(claims.out.find("claim G(2n)/G(2n-1) -> alpha/a: does not match") != std::string::npos);
  CHECK(invoke({"limit", "--knacci", "3", "--claims"}).code == 2);
}

TEST_CASE("identical invocations give byte-identical JSON") {
  const std::vector<std::string> args{"--output", "json", "limit", "--periodic2", "1/5,3/10", "--inits", "2,3",
                                      "--sub", "odd", "--nmax", "100"};
  CHECK(invoke(args).out == invoke(args).out);
}

}
