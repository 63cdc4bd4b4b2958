#include "knacci/json_io.hpp"

#include <doctest.h>

using namespace knacci;
using nlohmann::json;

TEST_SUITE("json_io") {

TEST_CASE("constant spec round trip") {
  const AnySpec spec = RecurrenceSpec({Rational(1, 2), 3, -1}, {0, Rational(-7, 3), 1});
  const json doc = spec_to_json(spec);
  CHECK(doc["kind"] == "constant");
  CHECK(doc["k"] == 3);
  CHECK(doc["coeffs"] == json::array({"1/2", "3", "-1"}));
  CHECK(doc["inits"] == json::array({"0", "-7/3", "1"}));
  CHECK(spec_from_json(doc) == spec);
}

TEST_CASE("periodic spec round trip") {
  const AnySpec spec = periodic2_spec(parse_rational("0.2"), parse_rational("0.3"), 2, 3);
  const json doc = spec_to_json(spec);
  CHECK(doc["kind"] == "periodic");
  CHECK(doc["leading"] == json::array({"1/5", "3/10"}));
  CHECK(spec_from_json(doc) == spec);
  CHECK(spec_from_json(json::parse(doc.dump())) == spec);
}

TEST_CASE("integers are accepted in place of strings") {
  const auto doc = json::parse(R"({"kind":"constant","k":2,"coeffs":[1,1],"inits":["0",1]})");
  CHECK(std::get<RecurrenceSpec>(spec_from_json(doc)) == knacci_spec(2));
}

TEST_CASE("malformed specs are rejected") {
  for (const char* text : {R"([])", R"({"k":2,"coeffs":["1","1"],"inits":["0","1"]})",
                           R"({"kind":"constant","coeffs":["1","1"],"inits":["0","1"]})",
                           R"({"kind":"constant","k":1,"coeffs":["1"],"inits":["0"]})",
                           R"({"kind":"constant","k":3,"coeffs":["1","1"],"inits":["0","1"]})",
                           R"({"kind":"constant","k":2,"coeffs":["1","x"],"inits":["0","1"]})",
                           R"({"kind":"constant","k":2,"coeffs":[1.5,1],"inits":["0","1"]})",
                           R"({"kind":"other","k":2,"coeffs":["1","1"],"inits":["0","1"]})",
                           R"({"kind":"periodic","k":2,"leading":["1"],"inits":["0","1"]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(spec_from_json(json::parse(text)), std::invalid_argument);
  }
}

TEST_CASE("witness and verdict documents") {
  const auto w = decompose_knacci_like(fibonacci_like_spec({1, 2, 3}), 5);
  const json doc = witness_to_json(w);
  CHECK(doc["identity"] == "knacci-like");
  CHECK(doc["n"] == 5);
  CHECK(doc["lhs"] == "20");
  CHECK(doc["rhs"] == "20");
  CHECK(doc["holds"] == true);
  CHECK(doc["terms"].size() == 3);

  const json v = verdict_to_json(summarize({w}));
  CHECK(v["checked"] == 1);
  CHECK(v["failures"] == 0);
  CHECK(v["first_counterexample"].is_null());
}

TEST_CASE("root and ratio documents") {
  const json roots = rootset_to_json(all_roots(charpoly_of(knacci_spec(3))), 20);
  CHECK(roots["dominant"].get<std::string>().rfind("1.83928675521416", 0) == 0);
  CHECK(roots["others"].size() == 2);
  CHECK(roots["others"][0].contains("modulus"));

  const auto report = ratio_limit(knacci_spec(2), 1, Subsequence::all, 30);
  const json r = ratio_report_to_json(report, 15);
  CHECK(r["samples"].size() == report.samples.size());
  CHECK(r["samples"][0][0] == 2);
  CHECK(r["reference"].is_string());
  const std::string csv = ratio_report_to_csv(report, 15);
  CHECK(csv.rfind("n,ratio\n2,1\n", 0) == 0);
}

}
