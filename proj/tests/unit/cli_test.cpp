#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "anocan/bigint.hpp"
#include "cli.hpp"

using anocan::cli::run;
using Json = nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Every string made of digits must be canonical decimal.
void check_decimal_strings(const Json& node) {
  if (node.is_string()) {
    const auto s = node.get<std::string>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
      CHECK(anocan::to_decimal(anocan::from_decimal(s)) == s);
    }
  } else if (node.is_structured()) {
    for (const auto& child : node) check_decimal_strings(child);
  }
  CHECK_FALSE(node.is_number_integer());
}

}  // namespace

TEST_CASE("enumerate") {
  auto both = invoke({"enumerate", "--base", "10", "--k", "1", "--engine", "both"});
  REQUIRE(both.code == 0);
  const auto record = both.json();
  CHECK(record["schemaVersion"] == "1.0");
  CHECK(record["command"] == "enumerate");
  CHECK(record["results"]["count"] == "4");
  CHECK(record["results"]["diff"]["oracleOnly"].empty());
  CHECK(record["results"]["diff"]["structuredOnly"].empty());
  const auto& first = record["results"]["solutions"][0];
  CHECK(first["value"] == "164");
  CHECK(first["base"] == "10");
  CHECK(first["l"] == "1");
  CHECK(first["k"] == "1");
  CHECK(first["a"] == "1");
  CHECK(first["b"] == "6");
  CHECK(first["c"] == "4");
  CHECK(first["digits"] == Json::array({"1", "6", "4"}));
  CHECK(first["primitive"] == true);
  check_decimal_strings(record["results"]);
  check_decimal_strings(record["parameters"]);

  auto prime = invoke({"enumerate", "--base", "7", "--k", "2"});
  REQUIRE(prime.code == 0);
  CHECK(prime.json()["results"]["count"] == "0");

  auto refused = invoke({"enumerate", "--base", "10", "--k", "9", "--engine", "oracle"});
  CHECK(refused.code == 3);
  CHECK(refused.out.empty());
  CHECK(refused.err.find("refused") != std::string::npos);

  auto raised = invoke({"--work-limit", "100000000", "enumerate", "--base", "10", "--k", "3", "--engine", "oracle"});
  CHECK(raised.code == 0);
  CHECK(raised.json()["results"]["count"] == "7");
}

TEST_CASE("enumerate csv and plain") {
  auto csv = invoke({"enumerate", "--base", "10", "--k", "2", "--format", "csv"});
  REQUIRE(csv.code == 0);
  const auto rows = lines(csv.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "value,base,l,k,a,b,c,digits,primitive");
  CHECK(rows[3] == "21775,10,2,2,21,7,75,2 1 7 7 5,true");
  CHECK(rows[1] == "16664,10,2,2,16,6,64,1 6 6 6 4,false");

  auto plain = invoke({"enumerate", "--base", "10", "--k", "1", "--format", "plain"});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("164") != std::string::npos);
}

TEST_CASE("verify") {
  auto star = invoke({"verify", "24996", "--base", "10", "--l", "2", "--k", "2"});
  REQUIRE(star.code == 0);
  auto r = star.json()["results"];
  CHECK(r["propertyP"] == true);
  CHECK(r["propertyPStar"] == true);
  CHECK(r["triviality"] == "NonTrivial");
  CHECK(r["divisibility"]["ratioD"] == "36");
  CHECK(r["structureAudit"]["allHold"] == true);

  auto trivial = invoke({"verify", "777", "--base", "10", "--l", "1", "--k", "1"});
  REQUIRE(trivial.code == 0);
  r = trivial.json()["results"];
  CHECK(r["propertyP"] == true);
  CHECK(r["propertyPStar"] == false);
  CHECK(r["triviality"] == "AllDigitsEqual");

  auto miss = invoke({"verify", "165", "--base", "10", "--l", "1", "--k", "1"});
  REQUIRE(miss.code == 0);
  r = miss.json()["results"];
  CHECK(r["propertyP"] == false);
  CHECK(r["triviality"].is_null());
  CHECK(r["divisibility"].is_null());

  CHECK(invoke({"verify", "164", "--base", "10", "--l", "2", "--k", "2"}).code == 2);
  CHECK(invoke({"verify", "16x4", "--base", "10", "--l", "1", "--k", "1"}).code == 2);
}

TEST_CASE("grid") {
  auto csv = invoke({"grid", "--base", "10", "--k", "1", "--format", "csv"});
  REQUIRE(csv.code == 0);
  const auto rows = lines(csv.out);
  CHECK(rows.size() == 29);
  CHECK(rows[0] == "b,ck,class,l,a");
  CHECK(std::find(rows.begin(), rows.end(), "6,4,full,1,1") != rows.end());
  CHECK(std::find(rows.begin(), rows.end(), "9,6,none,,") != rows.end());

  auto five = invoke({"grid", "--base", "5", "--k", "3", "--format", "csv"});
  REQUIRE(five.code == 0);
  const auto five_rows = lines(five.out);
  CHECK(five_rows.size() == 1 + 3);
  for (std::size_t i = 1; i < five_rows.size(); ++i) CHECK(five_rows[i].find(",none,") != std::string::npos);

  auto json = invoke({"grid", "--base", "10", "--k", "1"});
  REQUIRE(json.code == 0);
  const auto results = json.json()["results"];
  CHECK(results["cellCount"] == "28");
  CHECK(results["counts"]["full"] == "4");
  check_decimal_strings(results);

  CHECK(invoke({"grid", "--base", "3", "--k", "1"}).code == 2);
}

TEST_CASE("saturate") {
  auto ten = invoke({"saturate", "--base", "10", "--kmax", "10"});
  REQUIRE(ten.code == 0);
  auto r = ten.json()["results"];
  CHECK(r["lastNewPrimitiveK"] == "4");
  CHECK(r["bound"]["ceiling"] == "9");
  CHECK(r["countBound"] == "28");
  CHECK(r["maxCount"] == "8");
  CHECK(r["consecutive"]["patternHolds"] == true);
  CHECK(r["consecutive"]["newPrimitivesAt"] == Json::array({"1", "2", "3", "4"}));
  CHECK(r["countsByK"][3]["newPrimitives"] == Json::array({"340277776"}));

  auto nine = invoke({"saturate", "--base", "9", "--kmax", "6"});
  REQUIRE(nine.code == 0);
  CHECK(nine.json()["results"]["lastNewPrimitiveK"] == "1");

  auto three = invoke({"saturate", "--base", "3", "--kmax", "5"});
  REQUIRE(three.code == 0);
  r = three.json()["results"];
  CHECK(r["lastNewPrimitiveK"].is_null());
  for (const auto& row : r["countsByK"]) CHECK(row["solutions"] == "0");

  CHECK(invoke({"saturate", "--base", "10", "--kmax", "0"}).code == 2);
}

TEST_CASE("probe exit codes") {
  auto ten = invoke({"probe", "10"});
  CHECK(ten.code == 0);
  CHECK(ten.json()["results"]["verdict"] == "composite");
  CHECK(ten.json()["results"]["witness"]["value"] == "195");

  auto thirteen = invoke({"probe", "13"});
  CHECK(thirteen.code == 1);
  CHECK(thirteen.json()["results"]["verdict"] == "prime");
  CHECK(thirteen.json()["results"]["witness"].is_null());

  auto nine = invoke({"probe", "9", "--format", "csv"});
  CHECK(nine.code == 0);
  CHECK(lines(nine.out).at(1) == "9,composite,2 8 6");

  CHECK(invoke({"probe", "ten"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"enumerate", "--k", "1"}).code == 2);
  CHECK(invoke({"enumerate", "--base", "1", "--k", "1"}).code == 2);
  CHECK(invoke({"enumerate", "--base", "10", "--k", "0"}).code == 2);
  CHECK(invoke({"enumerate", "--base", "10", "--k", "1", "--engine", "magic"}).code == 2);
  CHECK(invoke({"--format", "xml", "probe", "10"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("output bytes do not depend on --jobs") {
  for (const auto& command : std::vector<std::vector<std::string>>{
           {"enumerate", "--base", "12", "--k", "2", "--engine", "both"},
           {"grid", "--base", "30", "--k", "5"},
           {"saturate", "--base", "24", "--kmax", "8"}}) {
    auto serial = command;
    serial.insert(serial.end(), {"--jobs", "1", "--no-timing"});
    auto parallel = command;
    parallel.insert(parallel.end(), {"--jobs", "4", "--no-timing"});
    const auto a = invoke(serial);
    const auto b = invoke(parallel);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.json()["workStats"].contains("predicateEvaluations"));
    CHECK_FALSE(a.json()["workStats"].contains("wallSeconds"));
  }
  CHECK(invoke({"probe", "10"}).json()["workStats"].contains("wallSeconds"));
}
