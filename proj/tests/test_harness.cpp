#include <cstdio>
#include <fstream>
#include <regex>

#include "doctest.h"
#include "skeinlab/census.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/verify.hpp"

using namespace skeinlab;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "skeinlab_test_table_" + std::to_string(counter++) + ".json";
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::string stripTimestamp(const std::string& json) {
  return std::regex_replace(json, std::regex("\"timestamp\": \"[^\"]*\""), "\"timestamp\": \"\"");
}

const char* kMiniCensus = R"([
  {"name": "unknot", "notation": "O*1", "unknot": true},
  {"name": "trefoil", "notation": "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]", "unknot": false},
  {"name": "figure_eight", "notation": "braid:3|1 -2 1 -2", "unknot": false},
  {"name": "hopf", "notation": "braid:2|1 1"}
])";

}  // namespace

TEST_CASE("load а valid table") {
  TempFile f(kMiniCensus);
  const auto entries = loadTable(f.path);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].name == "unknot");
  CHECK(entries[0].unknot == true);
  CHECK_FALSE(entries[3].unknot.has_value());
}

TEST_CASE("table errors") {
  CHECK_THROWS_AS(loadTable("does_not_exist.json"), IoError);

  TempFile notJson("{");
  CHECK_THROWS_AS(loadTable(notJson.path), ParseError);

  TempFile badRow(R"([{"name": "x"}])");
  CHECK_THROWS_AS(loadTable(badRow.path), ParseError);

  TempFile badPd(R"([{"name": "broken", "notation": "X[1,4,2,5];X[3,6,4,2]"}])");
  try {
    loadTable(badPd.path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("broken") != std::string::npos);
  }

  TempFile empty("[]");
  CHECK(loadTable(empty.path).empty());
}

TEST_CASE("verification of a miniature census") {
  TempFile f(kMiniCensus);
  const auto entries = loadTable(f.path);

  VerifyConfig cfg;
  const VerifyOutcome outcome = runVerification(entries, cfg);
  CHECK(outcome.allPassed);
  CHECK(outcome.reportJson.find("\"determined\": true") != std::string::npos);
  CHECK(outcome.reportJson.find("\"determined\": false") == std::string::npos);
  CHECK(outcome.summary.find("PASS") != std::string::npos);
}

TEST_CASE("empty census verifies trivially") {
  const VerifyOutcome outcome = runVerification({}, VerifyConfig{});
  CHECK(outcome.allPassed);
}

TEST_CASE("regression pins and triviality expectations can fail an entry") {
  TempFile wrongJones(R"([{"name": "unknot", "notation": "O*1", "jones": "2*q^0"}])");
  const VerifyOutcome a = runVerification(loadTable(wrongJones.path), VerifyConfig{});
  CHECK_FALSE(a.allPassed);

  TempFile wrongFlag(
      R"([{"name": "trefoil", "notation": "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]", "unknot": true}])");
  const VerifyOutcome b = runVerification(loadTable(wrongFlag.path), VerifyConfig{});
  CHECK_FALSE(b.allPassed);
}

TEST_CASE("reports are deterministic and parallelism-independent") {
  TempFile f(kMiniCensus);
  const auto entries = loadTable(f.path);

  VerifyConfig serial;
  serial.jobs = 1;
  VerifyConfig parallel;
  parallel.jobs = 4;

  const std::string a = stripTimestamp(runVerification(entries, serial).reportJson);
  const std::string b = stripTimestamp(runVerification(entries, serial).reportJson);
  const std::string c = stripTimestamp(runVerification(entries, parallel).reportJson);
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("half-integer parsing") {
  CHECK(parseHalfInt("1") == 2);
  CHECK(parseHalfInt("1/2") == 1);
  CHECK(parseHalfInt("3/2") == 3);
  CHECK(parseHalfInt("0") == 0);
  CHECK_THROWS_AS(parseHalfInt("1/3"), ParseError);
  CHECK_THROWS_AS(parseHalfInt("x"), ParseError);
  CHECK(halfIntToString(3) == "3/2");
  CHECK(halfIntToString(2) == "1");
  CHECK(halfIntToString(-1) == "-");
}
