#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qito/cli/cli.hpp"

using namespace qito;

namespace {
struct Result {
  int status;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int s = run(args, out, err);
  return {s, out.str(), err.str()};
}
}  // namespace

TEST_CASE("cli: dfun text") {
  const auto r = call({"dfun", "--j", "2", "--row", "2", "--col", "0", "--format", "text"});
  CHECK(r.status == 0);
  CHECK(r.out == "q^(1/2)*sqrt(q+q^-1)*X*U\n");
}

TEST_CASE("cli: cg value and table") {
  auto r = call({"cg", "--j1", "2", "--j2", "2", "--j", "0", "--m1", "0", "--m2", "0", "--m", "0", "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("value"));
  CHECK(j["numeric_at"].is_null());
  r = call({"cg", "--j1", "1", "--j2", "1", "--j", "0", "--m1", "1", "--m2", "-1", "--m", "0", "--q-num", "1", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["numeric_at"]["value"].get<std::string>().rfind("0.70710678118654752440084436", 0) == 0);
  r = call({"cg", "--j1", "1", "--j2", "1", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
}

TEST_CASE("cli: haar and eval") {
  CHECK(call({"haar", "--expr", "U*V"}).out == "-q/(q^2+1)\n");
  CHECK(call({"eval", "--expr", "q+q^-1", "--q-num", "2", "--digits", "10"}).out.rfind("2.5", 0) == 0);
  CHECK(call({"haar", "--expr", "X^4", "--jmax", "2"}).status == 2);
}

TEST_CASE("cli: verify reports") {
  const auto r = call({"verify", "hopf", "--jmax", "3", "--format", "json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["suite"] == "hopf");
  CHECK(j["q_symbolic"] == true);
  REQUIRE(j["checks"].is_array());
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("passed"));
    CHECK(c.contains("detail"));
    names.push_back(c["name"]);
  }
  CHECK(std::is_sorted(names.begin(), names.end()));
  // The printed spin-1/2 closed forms differ from the coefficients for j != 1.
  CHECK(call({"verify", "cg", "--jmax", "1"}).status == 1);
}

TEST_CASE("cli: seeds are reproducible") {
  const auto a = call({"verify", "classical", "--seed", "5", "--format", "json"});
  const auto b = call({"verify", "classical", "--seed", "5", "--format", "json"});
  const auto c = call({"verify", "classical", "--seed", "6", "--format", "json"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("cli: usage and domain errors") {
  auto r = call({"dfun", "--j", "2", "--row", "2", "--col", "0", "--bogus"});
  CHECK(r.status == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(call({}).status == 2);
  CHECK(call({"verify", "nothing"}).status == 2);
  CHECK(call({"dfun", "--j", "2", "--row", "1", "--col", "0"}).status == 2);
  CHECK(call({"cg", "--j1", "1", "--j2", "1", "--j", "0"}).status == 2);
  CHECK(call({"eval", "--expr", "q", "--q-num", "-1/2"}).status == 2);
  CHECK(call({"verify", "boson", "--jmax", "1"}).status == 2);
  CHECK(call({"verify", "classical", "--group", "/nonexistent.json"}).status == 2);
  CHECK(call({"--format", "xml", "dfun", "--j", "0", "--row", "0", "--col", "0"}).status == 2);
}
