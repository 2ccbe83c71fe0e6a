#include "helpers.hpp"
#include "pquant/errors.hpp"
#include "pquant/verify.hpp"

using namespace pquant;

namespace {

VerifyParams small(int n) {
  VerifyParams p;
  p.n = n;
  p.max_k = 2;
  p.max_xdeg = 1;
  return p;
}

}  // namespace

TEST_CASE("every suite passes on a small range") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto rep = run_suite(name, small(2));
    CHECK(rep.passed());
    CHECK_FALSE(rep.checks.empty());
    for (const auto& c : rep.checks) CHECK(c.counterexample.is_null());
  }
}

TEST_CASE("report JSON") {
  const auto rep = run_suite("koszul", small(2));
  const Json j = rep.to_json();
  CHECK(j["suite"] == "koszul");
  CHECK(j["passed"] == true);
  CHECK(j["params"]["n"] == 2);
  CHECK(j["checks"].size() == rep.checks.size());
  CHECK(j["checks"][0]["group"] == "koszul");
  CHECK(rep.group_passed("koszul"));
  CHECK_FALSE(rep.group_passed("no such group"));
}

TEST_CASE("failed check makes the report fail") {
  VerificationReport rep;
  rep.checks.push_back({"g", "a", true, {}, nullptr});
  rep.checks.push_back({"g", "b", false, {}, Json{{"input", 1}}});
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.group_passed("g"));
  CHECK(rep.to_json()["checks"][1]["counterexample"]["input"] == 1);
}

TEST_CASE("degenerate drops are reported") {
  const auto rep = run_suite("classification", small(2));
  bool found = false;
  for (const auto& c : rep.checks) {
    if (c.name.find("id alone") != std::string::npos) {
      found = true;
      CHECK(c.detail.find("(0,2)") != std::string::npos);
      CHECK(c.detail.find("(1,0)") != std::string::npos);
      CHECK(c.detail.find("(1,1)") == std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("bad suite parameters") {
  CHECK_THROWS_AS(run_suite("nope", small(2)), ArgumentError);
  CHECK_THROWS_AS(run_suite("koszul", small(1)), ArgumentError);
  VerifyParams p = small(2);
  p.max_k = -1;
  CHECK_THROWS_AS(run_suite("koszul", p), ArgumentError);
}
