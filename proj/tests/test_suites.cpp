#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddfact/suites.hpp"

using namespace oddfact;

namespace {

void check_suite(const SuiteReport& s) {
  CAPTURE(s.name);
  CHECK_FALSE(s.checks.empty());
  for (const SuiteCheck& c : s.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    if (c.asserted) CHECK(c.passed);
  }
  CHECK(s.passed());
}

}  // namespace

TEST_CASE("conjugation invariance") {
  Workspace ws(20240601, "", "");
  const SuiteReport s = conjugation_suite(ws, 5);
  check_suite(s);
  int probes = 0;
  for (const SuiteCheck& c : s.checks) probes += !c.asserted;
  CHECK(probes == 1);
}

TEST_CASE("special radical") {
  Workspace ws(20240601, "", "");
  check_suite(special_group_suite(ws, 3, 3));
  check_suite(special_group_suite(ws, 3, 5));
  check_suite(special_group_suite(ws, 4, 3));
}

TEST_CASE("radical meets the stabilizer") {
  Workspace ws(20240601, "", "");
  check_suite(stabilizer_meet_suite(ws, 3, 3));
  check_suite(stabilizer_meet_suite(ws, 4, 3));
}

TEST_CASE("proof elements") {
  for (long long q : {3, 5, 9}) check_suite(proof_element_suite(q));
  for (long long q : {3, 5}) check_suite(rho_sigma_suite(q));
}

TEST_CASE("suite reports become case reports") {
  SuiteReport s{"demo", {{"a", true, true, "x"}, {"b", false, false, "y"}}};
  CHECK(s.passed());
  const CaseReport r = to_case_report(s, 5);
  CHECK(r.case_id == "suite/demo");
  CHECK(r.verdict == "holds");
  CHECK(r.params.size() == 2);
  s.checks.push_back({"c", false, true, "z"});
  CHECK_FALSE(s.passed());
  CHECK(to_case_report(s, 5).verdict == "fails");
}
