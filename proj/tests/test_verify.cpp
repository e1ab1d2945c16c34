#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitlab/verify.hpp"

#include <nlohmann/json.hpp>

using namespace orbitlab;

namespace {

SuiteOptions small_options() {
  SuiteOptions opt;
  opt.q_list = {3, 5};
  opt.n_max = 6;
  opt.q_max = 6;
  opt.trials = 20000;
  return opt;
}

}  // namespace

TEST_CASE("every suite runs clean on a small grid") {
  for (const std::string& name : suite_names()) {
    const VerificationReport report = run_suite(name, small_options());
    CHECK(report.suite == name);
    CHECK(!report.checks.empty());
    CHECK(!report.any_proved_fail());
    CHECK(report.count(CheckStatus::ConjecturalMismatch) == 0);
  }
}

TEST_CASE("reports are deterministic and sorted by id") {
  const SuiteOptions opt = small_options();
  for (const std::string& name : {std::string("theorem1"), std::string("conjecture1")}) {
    const VerificationReport a = run_suite(name, opt);
    const VerificationReport b = run_suite(name, opt);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].id == b.checks[i].id);
      CHECK(a.checks[i].lhs == b.checks[i].lhs);
      CHECK(a.checks[i].rhs == b.checks[i].rhs);
      if (i > 0) CHECK(a.checks[i - 1].id <= a.checks[i].id);
    }
  }
}

TEST_CASE("JSON report carries a schema version and full check list") {
  SuiteOptions opt = small_options();
  opt.type = Type::B;
  opt.rank = 2;
  const VerificationReport report = run_theorem1(opt);
  const nlohmann::json j = report_to_json(report);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("suite") == "theorem1");
  CHECK(j.at("checks").size() == report.checks.size());
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("id"));
    CHECK(c.contains("statement"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
    CHECK(c.contains("status"));
  }
}

TEST_CASE("CSV report has a header and one line per check") {
  const VerificationReport report = run_theorem2(small_options());
  const std::string csv = report_to_csv(report);
  CHECK(csv.rfind("id,statement,lhs,rhs,status\n", 0) == 0);
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == report.checks.size() + 1);
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_suite("nonsense", small_options()), UnsupportedError);
}

TEST_CASE("type restriction narrows the grid") {
  SuiteOptions opt = small_options();
  opt.type = Type::C;
  opt.rank = 3;
  const VerificationReport report = run_theorem1(opt);
  for (const CheckRecord& c : report.checks) CHECK(c.id.find("/C3/") != std::string::npos);
}
