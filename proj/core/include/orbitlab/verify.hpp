#pragma once

// Verification suites: each runs a family of exact identity checks and
// produces a machine-readable report. "Proved" checks are identities that
// must hold (a failure is a bug); "conjectural" checks compare the predicted
// per-genus counts against the brute-force census and report the outcome
// without failing the run.

#include "orbitlab/rootsys.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitlab {

enum class CheckStatus { ProvedPass, ProvedFail, ConjecturalMatch, ConjecturalMismatch };

std::string status_name(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string statement;  // the identity under test, with parameters
  std::string lhs;
  std::string rhs;
  CheckStatus status;
};

struct VerificationReport {
  std::string suite;
  std::string parameters;  // JSON object text
  std::vector<CheckRecord> checks;
  double wall_ms = 0.0;

  bool any_proved_fail() const;
  int count(CheckStatus s) const;
};

nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

struct SuiteOptions {
  std::vector<long long> q_list = {2, 3, 5, 7, 11, 13};
  std::optional<Type> type;       // restrict the type/rank grid
  std::optional<int> rank;
  int n_max = 12;                 // shuffle identity range
  int q_max = 20;
  long long trials = 100000;
  uint64_t seed = 1;
  Int cap = 1000000;
};

VerificationReport run_theorem1(const SuiteOptions& opt);
VerificationReport run_theorem2(const SuiteOptions& opt);
VerificationReport run_theorem3_typeA(const SuiteOptions& opt);
VerificationReport run_conjecture1(const SuiteOptions& opt);
VerificationReport run_sommers(const SuiteOptions& opt);
VerificationReport run_orlik_solomon(const SuiteOptions& opt);
VerificationReport run_shuffle_identity(const SuiteOptions& opt);
VerificationReport run_burnside_lattice(const SuiteOptions& opt);

// All suite names accepted by run_suite, in canonical order.
std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace orbitlab
