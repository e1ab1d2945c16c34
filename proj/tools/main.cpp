// orbitlab: verify exact orbit-counting identities for classical root
// systems and run the related shuffle/census computations.
//
// Exit codes: 0 = all proved checks pass, 1 = a proved check fails,
// 2 = usage error, 3 = enumeration cap exceeded.

#include "orbitlab/arrangement.hpp"
#include "orbitlab/genus.hpp"
#include "orbitlab/orbits_fq.hpp"
#include "orbitlab/shuffle.hpp"
#include "orbitlab/verify.hpp"
#include "orbitlab/weyl.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace orbitlab;

constexpr int kExitPass = 0;
constexpr int kExitProvedFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

void print_report(const VerificationReport& report) {
  std::cout << "suite: " << report.suite << "  (" << report.checks.size()
            << " checks, " << std::fixed << std::setprecision(0) << report.wall_ms
            << " ms)\n";
  size_t id_w = 2, lhs_w = 3, rhs_w = 3;
  for (const CheckRecord& c : report.checks) {
    id_w = std::max(id_w, c.id.size());
    lhs_w = std::max(lhs_w, c.lhs.size());
    rhs_w = std::max(rhs_w, c.rhs.size());
  }
  for (const CheckRecord& c : report.checks)
    std::cout << "  " << std::left << std::setw(static_cast<int>(id_w)) << c.id << "  "
              << std::setw(static_cast<int>(lhs_w)) << c.lhs << "  "
              << std::setw(static_cast<int>(rhs_w)) << c.rhs << "  "
              << status_name(c.status) << "\n";
  std::cout << "  proved-pass: " << report.count(CheckStatus::ProvedPass)
            << "  proved-fail: " << report.count(CheckStatus::ProvedFail)
            << "  conjectural-match: " << report.count(CheckStatus::ConjecturalMatch)
            << "  conjectural-mismatch: " << report.count(CheckStatus::ConjecturalMismatch)
            << "\n";
}

int run_verify(const std::vector<std::string>& suites, const SuiteOptions& opt,
               const std::string& json_path, const std::string& csv_path) {
  nlohmann::json all = nlohmann::json::array();
  std::string csv;
  bool any_fail = false;
  for (const std::string& suite : suites) {
    const VerificationReport report = run_suite(suite, opt);
    print_report(report);
    any_fail = any_fail || report.any_proved_fail();
    all.push_back(report_to_json(report));
    csv += report_to_csv(report);
  }
  if (!json_path.empty()) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["reports"] = all;
    write_file(json_path, doc.dump(2) + "\n");
  }
  if (!csv_path.empty()) write_file(csv_path, csv);
  return any_fail ? kExitProvedFail : kExitPass;
}

int run_count(Type type, int rank, long long q, const std::string& json_path,
              const std::string& csv_path, const Int& cap) {
  const RootSystem rs = build_root_system(type, rank);
  const ExtendedDiagram ext = marks(rs);
  const Int f = connection_index(rs).connection_index;
  std::optional<WeylGroup> w;
  if (type != Type::A) w = build_weyl(rs, cap);
  const GenusClassification genera = classify_genera(rs, ext, w ? &*w : nullptr);

  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "genus,p_sum,f,count\n";
  std::cout << "type " << type_name(type) << rank << ", q = " << q << ", f = " << f
            << "\n";
  Rat total = 0;
  for (const GenusClass& cls : genera.classes) {
    Int p_sum = 0;
    for (SubsetBits s : cls.subsets) p_sum += p_of(s, ext, q);
    const Rat count = conjecture1_count(cls, ext, q, f);
    total += count;
    std::cout << "  " << std::left << std::setw(14) << cls.label.display << "  sum p = "
              << p_sum << "  count = " << count << "\n";
    rows.push_back({{"genus", cls.label.display},
                    {"p_sum", p_sum.str()},
                    {"f", f.str()},
                    {"count", [&] { std::ostringstream os; os << count; return os.str(); }()}});
    csv << cls.label.display << ',' << p_sum << ',' << f << ',' << count << "\n";
  }
  const Rat expected_total = split_total(rs, q);
  std::cout << "  total = " << total << " (split total " << expected_total << ")\n";
  if (!json_path.empty()) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["type"] = type_name(type);
    doc["rank"] = rank;
    doc["q"] = q;
    doc["f"] = f.str();
    doc["rows"] = rows;
    doc["total"] = [&] { std::ostringstream os; os << total; return os.str(); }();
    write_file(json_path, doc.dump(2) + "\n");
  }
  if (!csv_path.empty()) write_file(csv_path, csv.str());
  return total == expected_total ? kExitPass : kExitProvedFail;
}

int run_shuffle_sample(int n, int q, long long trials, uint64_t seed,
                       const std::string& json_path) {
  const ShuffleStatistics stats = sample_inverse_shuffles(n, q, trials, seed);
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["n"] = stats.n;
  doc["q"] = stats.q;
  doc["trials"] = stats.trials;
  doc["seed"] = stats.seed;
  doc["identity_hits"] = stats.identity_hits;
  doc["estimate"] = stats.estimate;
  doc["std_error"] = stats.std_error;
  doc["exact_value"] = stats.exact_value;
  doc["z_score"] = stats.z_score;
  std::cout << doc.dump(2) << "\n";
  if (!json_path.empty()) write_file(json_path, doc.dump(2) + "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of split semisimple orbit counts for classical root systems"};
  app.require_subcommand(1);

  // Shared options.
  std::string type_str, json_path, csv_path, suite;
  int rank = 0, n = 0, n_max = 12, q_max = 20;
  long long q = 0, trials = 100000;
  std::vector<long long> q_list;
  uint64_t seed = 1;
  long long cap = 1000000;
  bool all = false;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "one of: theorem1, theorem2, theorem3-typeA, "
                                     "conjecture1, sommers, orlik-solomon, "
                                     "shuffle-identity, burnside-lattice");
  verify->add_flag("--all", all, "run every suite");
  verify->add_option("--type", type_str, "root system family (A, B, C or D)");
  verify->add_option("--rank", rank, "root system rank");
  verify->add_option("--n", n, "type A: number of eigenvalues (rank + 1); shuffle: deck size");
  verify->add_option("--q", q, "single field size / deck parameter");
  verify->add_option("--q-list", q_list, "list of q values");
  verify->add_option("--n-max", n_max, "shuffle identity: max deck size");
  verify->add_option("--q-max", q_max, "shuffle identity: max q");
  verify->add_option("--trials", trials, "Monte Carlo trials");
  verify->add_option("--seed", seed, "Monte Carlo seed");
  verify->add_option("--json", json_path, "write JSON report to this path");
  verify->add_option("--csv", csv_path, "write CSV report to this path");
  verify->add_option("--cap", cap, "enumeration size cap");

  CLI::App* count = app.add_subcommand("count", "per-genus split orbit counts");
  count->add_option("--type", type_str, "root system family")->required();
  count->add_option("--rank", rank, "root system rank")->required();
  count->add_option("--q", q, "field size")->required();
  count->add_option("--json", json_path, "write JSON table to this path");
  count->add_option("--csv", csv_path, "write CSV table to this path");
  count->add_option("--cap", cap, "enumeration size cap");

  CLI::App* sample = app.add_subcommand("shuffle-sample", "Monte Carlo inverse-shuffle sampler");
  sample->add_option("--n", n, "deck size")->required();
  sample->add_option("--q", q, "number of piles")->required();
  sample->add_option("--trials", trials, "number of trials")->required();
  sample->add_option("--seed", seed, "RNG seed")->required();
  sample->add_option("--json", json_path, "write statistics JSON to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  if (const char* env_cap = std::getenv("ORBITLAB_CAP")) {
    try {
      cap = std::stoll(env_cap);
    } catch (const std::exception&) {
      std::cerr << "error: ORBITLAB_CAP is not an integer\n";
      return kExitUsage;
    }
  }

  try {
    if (verify->parsed()) {
      SuiteOptions opt;
      opt.cap = cap;
      opt.trials = trials;
      opt.seed = seed;
      opt.n_max = n_max;
      opt.q_max = q_max;
      if (!type_str.empty()) opt.type = type_from_string(type_str);
      if (verify->count("--rank")) opt.rank = rank;
      if (verify->count("--n")) opt.rank = n - 1;  // type A suites index by n
      if (verify->count("--q")) opt.q_list = {q};
      if (!q_list.empty()) opt.q_list = q_list;
      std::vector<std::string> suites;
      if (all)
        suites = suite_names();
      else if (!suite.empty())
        suites = {suite};
      else {
        std::cerr << "error: give a suite name or --all\n";
        return kExitUsage;
      }
      for (const std::string& s : suites) {
        const auto names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end()) {
          std::cerr << "error: unknown suite '" << s << "'\n";
          return kExitUsage;
        }
      }
      return run_verify(suites, opt, json_path, csv_path);
    }
    if (count->parsed()) {
      if (q < 2) {
        std::cerr << "error: count requires q >= 2\n";
        return kExitUsage;
      }
      return run_count(type_from_string(type_str), rank, q, json_path, csv_path, Int(cap));
    }
    if (sample->parsed()) return run_shuffle_sample(n, static_cast<int>(q), trials, seed, json_path);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: raise --cap or the ORBITLAB_CAP environment variable\n";
    return kExitCap;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitProvedFail;
  }
  return kExitUsage;
}
