#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "baxter/checks.hpp"
#include "baxter/closed_forms.hpp"
#include "baxter/errors.hpp"
#include "baxter/perm.hpp"
#include "baxter/walks.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace baxter;

namespace {

int parse_env_bound(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    size_t used = 0;
    int value = std::stoi(raw, &used);
    if (used != std::string(raw).size() || value < 0) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    std::cerr << name << ": not a non-negative integer: " << raw << "\n";
    std::exit(2);
  }
}

void print_scalar(const std::string& command, const std::map<std::string, std::string>& params,
                  const BigInt& value, const std::string& format) {
  if (format == "text") {
    std::cout << value.str() << "\n";
  } else if (format == "csv") {
    std::cout << "count\n" << value.str() << "\n";
  } else {
    json envelope = {{"command", command},
                     {"parameters", params},
                     {"results", json::array({json{{"count", value.str()}}})},
                     {"status", "ok"}};
    std::cout << envelope.dump(2) << "\n";
  }
}

void print_census(const std::string& command, const std::map<std::string, std::string>& params,
                  const ProfileCensus& census, const std::string& format) {
  std::vector<std::pair<ParameterProfile, BigInt>> rows(census.begin(), census.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tuple(a.first.p, a.first.k, a.first.r) <
           std::tuple(b.first.p, b.first.k, b.first.r);
  });
  if (format == "json") {
    json results = json::array();
    for (const auto& [q, count] : rows)
      results.push_back(
          {{"n", q.n}, {"k", q.k}, {"p", q.p}, {"r", q.r}, {"count", count.str()}});
    json envelope = {
        {"command", command}, {"parameters", params}, {"results", results}, {"status", "ok"}};
    std::cout << envelope.dump(2) << "\n";
    return;
  }
  std::cout << "n,k,p,r,count\n";
  for (const auto& [q, count] : rows)
    std::cout << q.n << "," << q.k << "," << q.p << "," << q.r << "," << count.str() << "\n";
}

int run_verify(const std::string& command, CheckReport report, const std::string& format,
               bool selftest_fail) {
  if (selftest_fail) {
    // documented seam: inject one failing comparison to exercise the
    // mismatch path end to end
    report.passed = false;
    report.rows.insert(report.rows.begin(), {"selftest seam", "0", "1", false});
    report.counterexample = {{"item", "selftest seam"}, {"expected", "0"}, {"actual", "1"}};
    ++report.checks_run;
  }
  if (format == "text") {
    std::cout << render_text(report);
  } else if (format == "csv") {
    std::cout << "item,expected,actual,ok\n";
    for (const CheckRow& row : report.rows)
      std::cout << row.item << "," << row.expected << "," << row.actual << ","
                << (row.ok ? "true" : "false") << "\n";
  } else {
    json results = json::array();
    for (const CheckRow& row : report.rows)
      results.push_back({{"item", row.item},
                         {"expected", row.expected},
                         {"actual", row.actual},
                         {"ok", row.ok}});
    json envelope = {{"command", command},
                     {"parameters", report.parameters},
                     {"results", results},
                     {"status", report.passed ? "verified" : "mismatch"}};
    if (!report.passed) envelope["counterexample"] = report.counterexample;
    std::cout << envelope.dump(2) << "\n";
  }
  if (!report.passed) {
    json record = {{"command", command}, {"counterexample", report.counterexample}};
    std::cerr << record.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  int step_bound = parse_env_bound("BAXTER_STEP_BOUND", kDefaultTripleStepBound);
  int class_bound = parse_env_bound("BAXTER_CLASS_BOUND", kDefaultClassBound);

  CLI::App app{"exact enumeration of involutive Baxter permutations"};
  app.require_subcommand(1);

  std::string format = "text";
  int jobs = 1;
  bool selftest_fail = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--jobs", jobs, "worker threads for census enumeration")
        ->check(CLI::Range(1, 256));
  };

  auto* count = app.add_subcommand("count", "evaluate exact counts");
  count->require_subcommand(1);

  auto* cmd_formula = count->add_subcommand("formula", "profile count from the closed form");
  int arg_n = 0, arg_k = 0, arg_p = 0, arg_r = 0;
  cmd_formula->add_option("--n", arg_n, "half the number of non-fixed points")->required();
  cmd_formula->add_option("--k", arg_k, "half the number of non-crossing descents")->required();
  cmd_formula->add_option("--p", arg_p, "number of fixed points")->required();
  cmd_formula->add_option("--r", arg_r, "number of crossing descents")->required();
  add_common(cmd_formula);

  auto* cmd_fpf = count->add_subcommand("fpf", "fixed-point-free count at size 2n");
  int fpf_n = 1;
  std::string fpf_method = "formula";
  cmd_fpf->add_option("--n", fpf_n, "half the permutation size")->required();
  cmd_fpf->add_option("--method", fpf_method, "formula, paths or brute")
      ->check(CLI::IsMember({"formula", "paths", "brute"}));
  add_common(cmd_fpf);

  auto* cmd_census = count->add_subcommand("census", "profile census of one size");
  int census_size = 0;
  cmd_census->add_option("--size", census_size, "permutation size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(cmd_census);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->require_subcommand(1);
  auto add_selftest = [&](CLI::App* cmd) {
    cmd->add_flag("--selftest-fail", selftest_fail)->group("");
    add_common(cmd);
  };

  auto* v_bijection = verify->add_subcommand("bijection", "census vs walk tuple enumeration");
  int bijection_max = 8;
  v_bijection->add_option("--max-size", bijection_max, "largest permutation size");
  add_selftest(v_bijection);

  auto* v_formula = verify->add_subcommand("formula", "census vs closed form");
  int formula_max = 10;
  v_formula->add_option("--max-size", formula_max, "largest permutation size");
  add_selftest(v_formula);

  auto* v_involution = verify->add_subcommand("involution", "diagonal path classes and swaps");
  int involution_max = 7;
  v_involution->add_option("--max-n", involution_max, "largest path class index");
  add_selftest(v_involution);

  auto* v_sinkcode = verify->add_subcommand("sinkcode", "decoration round trips");
  int sinkcode_max = 8;
  v_sinkcode->add_option("--max-i", sinkcode_max, "largest corner count");
  add_selftest(v_sinkcode);

  auto* v_lgv = verify->add_subcommand("lgv", "determinant vs brute enumeration");
  int lgv_max_steps = 18, lgv_max_size = 8, lgv_random = 200;
  unsigned int lgv_seed = 12345;
  v_lgv->add_option("--max-steps", lgv_max_steps, "combined walk length of random configurations");
  v_lgv->add_option("--max-size", lgv_max_size, "largest profile size 2n+p");
  v_lgv->add_option("--random", lgv_random, "number of random configurations");
  v_lgv->add_option("--seed", lgv_seed, "random generator seed");
  add_selftest(v_lgv);

  auto* v_identities = verify->add_subcommand("identities", "closed form identities");
  int identities_max = 20;
  v_identities->add_option("--max-n", identities_max, "largest index checked");
  add_selftest(v_identities);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_formula->parsed()) {
      print_scalar("count formula",
                   {{"n", std::to_string(arg_n)},
                    {"k", std::to_string(arg_k)},
                    {"p", std::to_string(arg_p)},
                    {"r", std::to_string(arg_r)}},
                   a_multi({arg_n, arg_k, arg_p, arg_r}), format);
    } else if (cmd_fpf->parsed()) {
      BigInt value;
      if (fpf_method == "formula") {
        value = b_fpf(fpf_n);
      } else if (fpf_method == "paths") {
        if (fpf_n < 1) throw contract_error("count fpf: n must be >= 1");
        value = 0;
        for (int k = 0; k <= fpf_n - 1; ++k)
          for (int r = 0; k + r <= fpf_n; ++r) value += theorem1_tuple_count({fpf_n, k, 0, r});
      } else {
        if (fpf_n < 1) throw contract_error("count fpf: n must be >= 1");
        long long brute = 0;
        for_each_involution(2 * fpf_n, true, [&](const Permutation& pi) {
          if (is_baxter(pi)) ++brute;
        });
        value = brute;
      }
      print_scalar("count fpf",
                   {{"n", std::to_string(fpf_n)}, {"method", fpf_method}}, value, format);
    } else if (cmd_census->parsed()) {
      print_census("count census",
                   {{"size", std::to_string(census_size)}, {"jobs", std::to_string(jobs)}},
                   profile_census(census_size, jobs), format);
    } else if (v_bijection->parsed()) {
      return run_verify("verify bijection", check_bijection(bijection_max, jobs, step_bound),
                        format, selftest_fail);
    } else if (v_formula->parsed()) {
      return run_verify("verify formula", check_formula(formula_max, jobs), format,
                        selftest_fail);
    } else if (v_involution->parsed()) {
      return run_verify("verify involution",
                        check_involution(involution_max, class_bound, step_bound), format,
                        selftest_fail);
    } else if (v_sinkcode->parsed()) {
      return run_verify("verify sinkcode", check_sinkcode(sinkcode_max), format, selftest_fail);
    } else if (v_lgv->parsed()) {
      return run_verify(
          "verify lgv",
          check_lgv(lgv_max_size, lgv_random, lgv_max_steps, lgv_seed, step_bound), format,
          selftest_fail);
    } else if (v_identities->parsed()) {
      return run_verify("verify identities", check_identities(identities_max), format,
                        selftest_fail);
    }
  } catch (const capacity_error& e) {
    std::cerr << "capacity bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    json record = {{"error", e.what()}};
    std::cerr << record.dump() << "\n";
    return 1;
  }
  return 0;
}
