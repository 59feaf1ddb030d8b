// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catconv/bijections.hpp"
#include "catconv/cli.hpp"
#include "catconv/counting.hpp"
#include "catconv/triangle.hpp"
#include "catconv/verify.hpp"
#include "random_paths.hpp"
#include "report_schema.hpp"

using namespace catconv;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kNumericBudgetMs = 1000;
constexpr double kLemma3BudgetMs = 5000;
constexpr double kLemma7BudgetMs = 30000;
constexpr double kLemma5BudgetMs = 5000;
constexpr double kLemma6BudgetMs = 10000;
constexpr double kTheorem9BudgetMs = 60000;
constexpr double kTriangleBudgetMs = 5000;

constexpr std::size_t kChiTrials = 100000;
constexpr std::size_t kChiMaxParameter = 10;
constexpr std::size_t kPsiTrials = 10000;
constexpr std::size_t kPsiMaxParameter = 12;

// |O| at parameter sum 8: B1*B7 + B3*B5 + B5*B3 + B7*B1
const ExactCount kTheorem9AtEight(23808);

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

bool all_passed(const std::vector<VerificationReport>& reports, Outcome& o) {
  for (const auto& r : reports) {
    if (!r.passed) {
      std::string what = std::string(to_string(r.identity)) + " n=" + std::to_string(r.n) + " expected " +
                         r.expected.to_string() + " actual " + r.actual.to_string();
      if (r.witness) what += " (" + r.witness->note + ")";
      o.require(false, what);
      return false;
    }
  }
  return true;
}

void expect_counts(const std::vector<VerificationReport>& reports, const std::vector<std::uint64_t>& want,
                   Outcome& o) {
  o.require(reports.size() == want.size(), "wrong number of reports");
  for (std::size_t k = 0; k < reports.size() && k < want.size(); ++k) {
    o.require(reports[k].actual == ExactCount(want[k]),
              "n=" + std::to_string(k) + ": counted " + reports[k].actual.to_string() + ", want " +
                  std::to_string(want[k]));
  }
}

Outcome numeric_suite() {
  Outcome o;
  const Registry reg = Registry::standard();
  for (IdentityId id : {IdentityId::thm1, IdentityId::thm2, IdentityId::thm8, IdentityId::thm9, IdentityId::lemma4,
                        IdentityId::equiv_1_2, IdentityId::z_recursion, IdentityId::sixteen_recursion}) {
    all_passed(reg.verify_range(id, 0, 20, Mode::numeric, 1), o);
  }
  all_passed(reg.verify_range(IdentityId::cor10, 1, 20, Mode::numeric, 1), o);
  return o;
}

Outcome lemma3() {
  Outcome o;
  const auto reports = verify_range(IdentityId::lemma3, 0, 5, Mode::exhaustive);
  all_passed(reports, o);
  expect_counts(reports, {1, 2, 14, 132, 1430, 16796}, o);
  return o;
}

Outcome lemma7() {
  Outcome o;
  const auto thm2 = verify_range(IdentityId::thm2, 0, 5, Mode::exhaustive);
  all_passed(thm2, o);
  expect_counts(thm2, {1, 8, 96, 1280, 17920, 258048}, o);
  // each report for n >= 1 also checks 16 S_{n-1} - 8 L_{n-1} against the enumeration
  const auto lemma7 = verify_range(IdentityId::lemma7, 0, 5, Mode::exhaustive);
  all_passed(lemma7, o);
  expect_counts(lemma7, {1, 8, 96, 1280, 17920, 258048}, o);
  return o;
}

Outcome lemma5() {
  Outcome o;
  const auto reports = verify_range(IdentityId::lemma5, 0, 8, Mode::exhaustive);
  all_passed(reports, o);
  expect_counts(reports, {1, 2, 6, 20, 70, 252, 924, 3432, 12870}, o);
  return o;
}

Outcome lemma6() {
  Outcome o;
  all_passed(verify_range(IdentityId::lemma6a, 0, 4, Mode::exhaustive), o);
  all_passed(verify_range(IdentityId::lemma6b, 0, 4, Mode::exhaustive), o);
  return o;
}

Outcome theorem9() {
  Outcome o;
  const auto reports = verify_range(IdentityId::thm9, 0, 4, Mode::exhaustive);
  all_passed(reports, o);
  expect_counts(reports, {0, 4, 80, 1408, 23808}, o);
  if (reports.size() == 5) {
    o.require(reports[4].expected == kTheorem9AtEight, "|O| at 2n=8 is " + reports[4].expected.to_string());
    o.require(reports[4].expected == reports[4].actual, "|E| != |O| at 2n=8");
  }
  return o;
}

Outcome fuzz() {
  Outcome o;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> chi_n(0, kChiMaxParameter);
  std::size_t failures = 0;
  for (std::size_t k = 0; k < kChiTrials; ++k) {
    const BalancedPath b = testing::random_balanced(chi_n(rng), rng);
    if (!(chi_inv(chi(b)) == b)) {
      if (failures++ == 0) o.require(false, "chi round-trip failed on " + b.str());
    }
  }
  std::uniform_int_distribution<std::size_t> psi_half(0, kPsiMaxParameter / 2);
  for (std::size_t k = 0; k < kPsiTrials; ++k) {
    const DyckPath d = testing::random_dyck(2 * psi_half(rng), rng);
    const SignedSeq s = psi(d);
    const BalancedPath image = even_zeroed_from_dyck(d);
    const bool ok = psi_inv(s) == d && s.all_parameters_odd() && s.weight() == d.parameter() &&
                    is_even_zeroed(image.path()) && image.parameter() == d.parameter() &&
                    dyck_from_even_zeroed(image) == d;
    if (!ok && failures++ == 0) o.require(false, "psi round-trip or image check failed on " + d.str());
  }
  return o;
}

Outcome triangle_claims() {
  Outcome o;
  const auto reports = triangle_checks(12);
  all_passed(reports, o);
  bool brute_to_16 = false;
  for (const auto& r : reports)
    if (r.mode == Mode::exhaustive && r.n == 4) brute_to_16 = true;
  o.require(brute_to_16, "brute-force comparison did not reach t = 16");
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args, const Registry& reg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err, reg);
  return {code, out.str()};
}

Outcome cli_contract() {
  Outcome o;
  const Registry reg = Registry::standard();
  Registry broken = Registry::standard();
  broken.set(IdentityId::thm1, Mode::numeric,
             CheckSpec{[](std::uint64_t n, const Limits&) {
                         return CheckOutcome{ExactCount(n), ExactCount(n + 1), false,
                                             Witness{"deliberately broken check", {}}};
                       },
                       [](const Limits&) { return std::int64_t{20}; }, 0});

  const auto exit_is = [&](int want, const std::vector<std::string>& args, const Registry& r) {
    const int got = cli_run(args, r).code;
    std::string line;
    for (const auto& a : args) line += " " + a;
    o.require(got == want, "exit " + std::to_string(got) + " (want " + std::to_string(want) + ") for" + line);
  };
  exit_is(0, {"verify", "--identity", "thm2", "--range", "0..10"}, reg);
  exit_is(0, {"decompose", "--map", "psi", "--input", "UUDD"}, reg);
  exit_is(1, {"verify", "--identity", "thm1", "--n", "3"}, broken);
  exit_is(0, {"verify", "--identity", "thm2", "--n", "3"}, broken);
  exit_is(2, {"verify", "--identity", "thm3", "--n", "3"}, reg);
  exit_is(2, {"decompose", "--map", "chi", "--input", "UUD"}, reg);
  exit_is(2, {"verify", "--identity", "thm8", "--n", "1", "--mode", "exhaustive"}, reg);
  exit_is(3, {"verify", "--identity", "thm2", "--n", "21"}, reg);
  exit_is(3, {"enumerate", "--family", "paths", "--n", "40"}, reg);

  const std::vector<std::vector<std::string>> json_runs = {
      {"verify", "--identity", "all", "--range", "0..20", "--mode", "numeric", "--format", "json"},
      {"verify", "--identity", "all", "--range", "0..3", "--mode", "exhaustive", "--format", "json"},
      {"verify", "--identity", "all", "--range", "0..3", "--mode", "both", "--format", "json"},
      {"verify", "--identity", "thm1", "--range", "0..2", "--format", "json"}};
  for (std::size_t k = 0; k < json_runs.size(); ++k) {
    const CliRun r = cli_run(json_runs[k], k + 1 == json_runs.size() ? broken : reg);
    const auto j = nlohmann::ordered_json::parse(r.out, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.empty()) {
      o.require(false, "verify output is not a non-empty JSON array");
      continue;
    }
    bool any_failed = false;
    for (const auto& item : j) {
      const std::string why = testing::report_schema_violation(item);
      o.require(why.empty(), "schema: " + why + " in " + item.dump());
      any_failed = any_failed || (item.contains("passed") && item["passed"] == false);
    }
    o.require(r.code == (any_failed ? 1 : 0), "exit code does not reflect the reports");
  }

  for (const auto& args : std::vector<std::vector<std::string>>{
           {"render", "--what", "decomposition", "--input", "UUDDDDUU", "--map", "chi"},
           {"render", "--what", "decomposition", "--input", "UUDUDDUDUUDUDDUD", "--map", "psi"},
           {"render", "--what", "decomposition", "--input", "()", "--map", "chi"},
           {"render", "--what", "triangle", "--rows", "4"},
           {"render", "--what", "triangle", "--rows", "4", "--omit-forbidden"}}) {
    const CliRun a = cli_run(args, reg);
    const CliRun b = cli_run(args, reg);
    o.require(a.code == 0 && !a.out.empty() && a.out == b.out, "SVG differs between runs for " + args[4]);
  }
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double budget_ms;  // 0 = untimed
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "numeric identity suite, n = 0..20", kNumericBudgetMs, numeric_suite},
      {2, "even-zeroed balanced paths vs Dyck paths, n = 0..5", kLemma3BudgetMs, lemma3},
      {3, "even-zeroed paths of length 4n with accounting, n = 0..5", kLemma7BudgetMs, lemma7},
      {4, "non-returning paths, n = 0..8", kLemma5BudgetMs, lemma5},
      {5, "rightmost-intercept grouping, n = 0..4", kLemma6BudgetMs, lemma6},
      {6, "E/O pair bijection, 2n = 0..8", kTheorem9BudgetMs, theorem9},
      {7, "chi and psi round-trips under fuzzing", 0, fuzz},
      {8, "counting triangle, DP vs enumeration and closed forms", kTriangleBudgetMs, triangle_claims},
      {9, "CLI exit codes, JSON schema, deterministic SVG", 0, cli_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (c.budget_ms > 0 && ms >= c.budget_ms) {
      o.require(false, "took " + std::to_string(ms) + " ms, budget " + std::to_string(c.budget_ms) + " ms");
    }
    char timing[64];
    if (c.budget_ms > 0)
      std::snprintf(timing, sizeof timing, "%.1f ms < %.0f ms", ms, c.budget_ms);
    else
      std::snprintf(timing, sizeof timing, "%.1f ms", ms);
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " (" << timing << ")";
    if (!o.passed) std::cout << ": " << o.detail;
    std::cout << '\n';
    if (!o.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
