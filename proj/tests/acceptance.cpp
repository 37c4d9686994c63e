// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// hard failure.  Criteria bundle the verification suites with their
// runtime budgets.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "cohom1/verify.hpp"

using namespace cohom1;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0;
  double budget_seconds = 0;  // 0 = no budget
  bool passed() const {
    if (!all_hard_passed(checks)) return false;
    if (budget_seconds > 0 && seconds > budget_seconds) return false;
    return true;
  }
};

double worst_measured(const std::vector<Check>& checks) {
  double w = 0;
  for (const Check& c : checks)
    if (c.hard && !c.at_least) w = std::max(w, c.measured);
  return w;
}

template <class Fn>
Criterion run(const std::string& name, double budget, Fn&& fn) {
  Criterion c;
  c.name = name;
  c.budget_seconds = budget;
  const auto start = Clock::now();
  c.checks = fn();
  c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return c;
}

std::vector<Check> filter(const std::vector<Check>& in, const std::string& prefix) {
  std::vector<Check> out;
  for (const Check& c : in)
    if (c.name.rfind(prefix, 0) == 0) out.push_back(c);
  return out;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::string scratch =
      (std::filesystem::temp_directory_path() / "cohom1-acceptance").string();

  std::vector<Criterion> criteria;

  criteria.push_back(run("1. collapse identities at both ends (<1e-12)", 1.0, verify_collapse));

  {
    const auto start = Clock::now();
    const std::vector<Check> weyl = verify_weyl();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();

    Criterion c2;
    c2.name = "2. Weyl symmetry relation grids (<1e-12 / 1e-8)";
    c2.budget_seconds = 5.0;
    c2.seconds = secs;
    for (const char* frag : {"weyl.cyclic", "weyl.reflection", "weyl.modified", "weyl.evenness",
                             "weyl.finite"}) {
      const auto part = filter(weyl, frag);
      c2.checks.insert(c2.checks.end(), part.begin(), part.end());
    }
    criteria.push_back(c2);

    Criterion c3;
    c3.name = "3. Weyl orders (6,4,12,6,4,8) from the diagrams";
    c3.seconds = secs;
    for (const char* frag : {"weyl.orders", "weyl.order(E_p)", "weyl.(w", "weyl.w+-"}) {
      const auto part = filter(weyl, frag);
      c3.checks.insert(c3.checks.end(), part.begin(), part.end());
    }
    criteria.push_back(c3);
  }

  criteria.push_back(
      run("4. matrix-level oracles match the closed forms (<1e-12 / 1e-10)", 10.0, verify_oracle));

  {
    const auto start = Clock::now();
    const std::vector<Check> hitchin = verify_hitchin();
    // the two criteria share one suite run; charge the full time to both
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();

    Criterion c5;
    c5.name = "5. orbifold metrics: collapse pattern, curvature signs, chain rule";
    c5.budget_seconds = 20.0;
    c5.seconds = secs;
    Criterion c6;
    c6.name = "6. revolution embeddings: arc identity, pole slopes, total curvature";
    c6.budget_seconds = 5.0;
    c6.seconds = secs;
    for (const Check& c : hitchin) {
      const bool embed = c.name.find("embedding") != std::string::npos ||
                         c.name.find("h'(") != std::string::npos ||
                         c.name.find("total curvature") != std::string::npos;
      (embed ? c6 : c5).checks.push_back(c);
    }
    criteria.push_back(c5);
    criteria.push_back(c6);
  }

  criteria.push_back(run("7. classification golden sets at bound 20, stable to 50", 1.0,
                         verify_classify));
  criteria.push_back(run("8. inverse-matrix convexity (PSD second differences)", 0.0,
                         verify_convexity));
  criteria.push_back(run("9. determinism of artifacts; `verify all` green", 0.0, [&] {
    std::vector<Check> checks = verify_determinism(scratch);
    const auto everything = run_suite("all", scratch);
    Check all_green;
    all_green.name = "verify all exits 0";
    all_green.at_least = true;
    all_green.measured = all_hard_passed(everything) ? 1 : 0;
    all_green.tol = 1;
    all_green.passed = all_green.measured >= all_green.tol;
    checks.push_back(all_green);
    return checks;
  }));

  bool all_ok = true;
  for (Criterion& c : criteria) {
    const bool ok = c.passed();
    all_ok = all_ok && ok;
    char budget[32] = "";
    if (c.budget_seconds > 0)
      std::snprintf(budget, sizeof budget, " / budget %.0fs", c.budget_seconds);
    std::printf("[%s] %-70s (worst %.3g, %.2fs%s)\n", ok ? "PASS" : "FAIL", c.name.c_str(),
                worst_measured(c.checks), c.seconds, budget);
  }
  const double wall = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool wall_ok = wall < 60.0;
  std::printf("[%s] total wall clock %.2fs (< 60s)\n", wall_ok ? "PASS" : "FAIL", wall);
  all_ok = all_ok && wall_ok;
  std::printf("%s\n", all_ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return all_ok ? 0 : 1;
}
