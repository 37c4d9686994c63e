#pragma once

#include <string>
#include <vector>

namespace cohom1 {

// One verification check: `measured` against `tol` (lower is better
// unless `at_least` flips the sense).  Soft checks report without
// affecting the exit status.
struct Check {
  std::string name;
  bool hard = true;
  bool passed = false;
  bool at_least = false;
  double measured = 0;
  double tol = 0;
  std::string note;
};

std::vector<Check> verify_weyl();
std::vector<Check> verify_collapse();
std::vector<Check> verify_oracle();
std::vector<Check> verify_convexity();
std::vector<Check> verify_hitchin();
std::vector<Check> verify_classify();
// emits artifacts twice under dir and compares bytes; dir is created
std::vector<Check> verify_determinism(const std::string& dir);

// weyl | collapse | oracle | convexity | hitchin | classify | determinism | all
std::vector<Check> run_suite(const std::string& name, const std::string& scratch_dir);

bool all_hard_passed(const std::vector<Check>& checks);
std::string format_report(const std::vector<Check>& checks);

}  // namespace cohom1
