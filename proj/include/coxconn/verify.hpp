#pragma once

#include <functional>
#include <string>
#include <vector>

namespace coxconn {

/// A named property check. run() returns an empty string on success and a
/// description of the first counterexample otherwise.
struct PropertyCheck {
  std::string name;
  std::function<std::string()> run;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// Every structural property of the engine, the classical models, the order
/// and the enumeration, each quantified over small groups.
std::vector<PropertyCheck> property_checks();

std::vector<CheckResult> run_checks(const std::vector<PropertyCheck>& checks);

}  // namespace coxconn
