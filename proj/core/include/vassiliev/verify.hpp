#pragma once

#include <string>
#include <vector>

namespace vassiliev {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

/// Available suites: lemma-families, psi, brauer, vogel, table1, sigma,
/// coefficients, mprops, w-relation, axioms.
std::vector<std::string> verify_suites();

/// Runs one suite; throws std::invalid_argument for an unknown name.
std::vector<CheckResult> verify(const std::string& suite);

/// Runs every suite in order, concatenating results (names prefixed by
/// "suite/").
std::vector<CheckResult> verify_all();

}  // namespace vassiliev
