// Acceptance gate: one line per criterion, exact comparisons throughout.
#include <cstdio>
#include <string>
#include <vector>

#include "vassiliev/verify.hpp"

using vassiliev::CheckResult;

namespace {

struct Criterion {
  int number;
  std::string description;
  std::vector<CheckResult> checks;
};

bool report(const Criterion& c) {
  int failed = 0;
  for (const auto& r : c.checks)
    if (!r.pass) ++failed;
  if (failed == 0) {
    std::printf("PASS criterion %d: %s (%zu checks)\n", c.number,
                c.description.c_str(), c.checks.size());
    return true;
  }
  std::printf("FAIL criterion %d: %s (%d of %zu checks failed)\n", c.number,
              c.description.c_str(), failed, c.checks.size());
  for (const auto& r : c.checks)
    if (!r.pass)
      std::printf("  %s: expected %s, got %s\n", r.name.c_str(),
                  r.expected.c_str(), r.actual.c_str());
  return false;
}

}  // namespace

int main() {
  std::vector<CheckResult> brauer = vassiliev::verify("brauer");
  std::vector<CheckResult> identities, wheel_trace;
  for (auto& r : brauer)
    (r.name.rfind("wheel-trace/", 0) == 0 ? wheel_trace : identities).push_back(r);

  std::vector<Criterion> criteria{
      {1, "family closed forms", vassiliev::verify("lemma-families")},
      {2, "degree-6 primitive element values", vassiliev::verify("psi")},
      {3, "Brauer algebra identities", identities},
      {4, "Brauer traces match wheel evaluations", wheel_trace},
      {5, "dimension table at desk scale", vassiliev::verify("table1")},
      {6, "spanning-list ranks", vassiliev::verify("sigma")},
      {7, "degree-1 coefficient table", vassiliev::verify("coefficients")},
      {8, "order/vanishing table and M-list ranks", vassiliev::verify("mprops")},
      {9, "w-functional values", vassiliev::verify("w-relation")},
      {10, "weight-system axioms over full enumeration",
       vassiliev::verify("axioms")},
  };

  bool all_ok = true;
  for (const auto& c : criteria)
    if (!report(c)) all_ok = false;
  return all_ok ? 0 : 1;
}
