// Named reproduction cases and the acceptance suite.
//
// Each case builds a factorization, runs the engine, and checks the
// frozen expected values bundled with it (orbit counts, null counts,
// family censuses, traces, stabilizer data, indicator patterns).  The
// acceptance suite groups the cases into ten numbered criteria and adds
// the property checks: matched-pair laws, the null-orbit equivalences,
// the Hopf oracle, conjugation invariance, the fixed-point-count
// identities, the involution recursions, and the degree <= 10 sweep
// over catalog-expressible factorizations.

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace bismash::cases {

struct Assertion {
  std::string label;
  bool ok = false;
  std::string detail;  // actual values, shown with the verdict
};

struct CaseResult {
  std::string name;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;  // informational lines, no verdict
  bool passed() const;
};

struct CaseDef {
  std::string name;
  std::string summary;
  std::function<CaseResult(int threads)> run;
};

const std::vector<CaseDef>& registry();
const CaseDef* find_case(const std::string& name);

struct CriterionResult {
  int number = 0;
  std::string label;
  bool ok = false;
  std::vector<std::string> detail;  // per-case outcome lines
};

// criteria 1..10; every full_report call inside honors the thread count
// Runs the ten criteria in order.  When progress is given, one line per
// criterion is streamed as it completes, with detail lines on failure.
std::vector<CriterionResult> run_acceptance(int threads,
                                            std::ostream* progress = nullptr);

}  // namespace bismash::cases
