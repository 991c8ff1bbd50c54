// Acceptance gate: runs the ten criteria and prints one PASS or FAIL
// line per criterion, with detail lines under any failure.  Exits 0 only
// when every criterion passes.

#include <cstdlib>
#include <iostream>
#include <string>

#include "cases.hpp"

int main(int argc, char** argv) {
  int threads = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
  }
  auto results = bismash::cases::run_acceptance(threads, &std::cout);
  bool ok = true;
  for (const auto& c : results) ok = ok && c.ok;
  std::cout << (ok ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return ok ? 0 : 1;
}
