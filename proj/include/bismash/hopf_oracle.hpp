// Brute-force oracle for the bismash product on basis {p_y # a}: builds
// the full action and multiplication tables, then verifies the Hopf
// axioms, the integral's second power, the antipode trace, and the module
// axiom by direct evaluation, reporting a witness for any violation.
//
// The oracle trusts nothing but the rewrite g.f = (g |> f).(g <| f),
// which it re-checks by permutation arithmetic before using the tables.
// Quadratic and cubic axiom scans are collapsed to index identities whose
// derivations are spelled out at the call sites; each collapse is pure
// delta-function bookkeeping on the sparse structure constants, so the
// scans still cover every basis pair (or triple) exactly.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bismash/factorization.hpp"

namespace bismash {

struct OracleCheck {
  std::string name;
  bool ok = false;
  std::string witness;  // empty when ok
};

struct HopfOracleReport {
  int64_t dim = 0;       // |F| * |G|
  int64_t trace_s = 0;   // diagonal count of the antipode
  int64_t involutions = 0;  // involutions of L, identity included
  std::vector<OracleCheck> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// cap guards the table sizes; CapError when |F| * |G| exceeds it
HopfOracleReport hopf_oracle(const ExactFactorization& fact,
                             int64_t cap = 5040);

// one line per check, pass or fail with witness
std::string oracle_text(const HopfOracleReport& report);

}  // namespace bismash
