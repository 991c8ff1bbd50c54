// F-orbits of G under the right action <|, their stabilizers, and the
// classification that drives the census results: Gamma-indices, Delta
// tuples, members, m-families, mixed/unmixed, and null-indicator orbits.
//
// An orbit is a null indicator orbit when the representative's inverse
// lies outside the orbit; every simple module induced from such an orbit
// has indicator 0, so the indicator engine can skip it.  In the sharply
// k-transitive shape each orbit is exactly one member M_{I,D}, stabilizers
// are point stabilizers in Sym(Gamma), and family counts follow binomial
// formulas which the tests pin against the computed partition.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bismash/factorization.hpp"
#include "bismash/group.hpp"
#include "bismash/perm.hpp"

namespace bismash {

struct MemberClass {
  std::vector<int> gamma_indices;  // sorted i in 1..k with alpha_i in Gamma
  std::vector<int> delta_tuple;    // [alpha_j : j not in I], tuple order
  std::vector<int> delta_set;      // sorted set of the delta tuple
  int m = 0;                       // |I|, the family number
  bool mixed = false;
};

struct OrbitRecord {
  Perm representative;             // least member
  std::vector<int> members;        // sorted indices into G.elements()
  int64_t size = 0;
  PermGroup stabilizer;            // {a in F : x <| a = x}
  bool null_indicator = false;
  std::optional<MemberClass> member_class;  // shape route only
};

class OrbitSet {
 public:
  const std::vector<OrbitRecord>& orbits() const { return records_; }
  int count() const { return static_cast<int>(records_.size()); }
  int orbit_of_index(int g_index) const { return orbit_of_[g_index]; }

  // per-family (member count, null count); shape route only
  std::map<int, std::pair<int64_t, int64_t>> family_census() const;

 private:
  friend OrbitSet compute_orbits(const ExactFactorization& fact);
  std::vector<OrbitRecord> records_;
  std::vector<int> orbit_of_;
  bool shape_ = false;
};

OrbitSet compute_orbits(const ExactFactorization& fact);

// {a in F : x <| a = x}; point stabilizer of the Gamma entries of the
// tuple in the sharply transitive shape, direct scan otherwise
PermGroup stabilizer_in_F(const ExactFactorization& fact, const Perm& x);

// (I, D, Delta-set, m, mixed) from the gident tuple; shape route only
MemberClass classify(const ExactFactorization& fact, const Perm& g);

// true iff x^{-1} is not in the <|-orbit of x
bool is_null_indicator_orbit(const ExactFactorization& fact, const Perm& x);

// whether g restricted to its Delta-set is an involution; requires an
// unmixed class, where that restriction is a permutation of the set
bool restriction_is_involution(const Perm& g, const MemberClass& mc);

}  // namespace bismash
