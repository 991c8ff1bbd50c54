// Frobenius-Schur indicators of the simple modules of the bismash
// product k^G # kF built from an exact factorization L = FG.
//
// A simple module is a pair (F-orbit of G, irreducible of the orbit
// stabilizer); its dimension is the orbit size times the character
// degree, and its indicator equals the induced character evaluated at
// Lambda^[2], the second Sweedler power of the normalized integral.
// The evaluation is organized per orbit: walk the sets F_{y^-1,y} as
// stabilizer cosets, conjugate every contribution back into the
// representative's stabilizer, and collect an integer histogram over
// its conjugacy classes, so each character row costs one dot product.
// Indicators are exact integers and must land in {-1, 0, 1}; the full
// report also checks the antipode trace identity against the count of
// involutions in the ambient group.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bismash/chars.hpp"
#include "bismash/factorization.hpp"
#include "bismash/group.hpp"
#include "bismash/orbits.hpp"
#include "bismash/perm.hpp"

namespace bismash {

// p_y # a
struct HopfBasisElem {
  Perm y;
  Perm a;
};

// Lambda^[2] = (1/|F|) sum_y sum_{a in F_{y^-1,y}} p_y # (y^-1 |> a)a,
// stored as integer numerators over the fixed denominator |F|
struct LambdaSq {
  int64_t denominator = 1;
  std::map<std::pair<Perm, Perm>, int64_t> terms;  // (y, c) -> numerator
};

LambdaSq lambda_sq(const ExactFactorization& fact);

// One orbit's module data: stabilizer, its character table, and a
// deterministic transversal kept as witnesses c with rep <| c = member.
// A nonzero shuffle seed replaces each witness by a random stabilizer
// multiple; every derived value is provably unchanged, which the tests
// exercise.
class InducedModule {
 public:
  InducedModule(const ExactFactorization& fact, const Perm& x,
                uint64_t shuffle_seed = 0);
  InducedModule(const ExactFactorization& fact, const OrbitRecord& record,
                uint64_t shuffle_seed = 0);

  const Perm& representative() const { return x_; }
  const std::vector<Perm>& members() const { return members_; }
  int64_t orbit_size() const { return static_cast<int64_t>(members_.size()); }
  bool null_orbit() const { return null_; }
  const PermGroup& stabilizer() const { return stab_; }
  const CharacterTable& table() const { return table_; }

  int64_t dim(int row) const { return orbit_size() * table_.degree(row); }

  // chi-hat(p_y # a) for the given row; zero off the orbit
  std::complex<double> induced_value(int row, const HopfBasisElem& elem) const;

  // chi-hat(Lambda^[2]) per row, each in {-1, 0, 1}
  std::vector<int> indicators() const;

 private:
  void build(uint64_t shuffle_seed);

  const ExactFactorization* fact_;
  Perm x_;
  std::vector<Perm> members_;
  bool null_ = false;
  PermGroup stab_;
  CharacterTable table_;
  std::unordered_map<Perm, Perm, PermHash> witness_;  // member -> c
};

std::complex<double> induced_char_value(const ExactFactorization& fact,
                                        const Perm& x, int row,
                                        const HopfBasisElem& elem);

int indicator(const ExactFactorization& fact, const Perm& x, int row);

struct SimpleModuleDescriptor {
  int orbit_index = 0;
  int char_index = 0;
  int64_t char_degree = 0;
  int64_t dim = 0;
  int indicator = 0;
};

struct IndicatorReport {
  std::string id;
  int degree = 0;
  int64_t f_order = 0;
  int64_t g_order = 0;
  int k = 0;  // 0 outside the sharply transitive shape
  OrbitSet orbits;
  std::vector<std::vector<SimpleModuleDescriptor>> orbit_modules;
  int64_t trace_lhs = 0;
  int64_t trace_rhs = 0;
  bool totally_orthogonal = false;
  std::map<int, int64_t> indicator_histogram;  // value -> module count

  std::vector<SimpleModuleDescriptor> all_modules() const;
};

// indicators of every simple module, parallel over orbits; throws
// StructureError if the trace identity fails (threads <= 0 means all
// hardware threads)
IndicatorReport full_report(const ExactFactorization& fact, int threads = 0);

// number of l in L with l^2 = e, identity included
int64_t ambient_involution_count(const ExactFactorization& fact);

// multiset of (dim, indicator) pairs agrees with conjugate_factors(x, y)
bool conjugation_invariance_check(const ExactFactorization& fact,
                                  const Perm& x, const Perm& y,
                                  int threads = 0);

std::string report_json(const IndicatorReport& report);
std::string report_csv(const IndicatorReport& report);

}  // namespace bismash
