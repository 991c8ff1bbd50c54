// Orbit machinery tests: censuses for k = 1..4, the worked classification
// rows for PGL(2,11), null-orbit detection, and stabilizer structure.

#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "bismash/catalog.hpp"
#include "bismash/errors.hpp"
#include "bismash/factorization.hpp"
#include "bismash/group.hpp"
#include "bismash/orbits.hpp"
#include "bismash/perm.hpp"
#include "doctest.h"

using namespace bismash;

namespace {

ExactFactorization k1_fact(int n) {
  std::vector<int> gamma(n - 1);
  std::iota(gamma.begin(), gamma.end(), 1);
  return ExactFactorization::build(PermGroup::full_symmetric_on(n, gamma),
                                   cyclic_regular(n));
}

ExactFactorization k2_fact(int q) {
  std::vector<int> gamma(q - 2);
  std::iota(gamma.begin(), gamma.end(), 1);
  return ExactFactorization::build(PermGroup::full_symmetric_on(q, gamma),
                                   agl1(q));
}

ExactFactorization k3_fact(int q) {
  std::vector<int> gamma(q - 2);
  std::iota(gamma.begin(), gamma.end(), 1);
  return ExactFactorization::build(PermGroup::full_symmetric_on(q + 1, gamma),
                                   pgl2(q));
}

int64_t falling(int n, int m) {
  int64_t r = 1;
  for (int j = 0; j < m; ++j) r *= n - j;
  return r;
}

void check_orbit_stabilizer(const ExactFactorization& fact,
                            const OrbitSet& set) {
  int64_t f_order = fact.left_factor().order();
  int64_t covered = 0;
  for (const auto& rec : set.orbits()) {
    CHECK(rec.size * rec.stabilizer.order() == f_order);
    CHECK(rec.size == static_cast<int64_t>(rec.members.size()));
    covered += rec.size;
  }
  CHECK(covered == fact.right_factor().order());
}

}  // namespace

TEST_CASE("k=1: two orbits with the expected stabilizers") {
  for (int n = 5; n <= 8; ++n) {
    auto fact = k1_fact(n);
    auto set = compute_orbits(fact);
    REQUIRE(set.count() == 2);
    check_orbit_stabilizer(fact, set);

    std::multiset<int64_t> sizes, stabs;
    for (const auto& rec : set.orbits()) {
      sizes.insert(rec.size);
      stabs.insert(rec.stabilizer.order());
      CHECK_FALSE(rec.null_indicator);
    }
    CHECK(sizes == std::multiset<int64_t>{1, n - 1});
    CHECK(stabs == std::multiset<int64_t>{falling(n - 2, n - 2) * 1,
                                          falling(n - 1, n - 1)});
  }
}

TEST_CASE("k=2: seven orbits, two null, both in the 1-family") {
  for (int q : {5, 7, 8}) {
    auto fact = k2_fact(q);
    CHECK(fact.k() == 2);
    auto set = compute_orbits(fact);
    REQUIRE(set.count() == 7);
    check_orbit_stabilizer(fact, set);

    auto census = set.family_census();
    REQUIRE(census.size() == 3);
    CHECK(census[0] == std::make_pair<int64_t, int64_t>(2, 0));
    CHECK(census[1] == std::make_pair<int64_t, int64_t>(4, 2));
    CHECK(census[2] == std::make_pair<int64_t, int64_t>(1, 0));

    // the two null orbits are the two non-involution members
    for (const auto& rec : set.orbits())
      if (rec.member_class->m == 1 && !rec.member_class->mixed)
        CHECK(rec.null_indicator !=
              restriction_is_involution(rec.representative,
                                        *rec.member_class));
  }
}

TEST_CASE("k=3: thirty-four orbits and the family census") {
  for (int q : {5, 7}) {
    auto fact = k3_fact(q);
    CHECK(fact.k() == 3);
    auto set = compute_orbits(fact);
    REQUIRE(set.count() == 34);
    check_orbit_stabilizer(fact, set);

    auto census = set.family_census();
    CHECK(census[0] == std::make_pair<int64_t, int64_t>(6, 2));
    CHECK(census[1] == std::make_pair<int64_t, int64_t>(18, 12));
    CHECK(census[2] == std::make_pair<int64_t, int64_t>(9, 6));
    CHECK(census[3] == std::make_pair<int64_t, int64_t>(1, 0));

    // orbit sizes depend only on the family: (n-k)!/(n-k-m)!
    int s = q - 2;
    for (const auto& rec : set.orbits())
      CHECK(rec.size == falling(s, rec.member_class->m));
  }
}

TEST_CASE("k=4: Mathieu M11 census") {
  auto fact = ExactFactorization::build(
      PermGroup::full_symmetric_on(11, {1, 2, 3, 4, 5, 6, 7}), mathieu11());
  CHECK(fact.k() == 4);
  auto set = compute_orbits(fact);
  REQUIRE(set.count() == 209);
  check_orbit_stabilizer(fact, set);

  auto census = set.family_census();
  CHECK(census[0] == std::make_pair<int64_t, int64_t>(24, 14));
  CHECK(census[1] == std::make_pair<int64_t, int64_t>(96, 80));
  CHECK(census[2] == std::make_pair<int64_t, int64_t>(72, 60));
  CHECK(census[3] == std::make_pair<int64_t, int64_t>(16, 12));
  CHECK(census[4] == std::make_pair<int64_t, int64_t>(1, 0));

  int64_t null_total = 0;
  for (const auto& rec : set.orbits())
    if (rec.null_indicator) ++null_total;
  CHECK(null_total == 166);
}

TEST_CASE("worked classification rows in degree 12 with k = 3") {
  auto fact = k3_fact(11);
  CHECK(fact.k() == 3);
  CHECK(fact.right_factor().order() == 1320);

  // the classification reads the tuple straight off the permutation, so
  // these rows pin it without regard to which conjugate copy of the
  // right factor the permutations came from
  struct Row {
    const char* g;
    std::vector<int> tuple, I, D, delta_set;
  };
  std::vector<Row> rows = {
      {"(1,10,9,5,12)(2,11,8,4,3)", {9, 8, 1}, {1, 2, 3}, {}, {}},
      {"(1,2,3,4,5,6,7,8,9,10,11,12)", {11, 12, 1}, {3}, {11, 12}, {11, 12}},
      {"(1,7,8)(2,4,5)(3,9,6)(10,12,11)",
       {12, 10, 11},
       {},
       {12, 10, 11},
       {10, 11, 12}},
      {"(1,7,4,5,3)(2,12,10,11,8)", {11, 8, 10}, {2}, {11, 10}, {10, 11}},
  };
  for (const auto& row : rows) {
    Perm g = parse_cycles(row.g, 12);
    CHECK(fact.gident_tuple(g) == row.tuple);
    auto mc = classify(fact, g);
    CHECK(mc.gamma_indices == row.I);
    CHECK(mc.delta_tuple == row.D);
    CHECK(mc.delta_set == row.delta_set);
    CHECK(mc.m == static_cast<int>(row.I.size()));
  }

  // mixedness of the rows with Gamma-indices: 12 lands in row 2's
  // Delta-set and 11 in row 4's, so both are mixed
  CHECK(classify(fact, parse_cycles(rows[1].g, 12)).mixed);
  CHECK(classify(fact, parse_cycles(rows[3].g, 12)).mixed);
  CHECK_FALSE(classify(fact, parse_cycles(rows[0].g, 12)).mixed);
  CHECK_FALSE(classify(fact, parse_cycles(rows[2].g, 12)).mixed);
}

TEST_CASE("orbits coincide with members: same orbit iff same (I, D)") {
  auto fact = k3_fact(5);
  auto set = compute_orbits(fact);
  const auto& els = fact.right_factor().elements();
  std::vector<MemberClass> cls;
  for (const Perm& g : els) cls.push_back(classify(fact, g));
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = i + 1; j < els.size(); ++j) {
      bool same_orbit = set.orbit_of_index(static_cast<int>(i)) ==
                        set.orbit_of_index(static_cast<int>(j));
      bool same_member = cls[i].gamma_indices == cls[j].gamma_indices &&
                         cls[i].delta_tuple == cls[j].delta_tuple;
      CHECK(same_orbit == same_member);
    }
}

TEST_CASE("mixed members are always null") {
  for (int q : {5, 7}) {
    auto set = compute_orbits(k3_fact(q));
    for (const auto& rec : set.orbits())
      if (rec.member_class->mixed) CHECK(rec.null_indicator);
  }
}

TEST_CASE("null flag is member-independent and matches the direct check") {
  auto cases = {k2_fact(7), k3_fact(5)};
  for (const auto& fact : cases) {
    auto set = compute_orbits(fact);
    const auto& els = fact.right_factor().elements();
    for (const auto& rec : set.orbits())
      for (int yi : rec.members)
        CHECK(is_null_indicator_orbit(fact, els[yi]) == rec.null_indicator);
  }
}

TEST_CASE("identity orbit is a singleton and never null") {
  auto fact = k2_fact(7);
  auto set = compute_orbits(fact);
  int idx = fact.right_factor().index_of(Perm(7));
  const auto& rec = set.orbits()[set.orbit_of_index(idx)];
  CHECK(rec.size == 1);
  CHECK(rec.representative.is_identity());
  CHECK_FALSE(rec.null_indicator);
  CHECK(rec.stabilizer.same_group(fact.left_factor()));
}

TEST_CASE("full-stabilizer orbits: null iff the element is not an involution") {
  // F = Alt(n), G = <(1,2)>: both orbits are singletons with F_x = F
  auto fact = ExactFactorization::build(
      PermGroup::full_alternating_on(5, {1, 2, 3, 4, 5}),
      PermGroup::from_generators(5, {parse_cycles("(1,2)", 5)}));
  auto set = compute_orbits(fact);
  REQUIRE(set.count() == 2);
  for (const auto& rec : set.orbits()) {
    CHECK(rec.size == 1);
    CHECK(rec.stabilizer.same_group(fact.left_factor()));
    CHECK_FALSE(rec.null_indicator);  // both members square to the identity
  }
  CHECK_THROWS_AS(set.family_census(), StructureError);
}

TEST_CASE("orbits for the dual alternating factorization") {
  // F = <(1,2)>, G = Alt(5): orbits are {x, x^tau}; null iff the inverse
  // misses both
  auto fact = ExactFactorization::build(
      PermGroup::from_generators(5, {parse_cycles("(1,2)", 5)}),
      alternating_group(5));
  CHECK(fact.shape_route());
  auto set = compute_orbits(fact);
  check_orbit_stabilizer(fact, set);
  Perm tau = parse_cycles("(1,2)", 5);
  for (const auto& rec : set.orbits()) {
    const Perm& x = rec.representative;
    Perm conj = x.conjugate_by(tau);
    CHECK(rec.size == (conj == x ? 1 : 2));
    Perm inv = x.inverse();
    CHECK(rec.null_indicator == (inv != x && inv != conj));
  }
}

TEST_CASE("counterexample stabilizer matches the published generators") {
  auto fact = ExactFactorization::build(
      twisted_symmetric(7, 2),
      PermGroup::from_generators(7, {parse_cycles("(1,2,3,4,5,6,7)", 7),
                                     parse_cycles("(1,3,2,6,4,5)", 7)}));
  Perm x = parse_cycles("(1,2,6)(4,7,5)", 7);
  auto stab = stabilizer_in_F(fact, x);
  CHECK(stab.order() == 12);
  auto published = PermGroup::from_generators(
      7, {parse_cycles("(2,4)(6,7)", 7), parse_cycles("(1,5)(2,3,4)(6,7)", 7)});
  CHECK(stab.same_group(published));

  auto set = compute_orbits(fact);
  check_orbit_stabilizer(fact, set);
  int xi = fact.right_factor().index_of(x);
  CHECK(set.orbits()[set.orbit_of_index(xi)].size == 10);
}
