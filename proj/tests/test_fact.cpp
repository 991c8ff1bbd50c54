// Exact factorization tests: pinned decompositions against brute-force
// search, matched-pair laws, both decomposition routes, and file parsing.

#include <cstdio>
#include <fstream>
#include <numeric>
#include <utility>
#include <vector>

#include "bismash/catalog.hpp"
#include "bismash/errors.hpp"
#include "bismash/factorization.hpp"
#include "bismash/group.hpp"
#include "bismash/perm.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bismash;
using testutil::Rng;
using testutil::random_perm;

namespace {

ExactFactorization s5_fact() {
  return ExactFactorization::build(
      PermGroup::full_symmetric_on(5, {1, 2, 3, 4}), cyclic_regular(5));
}

// exhaustive search over F x G; requires exactly one hit
std::pair<Perm, Perm> brute_decompose(const ExactFactorization& fact,
                                      const Perm& l) {
  std::vector<std::pair<Perm, Perm>> hits;
  for (const Perm& f : fact.left_factor().elements())
    for (const Perm& g : fact.right_factor().elements())
      if (f * g == l) hits.emplace_back(f, g);
  REQUIRE(hits.size() == 1);
  return hits[0];
}

void check_matched_pair_laws(const ExactFactorization& fact) {
  const auto& fels = fact.left_factor().elements();
  const auto& gels = fact.right_factor().elements();
  Perm ef = fact.left_factor().identity();
  Perm eg = ef;

  for (const Perm& x : gels)
    for (const Perm& a : fels) {
      // unit laws
      CHECK(fact.act_right(eg, a) == eg);
      CHECK(fact.act_left(x, ef) == ef);
      CHECK(fact.act_left(eg, a) == a);
      CHECK(fact.act_right(x, ef) == x);
      // reconstruction
      CHECK(fact.act_left(x, a) * fact.act_right(x, a) == x * a);
    }

  // compatibility law (1): x |> (ab) = (x |> a)((x <| a) |> b)
  for (const Perm& x : gels)
    for (const Perm& a : fels)
      for (const Perm& b : fels)
        CHECK(fact.act_left(x, a * b) ==
              fact.act_left(x, a) * fact.act_left(fact.act_right(x, a), b));

  // compatibility law (2): (xy) <| a = (x <| (y |> a))(y <| a)
  for (const Perm& x : gels)
    for (const Perm& y : gels)
      for (const Perm& a : fels)
        CHECK(fact.act_right(x * y, a) ==
              fact.act_right(x, fact.act_left(y, a)) * fact.act_right(y, a));
}

}  // namespace

TEST_CASE("Sym(5) = Sym(4) * C5 is exact and in the sharply transitive shape") {
  auto fact = s5_fact();
  CHECK(fact.shape_route());
  CHECK(fact.k() == 1);
  CHECK(fact.ambient().order() == 120);
  CHECK(fact.gamma_points() == std::vector<int>{1, 2, 3, 4});
  CHECK(fact.delta_points() == std::vector<int>{5});

  Perm id(5);
  auto [fi, gi] = fact.decompose(id);
  CHECK(fi == id);
  CHECK(gi == id);

  // elements of one factor decompose against the identity of the other
  for (const Perm& f : fact.left_factor().elements())
    CHECK(fact.decompose(f) == std::make_pair(f, id));
  for (const Perm& g : fact.right_factor().elements())
    CHECK(fact.decompose(g) == std::make_pair(id, g));
}

TEST_CASE("pinned decomposition of (4,5) in Sym(5) = Sym(4) * C5") {
  auto fact = s5_fact();
  Perm l = parse_cycles("(4,5)", 5);
  auto got = fact.decompose(l);
  CHECK(got.first == parse_cycles("(1,2,3,4)", 5));
  CHECK(got.second == parse_cycles("(1,5,4,3,2)", 5));
  CHECK(got == brute_decompose(fact, l));
}

TEST_CASE("fast path agrees with brute force on every element") {
  auto fact = s5_fact();
  auto ambient = symmetric_group(5);
  for (const Perm& l : ambient.elements())
    CHECK(fact.decompose(l) == brute_decompose(fact, l));
}

TEST_CASE("decompose of compose returns the original pair") {
  auto check_all = [](const ExactFactorization& fact) {
    for (const Perm& f : fact.left_factor().elements())
      for (const Perm& g : fact.right_factor().elements())
        CHECK(fact.decompose(f * g) == std::make_pair(f, g));
  };
  check_all(s5_fact());
  // generic route: Sym(4) = Alt(4) * <odd involution>
  check_all(ExactFactorization::build(
      PermGroup::full_alternating_on(4, {1, 2, 3, 4}),
      PermGroup::from_generators(4, {parse_cycles("(1,2)", 4)})));
}

TEST_CASE("matched pair laws hold exhaustively") {
  check_matched_pair_laws(s5_fact());
  check_matched_pair_laws(ExactFactorization::build(
      PermGroup::full_alternating_on(4, {1, 2, 3, 4}),
      PermGroup::from_generators(4, {parse_cycles("(1,2)", 4)})));
  // another shape case with k = 2
  check_matched_pair_laws(ExactFactorization::build(
      PermGroup::full_symmetric_on(5, {1, 2, 3}), agl1(5)));
}

TEST_CASE("a normal factor makes the opposite action trivial") {
  // G = Alt(5) normal in Sym(5): g |> f = f throughout
  auto fact = ExactFactorization::build(
      PermGroup::from_generators(5, {parse_cycles("(4,5)", 5)}),
      PermGroup::full_alternating_on(5, {1, 2, 3, 4, 5}));
  CHECK_FALSE(fact.shape_route());  // tau moves points outside {1,2}
  for (const Perm& g : fact.right_factor().elements())
    for (const Perm& f : fact.left_factor().elements())
      CHECK(fact.act_left(g, f) == f);

  // F = Alt(5) normal: g <| f = g, and g |> f is conjugation
  auto swapped = ExactFactorization::build(
      PermGroup::full_alternating_on(5, {1, 2, 3, 4, 5}),
      PermGroup::from_generators(5, {parse_cycles("(4,5)", 5)}));
  for (const Perm& g : swapped.right_factor().elements())
    for (const Perm& f : swapped.left_factor().elements()) {
      CHECK(swapped.act_right(g, f) == g);
      CHECK(swapped.act_left(g, f) == f.conjugate_by(g.inverse()));
    }
}

TEST_CASE("alternating groups land in the shape route as right factors") {
  // Alt(n) is sharply (n-2)-transitive
  auto fact = ExactFactorization::build(
      PermGroup::from_generators(5, {parse_cycles("(1,2)", 5)}),
      alternating_group(5));
  CHECK(fact.shape_route());
  CHECK(fact.k() == 3);
  auto ambient = symmetric_group(5);
  for (const Perm& l : ambient.elements())
    CHECK(fact.decompose(l) == brute_decompose(fact, l));
}

TEST_CASE("gident tuples are a bijection with the right factor") {
  auto fact = ExactFactorization::build(
      PermGroup::full_symmetric_on(5, {1, 2, 3}), agl1(5));
  CHECK(fact.k() == 2);
  for (const Perm& g : fact.right_factor().elements()) {
    auto alphas = fact.gident_tuple(g);
    CHECK(alphas.size() == 2);
    CHECK(fact.from_gident_tuple(alphas) == g);
  }
  CHECK_THROWS_AS(fact.from_gident_tuple({1, 1}), StructureError);
  CHECK_THROWS_AS(fact.from_gident_tuple({1}), StructureError);
}

TEST_CASE("non-factorizations are rejected with witnesses") {
  // size obstruction: two copies of Sym(3) cover too little of Sym(5)
  CHECK_THROWS_AS(
      ExactFactorization::build(PermGroup::full_symmetric_on(5, {1, 2, 3}),
                                PermGroup::full_symmetric_on(5, {3, 4, 5})),
      NotExactError);
  // intersection obstruction
  try {
    ExactFactorization::build(
        PermGroup::from_generators(5, {parse_cycles("(1,2)", 5)}),
        symmetric_group(5));
    FAIL("expected NotExactError");
  } catch (const NotExactError& e) {
    CHECK(std::string(e.what()).find("witness (1,2)") != std::string::npos);
  }
}

TEST_CASE("membership violations in the actions are rejected") {
  auto fact = s5_fact();
  Perm outside = parse_cycles("(4,5)", 5);  // in neither factor
  CHECK_THROWS_AS(fact.act_left(outside, Perm(5)), StructureError);
  CHECK_THROWS_AS(fact.act_right(Perm(5), outside), StructureError);
}

TEST_CASE("conjugating the factors preserves exactness") {
  auto fact = s5_fact();
  auto same = fact.conjugate_factors(Perm(5), Perm(5));
  CHECK(same.left_factor().same_group(fact.left_factor()));
  CHECK(same.right_factor().same_group(fact.right_factor()));

  Rng rng{20240817};
  for (int trial = 0; trial < 5; ++trial) {
    Perm x = random_perm(rng, 5);
    Perm y = random_perm(rng, 5);
    auto conj = fact.conjugate_factors(x, y);
    CHECK(conj.ambient().order() == 120);
    CHECK(conj.left_factor().order() == 24);
    CHECK(conj.right_factor().order() == 5);
  }
}

TEST_CASE("the counterexample factorization of Sym(7)") {
  auto fact = ExactFactorization::build(
      twisted_symmetric(7, 2),
      PermGroup::from_generators(7, {parse_cycles("(1,2,3,4,5,6,7)", 7),
                                     parse_cycles("(1,3,2,6,4,5)", 7)}));
  CHECK_FALSE(fact.shape_route());
  CHECK(fact.left_factor().order() == 120);
  CHECK(fact.right_factor().order() == 42);
  CHECK(fact.ambient().order() == 5040);
  Perm x = parse_cycles("(1,2,6)(4,7,5)", 7);
  CHECK(fact.right_factor().contains(x));

  // spot-check the generic route against brute force
  Rng rng{991};
  for (int trial = 0; trial < 20; ++trial) {
    Perm l = random_perm(rng, 7);
    auto [f, g] = fact.decompose(l);
    CHECK(fact.left_factor().contains(f));
    CHECK(fact.right_factor().contains(g));
    CHECK(f * g == l);
  }
}

TEST_CASE("spec files parse into verified factorizations") {
  auto write = [](const char* path, const char* body) {
    std::ofstream out(path);
    out << body;
  };

  write("/tmp/fact_k1.spec",
        "# comment line\n"
        "degree 5\n"
        "[F]\nS4\n"
        "[G]\nC5\n");
  auto k1 = ExactFactorization::from_spec_file("/tmp/fact_k1.spec");
  CHECK(k1.shape_route());
  CHECK(k1.k() == 1);
  CHECK(k1.left_factor().is_full_symmetric());

  write("/tmp/fact_cntrex.spec",
        "degree 7\n"
        "[F]\nWtS:7:2\n"
        "[G]\n(1,2,3,4,5,6,7)\n(1,3,2,6,4,5)\n");
  auto cx = ExactFactorization::from_spec_file("/tmp/fact_cntrex.spec");
  CHECK(cx.left_factor().order() == 120);
  CHECK(cx.right_factor().order() == 42);

  write("/tmp/fact_bad1.spec", "[F]\nS4\n[G]\nC5\n");
  CHECK_THROWS_AS(ExactFactorization::from_spec_file("/tmp/fact_bad1.spec"),
                  FormatError);
  write("/tmp/fact_bad2.spec", "degree 5\n[F]\n[G]\nC5\n");
  CHECK_THROWS_AS(ExactFactorization::from_spec_file("/tmp/fact_bad2.spec"),
                  FormatError);
  CHECK_THROWS_AS(ExactFactorization::from_spec_file("/tmp/no_such.spec"),
                  FormatError);
  std::remove("/tmp/fact_k1.spec");
  std::remove("/tmp/fact_cntrex.spec");
  std::remove("/tmp/fact_bad1.spec");
  std::remove("/tmp/fact_bad2.spec");
}
