#include "bismash/catalog.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "bismash/errors.hpp"
#include "bismash/field.hpp"
#include "bismash/perm.hpp"
#include "doctest.h"

using namespace bismash;

TEST_CASE("field axioms hold exhaustively for small q") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    FiniteField k(q);
    CHECK(k.q() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(k.add(a, 0) == a);
      CHECK(k.mul(a, 1) == a);
      CHECK(k.add(a, k.neg(a)) == 0);
      if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(k.add(a, b) == k.add(b, a));
        CHECK(k.mul(a, b) == k.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
          CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
          CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("frobenius generates the galois group") {
  for (int q : {4, 8, 9, 16, 25, 27, 32}) {
    FiniteField k(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)));
        CHECK(k.frobenius(k.mul(a, b)) == k.mul(k.frobenius(a), k.frobenius(b)));
      }
    // order of frobenius is the extension degree
    int id_after = 0, x = k.primitive_element(), y = x;
    do {
      y = k.frobenius(y);
      ++id_after;
    } while (y != x);
    CHECK(id_after == k.e());
  }
  CHECK_THROWS_AS(FiniteField(6), StructureError);
  CHECK_THROWS_AS(FiniteField(33), StructureError);
}

TEST_CASE("cyclic regular representation") {
  auto c7 = cyclic_regular(7);
  CHECK(c7.order() == 7);
  CHECK(is_sharply_k_transitive(c7, 1));
  for (const Perm& p : c7.elements())
    CHECK((p.is_identity() || p.num_fixed_points() == 0));
}

TEST_CASE("one dimensional affine groups") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    auto g = agl1(q);
    CHECK(g.order() == static_cast<int64_t>(q) * (q - 1));
    CHECK(is_sharply_k_transitive(g, 2));
  }
}

TEST_CASE("even affine subgroups") {
  // odd q: scaling by a generator is an odd permutation, so index 2;
  // q a power of 2: the whole group is even
  for (int q : {5, 7, 11}) CHECK(asl1(q).order() == agl1(q).order() / 2);
  for (int q : {4, 8}) CHECK(asl1(q).order() == agl1(q).order());
  auto half = asl1(7);
  for (const Perm& p : half.elements()) CHECK(p.is_even());
}

TEST_CASE("semilinear affine groups") {
  CHECK(agammal1(8).order() == 8 * 7 * 3);
  CHECK(agammal1(9).order() == 9 * 8 * 2);
  CHECK(agammal1(7).order() == 42);  // prime field: no twist
}

TEST_CASE("projective linear groups") {
  for (int q : {5, 7, 8, 9, 11}) {
    auto g = pgl2(q);
    CHECK(g.order() == static_cast<int64_t>(q) * q * q - q);
    CHECK(is_sharply_k_transitive(g, 3));
  }
  CHECK(psl2(11).order() == 660);
  CHECK_FALSE(is_sharply_k_transitive(psl2(11), 3));
  CHECK(psl2(8).order() == pgl2(8).order());
  CHECK(pgammal2(9).order() == 1440);
  CHECK(pgammal2(8).order() == 1512);

  // PSL sits inside PGL
  auto big = pgl2(7);
  auto small = psl2(7);
  for (const Perm& p : small.elements()) CHECK(big.contains(p));
}

TEST_CASE("mathieu groups verify at load") {
  auto m11 = mathieu11();
  CHECK(m11.order() == 7920);
  CHECK(is_sharply_k_transitive(m11, 4));
  auto m12 = mathieu12();
  CHECK(m12.order() == 95040);
  CHECK(is_sharply_k_transitive(m12, 5));
}

TEST_CASE("twisted symmetric groups") {
  auto w = twisted_symmetric(7, 2);
  CHECK(w.order() == 120);
  CHECK(w.contains(parse_cycles("(1,2)(6,7)", 7)));
  CHECK(w.contains(parse_cycles("(1,2,3,4,5)", 7)));
  // every generator is a double transposition, so the whole group is even;
  // the subgroup fixing the far pair {6,7} is the index-2 untwisted part
  int64_t fixing = 0;
  for (const Perm& p : w.elements()) {
    CHECK(p.is_even());
    if (p.apply(6) == 6) {
      CHECK(p.apply(7) == 7);
      ++fixing;
    } else {
      CHECK(p.apply(6) == 7);
      CHECK(p.apply(7) == 6);
    }
  }
  CHECK(fixing == 60);

  auto w93 = twisted_symmetric(9, 3);
  CHECK(w93.order() == 720);
  for (const Perm& p : w93.elements()) CHECK(p.is_even());

  CHECK_THROWS_AS(twisted_symmetric(7, 6), StructureError);
}

namespace {

// transitivity straight from the definition: the images of the base
// k-tuple must hit every duplicate-free k-tuple exactly once
bool brute_sharply_k_transitive(const PermGroup& g, int k) {
  int n = g.degree();
  if (k < 1 || k > n) return false;
  std::set<std::vector<int>> images;
  for (const Perm& p : g.elements()) {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = p.apply(i + 1);
    if (!images.insert(t).second) return false;  // some tuple hit twice
  }
  int64_t want = 1;
  for (int i = 0; i < k; ++i) want *= n - i;
  return static_cast<int64_t>(images.size()) == want;
}

}  // namespace

TEST_CASE("sharp transitivity checker agrees with the definition") {
  std::vector<PermGroup> groups{
      cyclic_regular(6),   cyclic_regular(7),   symmetric_group(4),
      symmetric_group(5),  alternating_group(5), alternating_group(6),
      agl1(5),             agl1(7),             agl1(8),
      agl1(9),             asl1(5),             asl1(7),
      agammal1(8),         agammal1(9),         pgl2(5),
      pgl2(7),             pgl2(9),             psl2(7),
      psl2(9),             psl2(11),            twisted_symmetric(7, 2),
  };
  for (const auto& g : groups) {
    REQUIRE(g.order() <= 2000);
    for (int k = 1; k <= std::min(6, g.degree()); ++k)
      CHECK(is_sharply_k_transitive(g, k) == brute_sharply_k_transitive(g, k));
  }
}

TEST_CASE("catalog lookup by name") {
  CHECK(catalog_group("C6").order() == 6);
  CHECK(catalog_group("S5").order() == 120);
  CHECK(catalog_group("A5").order() == 60);
  CHECK(catalog_group("AGL1:7").order() == 42);
  CHECK(catalog_group("ASL1:7").order() == 21);
  CHECK(catalog_group("AGammaL1:8").order() == 168);
  CHECK(catalog_group("PGL2:5").order() == 120);
  CHECK(catalog_group("PSL2:11").order() == 660);
  CHECK(catalog_group("PGammaL2:9").order() == 1440);
  CHECK(catalog_group("M11").order() == 7920);
  CHECK(catalog_group("WtS:7:2").order() == 120);
  CHECK_THROWS_AS(catalog_group("Q8"), FormatError);
  CHECK_THROWS_AS(catalog_group("AGL1:six"), FormatError);
  CHECK_THROWS_AS(catalog_group(""), FormatError);
}

TEST_CASE("catalog lookup at an enlarged degree") {
  PermGroup a5 = catalog_group_at_degree("A5", 7);
  CHECK(a5.degree() == 7);
  CHECK(a5.order() == 60);
  CHECK(a5.is_full_alternating());
  for (const Perm& p : a5.generators()) {
    CHECK(p.apply(6) == 6);
    CHECK(p.apply(7) == 7);
  }
  PermGroup s4 = catalog_group_at_degree("S4", 6);
  CHECK(s4.is_full_symmetric());
  CHECK(s4.order() == 24);
  PermGroup ag = catalog_group_at_degree("AGL1:5", 8);
  CHECK(ag.degree() == 8);
  CHECK(ag.order() == 20);
  CHECK(catalog_group_at_degree("C4", 4).same_group(catalog_group("C4")));
  CHECK_THROWS_AS(catalog_group_at_degree("M11", 9), FormatError);
}
