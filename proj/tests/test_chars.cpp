// Character table tests: combinatorial route against pinned values, Dixon
// route against classical tables, and the two routes against each other.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "bismash/catalog.hpp"
#include "bismash/chars.hpp"
#include "bismash/errors.hpp"
#include "bismash/group.hpp"
#include "bismash/perm.hpp"
#include "doctest.h"

using namespace bismash;

TEST_CASE("partitions are generated in descending lex order") {
  auto p5 = partitions_of(5);
  CHECK(p5.size() == 7);
  CHECK(p5.front() == Partition{5});
  CHECK(p5.back() == Partition{1, 1, 1, 1, 1});
  CHECK(std::is_sorted(p5.begin(), p5.end(), std::greater<Partition>()));
  CHECK(partitions_of(9).size() == 30);
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
}

TEST_CASE("hook length dimensions") {
  CHECK(sym_dimension({2, 1}) == 2);
  CHECK(sym_dimension({2, 1, 1}) == 3);
  CHECK(sym_dimension({3, 2}) == 5);
  CHECK(sym_dimension({2, 2, 1}) == 5);
  CHECK(sym_dimension({}) == 1);
  for (int m = 1; m <= 8; ++m) {
    int64_t sq = 0;
    for (const auto& shape : partitions_of(m)) {
      int64_t d = sym_dimension(shape);
      sq += d * d;
    }
    int64_t fact = 1;
    for (int j = 2; j <= m; ++j) fact *= j;
    CHECK(sq == fact);
  }
}

TEST_CASE("Murnaghan-Nakayama pinned values") {
  // sign character of Sym(2) at a transposition
  CHECK(sym_character({1, 1}, {2}) == -1);
  CHECK(sym_character({2}, {2}) == 1);
  // the standard character of Sym(3)
  CHECK(sym_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(sym_character({2, 1}, {2, 1}) == 0);
  CHECK(sym_character({2, 1}, {3}) == -1);
  CHECK(sym_character({2, 1}, {3}) == -1);
  // a couple of Sym(5) entries
  CHECK(sym_character({3, 2}, {1, 1, 1, 1, 1}) == 5);
  CHECK(sym_character({3, 2}, {5}) == 0);
  CHECK(sym_character({3, 2}, {2, 2, 1}) == 1);
  // shape (3,1,1) has no hook of length 3, so a 3-part kills the value
  CHECK(sym_character({3, 1, 1}, {3, 2}) == 0);
  CHECK(sym_character({3, 1, 1}, {2, 2, 1}) == -2);
  CHECK(sym_character({3, 1, 1}, {5}) == 1);
}

TEST_CASE("symmetric route table for Sym(4)") {
  auto t = CharacterTable::symmetric_on_support(4, {1, 2, 3, 4});
  CHECK(t.is_symmetric_route());
  CHECK(t.num_rows() == 5);
  CHECK(t.num_classes() == 5);
  CHECK(t.group_order() == 24);
  CHECK(t.integral());

  // identity class first, sizes sum to the order
  CHECK(t.columns()[0].representative.is_identity());
  int64_t total = 0;
  for (const auto& c : t.columns()) total += c.size;
  CHECK(total == 24);

  // rows are sorted by degree: 1,1,2,3,3
  std::vector<int64_t> degs;
  for (int r = 0; r < t.num_rows(); ++r) degs.push_back(t.degree(r));
  CHECK(degs == std::vector<int64_t>{1, 1, 2, 3, 3});

  // column orthogonality against the identity column
  for (int c = 1; c < t.num_classes(); ++c) {
    int64_t dot = 0;
    for (int r = 0; r < t.num_rows(); ++r)
      dot += t.degree(r) * t.ivalue(r, c);
    CHECK(dot == 0);
  }
}

TEST_CASE("symmetric route works on scattered support") {
  auto t = CharacterTable::symmetric_on_support(9, {2, 4, 5, 8});
  CHECK(t.group_order() == 24);
  Perm p = parse_cycles("(2,4)(5,8)", 9);
  int cls = t.class_of(p);
  CHECK(t.columns()[cls].cycle_type == Partition{2, 2});
  // a permutation moving points off the support is rejected
  CHECK_THROWS_AS(t.class_of(parse_cycles("(1,2)", 9)), StructureError);
}

TEST_CASE("first orthogonality holds for the symmetric route") {
  auto t = CharacterTable::symmetric_on_support(6, {1, 2, 3, 4, 5, 6});
  for (int x = 0; x < t.num_rows(); ++x)
    for (int y = x; y < t.num_rows(); ++y) {
      int64_t dot = 0;
      for (int c = 0; c < t.num_classes(); ++c)
        dot += t.columns()[c].size * t.ivalue(x, c) * t.ivalue(y, c);
      CHECK(dot == (x == y ? t.group_order() : 0));
    }
}

TEST_CASE("Dixon route on Alt(5)") {
  auto t = CharacterTable::dixon(alternating_group(5));
  CHECK_FALSE(t.is_symmetric_route());
  CHECK(t.num_rows() == 5);
  CHECK(t.group_order() == 60);
  std::vector<int64_t> degs;
  for (int r = 0; r < t.num_rows(); ++r) degs.push_back(t.degree(r));
  CHECK(degs == std::vector<int64_t>{1, 3, 3, 4, 5});
  // the two 3-dimensional rows carry the golden ratio values
  CHECK_FALSE(t.integral());
  bool found_golden = false;
  double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int r = 0; r < t.num_rows(); ++r)
    for (int c = 0; c < t.num_classes(); ++c)
      if (std::abs(t.value(r, c).real() - golden) < 1e-9 &&
          std::abs(t.value(r, c).imag()) < 1e-9)
        found_golden = true;
  CHECK(found_golden);
  // degree-1, 4 and 5 rows are integral
  CHECK(t.row_integral(0));
  CHECK(t.row_integral(3));
  CHECK(t.row_integral(4));
}

TEST_CASE("Dixon route on PSL(2,7)") {
  auto g = psl2(7);
  auto t = CharacterTable::for_group(g);
  CHECK_FALSE(t.is_symmetric_route());
  CHECK(t.group_order() == 168);
  std::vector<int64_t> degs;
  for (int r = 0; r < t.num_rows(); ++r) degs.push_back(t.degree(r));
  CHECK(degs == std::vector<int64_t>{1, 3, 3, 6, 7, 8});
  // the 3-dimensional pair is complex (values involve sqrt(-7))
  CHECK_FALSE(t.row_integral(1));
  CHECK_FALSE(t.row_integral(2));
}

TEST_CASE("Dixon route on a dihedral group of order 12") {
  auto g = PermGroup::from_generators(
      6, {parse_cycles("(1,2,3,4,5,6)", 6),
          parse_cycles("(1,6)(2,5)(3,4)", 6)});
  CHECK(g.order() == 12);
  auto t = CharacterTable::for_group(g);
  CHECK(t.num_rows() == 6);
  std::vector<int64_t> degs;
  for (int r = 0; r < t.num_rows(); ++r) degs.push_back(t.degree(r));
  CHECK(degs == std::vector<int64_t>{1, 1, 1, 1, 2, 2});
  CHECK(t.integral());
  for (int r = 0; r < t.num_rows(); ++r) CHECK(group_fs_indicator(t, r) == 1);
}

TEST_CASE("Dixon agrees with Murnaghan-Nakayama on small symmetric groups") {
  for (int m = 2; m <= 6; ++m) {
    std::vector<int> support(m);
    std::iota(support.begin(), support.end(), 1);
    auto mn = CharacterTable::symmetric_on_support(m, support);
    auto dx = CharacterTable::dixon(symmetric_group(m));
    REQUIRE(dx.num_rows() == mn.num_rows());
    REQUIRE(dx.num_classes() == mn.num_classes());

    // match Dixon columns to combinatorial columns through cycle types
    std::vector<int> col_map(dx.num_classes());
    for (int c = 0; c < dx.num_classes(); ++c) {
      auto type = dx.columns()[c].representative.cycle_type_on(support);
      col_map[c] = mn.class_of_cycle_type(type);
      CHECK(dx.columns()[c].size == mn.columns()[col_map[c]].size);
    }

    // compare rows as multisets of reindexed value vectors
    auto rows_of = [&](const CharacterTable& t, bool remap) {
      std::vector<std::vector<int64_t>> rows;
      for (int r = 0; r < t.num_rows(); ++r) {
        std::vector<int64_t> vals(t.num_classes() + 1);
        vals[0] = t.degree(r);
        for (int c = 0; c < t.num_classes(); ++c) {
          double v = t.value(r, c).real();
          REQUIRE(std::abs(t.value(r, c).imag()) < 1e-6);
          REQUIRE(std::abs(v - std::round(v)) < 1e-6);
          vals[1 + (remap ? col_map[c] : c)] = llround(v);
        }
        rows.push_back(std::move(vals));
      }
      std::sort(rows.begin(), rows.end());
      return rows;
    };
    CHECK(rows_of(dx, true) == rows_of(mn, false));
  }
}

TEST_CASE("for_group dispatches full symmetric groups to the fast route") {
  CHECK(CharacterTable::for_group(symmetric_group(5)).is_symmetric_route());
  auto scattered = PermGroup::full_symmetric_on(9, {3, 6, 7});
  auto t = CharacterTable::for_group(scattered);
  CHECK(t.is_symmetric_route());
  CHECK(t.group_order() == 6);
  CHECK_FALSE(CharacterTable::for_group(alternating_group(4)).is_symmetric_route());
}

TEST_CASE("trivial and tiny groups") {
  auto t = CharacterTable::for_group(PermGroup::from_generators(5, {}));
  CHECK(t.num_rows() == 1);
  CHECK(t.degree(0) == 1);
  CHECK(t.group_order() == 1);
  CHECK(group_fs_indicator(t, 0) == 1);

  auto c2 = CharacterTable::for_group(
      PermGroup::from_generators(4, {parse_cycles("(1,2)(3,4)", 4)}));
  CHECK(c2.num_rows() == 2);
  CHECK(group_fs_indicator(c2, 0) == 1);
  CHECK(group_fs_indicator(c2, 1) == 1);
}

TEST_CASE("group indicators: symmetric groups are totally orthogonal") {
  for (int n = 2; n <= 7; ++n) {
    auto t = CharacterTable::for_group(symmetric_group(n));
    for (int r = 0; r < t.num_rows(); ++r)
      CHECK(group_fs_indicator(t, r) == 1);
  }
}

TEST_CASE("group indicators on alternating groups") {
  // no quaternionic representations in this range; complex pairs show up
  // in Alt(4) and Alt(7)
  for (int n = 4; n <= 7; ++n) {
    auto g = alternating_group(n);
    auto t = CharacterTable::for_group(g);
    int zeros = 0;
    for (int r = 0; r < t.num_rows(); ++r) {
      int nu = group_fs_indicator(t, r);
      CHECK(nu >= 0);
      CHECK(nu <= 1);
      if (nu == 0) ++zeros;
    }
    if (n == 4 || n == 7) CHECK(zeros == 2);
    if (n == 5 || n == 6) CHECK(zeros == 0);
  }
}

TEST_CASE("indicator from classes matches the element sum") {
  for (int n = 4; n <= 6; ++n) {
    auto g = alternating_group(n);
    auto t = CharacterTable::for_group(g);
    for (int r = 0; r < t.num_rows(); ++r) {
      std::complex<double> sum(0.0, 0.0);
      for (const Perm& x : g.elements()) sum += t.value(r, t.class_of(x * x));
      sum /= static_cast<double>(g.order());
      CHECK(std::abs(sum.real() - group_fs_indicator(t, r)) < 1e-8);
      CHECK(std::abs(sum.imag()) < 1e-8);
    }
  }
}

TEST_CASE("cyclic groups: one linear character per element") {
  auto t = CharacterTable::for_group(cyclic_regular(5));
  CHECK(t.num_rows() == 5);
  for (int r = 0; r < t.num_rows(); ++r) CHECK(t.degree(r) == 1);
  // indicator 1 for the trivial row, 0 for the four complex rows
  int ones = 0, zeros = 0;
  for (int r = 0; r < t.num_rows(); ++r) {
    int nu = group_fs_indicator(t, r);
    if (nu == 1) ++ones;
    if (nu == 0) ++zeros;
  }
  CHECK(ones == 1);
  CHECK(zeros == 4);
}

TEST_CASE("class count cap") {
  CHECK_THROWS_AS(CharacterTable::dixon(cyclic_regular(64)), CapError);
}

TEST_CASE("csv export") {
  auto t = CharacterTable::for_group(symmetric_group(3));
  auto csv = t.to_csv();
  CHECK(csv.find("class") == 0);
  CHECK(csv.find("(1,2,3)") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // 2 headers + 3 rows
}
