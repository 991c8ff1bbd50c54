// Ordinary character tables.
//
// Full symmetric groups (on any support set) get the combinatorial route:
// rows are partitions, dimensions come from hook lengths, values from the
// Murnaghan-Nakayama rule, all exact in int64.  Every other group goes
// through Dixon's modular method: eigenvectors of class-sum matrices over
// a prime field F_p with p = 1 (mod exponent), degrees from the inverted
// orthogonality sum, complex values recovered from root-of-unity
// multiplicities.  Dixon values are guarded doubles; integrality is
// detected per value.
//
// Tables order rows by (degree, then values); columns follow the class
// order (size, then representative).

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bismash/group.hpp"
#include "bismash/perm.hpp"

namespace bismash {

using Partition = std::vector<int>;  // weakly decreasing positive parts

// all partitions of m, in descending lexicographic order: [m] first,
// [1,1,...,1] last
std::vector<Partition> partitions_of(int m);

int64_t sym_dimension(const Partition& shape);  // hook length formula

// irreducible symmetric group character: row `shape`, class `cycle_type`
int64_t sym_character(const Partition& shape, const Partition& cycle_type);

class CharacterTable {
 public:
  struct Column {
    Perm representative;
    int64_t size;
    Partition cycle_type;  // on the support; sym route only
  };

  // dispatch: a group that is all of Sym(support) takes the partition
  // route, everything else Dixon
  static CharacterTable for_group(const PermGroup& g);
  static CharacterTable symmetric_on_support(int degree, std::vector<int> support);
  static CharacterTable dixon(const PermGroup& g);

  int num_rows() const { return static_cast<int>(values_.size()); }
  int num_classes() const { return static_cast<int>(columns_.size()); }
  int64_t group_order() const { return group_order_; }
  const std::vector<Column>& columns() const { return columns_; }

  int64_t degree(int row) const { return degrees_[row]; }
  std::complex<double> value(int row, int cls) const { return values_[row][cls]; }
  bool row_integral(int row) const;
  bool integral() const;
  // exact integer value; the row must be integral
  int64_t ivalue(int row, int cls) const;

  int class_of(const Perm& p) const;
  int class_of_cycle_type(const Partition& t) const;  // sym route only
  bool is_symmetric_route() const { return sym_route_; }
  const std::vector<int>& support() const { return support_; }

  std::string to_csv() const;

 private:
  bool sym_route_ = false;
  int degree_n_ = 0;
  int64_t group_order_ = 0;
  std::vector<int> support_;  // sym route
  std::vector<Column> columns_;
  std::vector<int64_t> degrees_;
  std::vector<std::vector<std::complex<double>>> values_;
  std::unordered_map<Perm, int, PermHash> class_index_;      // dixon route
  std::unordered_map<std::string, int> cycle_type_index_;    // sym route
};

// Frobenius-Schur indicator of one irreducible row: (1/|G|) sum chi(g^2).
// Exact when the row is integral; guarded rounding otherwise.
int group_fs_indicator(const CharacterTable& table, int row);

}  // namespace bismash
