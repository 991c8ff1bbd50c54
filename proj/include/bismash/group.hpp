// Finite permutation groups on {1..n}, given by generators and enumerated
// on demand into a sorted element list (lexicographic on image arrays, so
// the identity is always element 0).  Enumeration is capped; the cap comes
// from the BISMASH_CAP environment variable when set.
//
// Groups known to be a full symmetric or alternating group on a point set
// carry that fact structurally: order and membership then work without
// ever enumerating, which is what keeps the larger factorizations cheap.

#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "bismash/perm.hpp"

namespace bismash {

struct ConjClass {
  Perm representative;        // least member
  std::vector<Perm> members;  // sorted ascending
  int64_t size() const { return static_cast<int64_t>(members.size()); }
};

class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(int n);
  static PermGroup from_generators(int n, std::vector<Perm> gens);
  // elements must already be closed under the group operations
  static PermGroup from_elements(int n, std::vector<Perm> elements);
  // Sym / Alt on a subset of {1..n}, fixing everything else
  static PermGroup full_symmetric_on(int n, std::vector<int> points);
  static PermGroup full_alternating_on(int n, std::vector<int> points);

  int degree() const { return n_; }
  Perm identity() const { return Perm(n_); }
  const std::vector<Perm>& generators() const { return gens_; }

  int64_t order() const;                  // enumerates unless structural
  const std::vector<Perm>& elements() const;  // sorted; enumerates
  bool contains(const Perm& p) const;
  // position of p in elements(); -1 if absent
  int index_of(const Perm& p) const;
  const Perm& element(int i) const { return elements()[i]; }

  bool is_trivial() const { return order() == 1; }
  bool same_group(const PermGroup& other) const;

  // subgroup fixing every listed point (pointwise stabilizer)
  PermGroup point_stabilizer(const std::vector<int>& points) const;

  // classes ordered by (size, representative); members sorted
  std::vector<ConjClass> conjugacy_classes() const;

  int64_t count_involutions() const;      // identity included

  // true when the group is structurally Sym(points); set via constructor
  bool is_full_symmetric() const { return kind_ == Kind::full_sym; }
  bool is_full_alternating() const { return kind_ == Kind::full_alt; }
  const std::vector<int>& support_points() const { return points_; }

  static int64_t enumeration_cap();       // BISMASH_CAP or 1'000'000

 private:
  enum class Kind { generic, full_sym, full_alt };

  struct EnumState {
    std::mutex m;
    std::atomic<bool> done{false};
    std::vector<Perm> elements;
    std::unordered_map<Perm, int, PermHash> index;
  };

  void enumerate() const;

  int n_ = 0;
  Kind kind_ = Kind::generic;
  std::vector<int> points_;  // full_sym / full_alt support, ascending
  std::vector<Perm> gens_;
  std::shared_ptr<EnumState> state_ = std::make_shared<EnumState>();
};

}  // namespace bismash
