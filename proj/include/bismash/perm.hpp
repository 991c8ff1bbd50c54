// Permutations of {1..n} with left-to-right composition and GAP-style
// cycle notation, plus the involution/fixed-point counting helpers the
// rest of the engine leans on.
//
// Composition order is the one convention everything else depends on:
// (p * q) applies p first, then q, so i^(p*q) = (i^p)^q and
// (1,2) * (1,3) = (1,2,3).  There is no right-to-left API.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bismash {

class Perm {
 public:
  Perm() = default;                              // identity on the empty set
  explicit Perm(int n);                          // identity on {1..n}
  explicit Perm(std::vector<uint8_t> images0);   // 0-based image array

  // images1[i-1] is the image of point i.
  static Perm from_one_line(const std::vector<int>& images1);

  int degree() const { return static_cast<int>(images_.size()); }

  // Points are 1-based at the API boundary.
  int apply(int point) const { return images_[point - 1] + 1; }

  Perm operator*(const Perm& rhs) const;         // left to right
  Perm inverse() const;
  Perm conjugate_by(const Perm& x) const;        // x^-1 * (*this) * x
  Perm power(int64_t e) const;

  bool is_identity() const;
  bool is_involution() const;                    // p*p = id; identity counts
  int sign() const;                              // +1 or -1
  bool is_even() const { return sign() == 1; }
  int order() const;

  int num_fixed_points() const;
  std::vector<int> fixed_points() const;         // ascending, 1-based

  // Nontrivial cycles, each rotated to start at its least point and
  // listed in order of least point; the canonical form str() prints.
  std::vector<std::vector<int>> cycles() const;

  // Cycle lengths including fixed points, weakly decreasing: a partition
  // of the degree.
  std::vector<int> cycle_type() const;

  // Cycle type of the restriction to an invariant set of points.
  std::vector<int> cycle_type_on(const std::vector<int>& points) const;

  std::string str() const;                       // "(1,4)(2,3,5)", id -> "()"

  bool operator==(const Perm&) const = default;
  std::strong_ordering operator<=>(const Perm&) const = default;

  const std::vector<uint8_t>& images() const { return images_; }

 private:
  std::vector<uint8_t> images_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

// Parses "(1,2,3)(4,5)" into a permutation of {1..n}; "()" is the identity.
Perm parse_cycles(const std::string& text, int n);

struct PermHash {
  size_t operator()(const Perm& p) const noexcept;
};

// Number of involutions in S_n (identity included), by the recursion
// i_n = i_{n-1} + (n-1) i_{n-2}.  Exact in int64 up to n = 25.
int64_t involution_count(int n);

// profile[m] = number of elements of S_n with exactly m fixed points,
// by direct enumeration of S_n.  Refuses n > 10.
std::vector<int64_t> fixed_point_profile(int n);

}  // namespace bismash
