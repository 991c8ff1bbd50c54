// Exact factorizations L = F*G and the derived matched-pair actions.
//
// build() verifies the two defining conditions, trivial intersection and
// |F|*|G| = |L|, and reports a witness when either fails.  Decomposition
// l = f*g runs one of two routes.  When G is sharply k-transitive on
// {1..n} and F is the full symmetric group on {1..n-k}, the unique g
// agreeing with l on the top k points comes from a tuple table and then
// f = l*g^{-1}.  Otherwise the smaller factor is scanned against
// membership in the other, with a bounded thread-safe cache in front.
//
// The actions are the matched-pair pair of the factorization: for
// l = g*f rewritten as f'*g', act_left(g,f) = g|>f = f' and
// act_right(g,f) = g<|f = g'.

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bismash/group.hpp"
#include "bismash/perm.hpp"

namespace bismash {

class ExactFactorization {
 public:
  // verifies exactness; throws NotExactError with a witness otherwise
  static ExactFactorization build(PermGroup f, PermGroup g);

  // text format: "degree n", then "[F]" and "[G]" blocks, each holding
  // either one catalog name or one generator per line in cycle notation
  static ExactFactorization from_spec_file(const std::string& path);

  const PermGroup& ambient() const { return l_; }
  const PermGroup& left_factor() const { return f_; }
  const PermGroup& right_factor() const { return g_; }
  int degree() const { return n_; }

  // sharply k-transitive shape: G sharply k-transitive, F = Sym(Gamma)
  bool shape_route() const { return shape_; }
  int k() const { return k_; }                 // 0 when not in shape
  std::vector<int> gamma_points() const;       // {1..n-k}, shape only
  std::vector<int> delta_points() const;       // {n-k+1..n}, shape only

  std::pair<Perm, Perm> decompose(const Perm& l) const;
  Perm act_left(const Perm& g, const Perm& f) const;   // g |> f, in F
  Perm act_right(const Perm& g, const Perm& f) const;  // g <| f, in G

  // the identification g ~ [alpha_1..alpha_k], alpha_i = (n-k+i)^g
  std::vector<int> gident_tuple(const Perm& g) const;
  const Perm& from_gident_tuple(const std::vector<int>& alphas) const;

  // the factorization L = F^y * G^x, rebuilt and reverified
  ExactFactorization conjugate_factors(const Perm& x, const Perm& y) const;

 private:
  ExactFactorization() = default;

  uint64_t tuple_key(const Perm& l) const;

  PermGroup l_, f_, g_;
  int n_ = 0;
  bool shape_ = false;
  int k_ = 0;
  std::unordered_map<uint64_t, int> tuple_index_;  // packed tuple -> G index

  struct Cache {
    std::mutex m;
    std::unordered_map<Perm, std::pair<Perm, Perm>, PermHash> table;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace bismash
