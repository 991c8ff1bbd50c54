// GF(p^e) for q = p^e <= 32, with table-based arithmetic.
//
// Elements are encoded as integers 0..q-1: the base-p digits of the code
// are the coefficients of the polynomial representative, so 0 and 1 are
// the field's zero and one.  Each extension degree uses one fixed
// irreducible modulus, embedded below; construction validates it by
// checking that every nonzero element is invertible.

#pragma once

#include <cstdint>
#include <vector>

namespace bismash {

class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;  // a != 0
  int div(int a, int b) const { return mul(a, inv(b)); }

  int pow(int a, int64_t k) const;
  int frobenius(int a) const { return pow(a, p_); }

  // least multiplicative generator
  int primitive_element() const { return primitive_; }
  // true for 0 and for quadratic residues
  bool is_square(int a) const { return square_[a]; }

 private:
  int q_, p_, e_;
  int primitive_;
  std::vector<int> add_, mul_, neg_;
  std::vector<bool> square_;
};

}  // namespace bismash
