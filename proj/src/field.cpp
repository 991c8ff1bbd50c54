#include "bismash/field.hpp"

#include <array>

#include "bismash/errors.hpp"

namespace bismash {

namespace {

// non-leading coefficients (x^0 first) of a monic irreducible modulus
struct Modulus {
  int p, e;
  std::array<int, 5> coeffs;
};

constexpr Modulus kModuli[] = {
    {2, 2, {1, 1, 0, 0, 0}},  // x^2 + x + 1
    {2, 3, {1, 1, 0, 0, 0}},  // x^3 + x + 1
    {2, 4, {1, 1, 0, 0, 0}},  // x^4 + x + 1
    {2, 5, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
    {3, 2, {1, 0, 0, 0, 0}},  // x^2 + 1
    {3, 3, {1, 2, 0, 0, 0}},  // x^3 + 2x + 1
    {5, 2, {1, 1, 0, 0, 0}},  // x^2 + x + 1
};

std::vector<int> digits(int code, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int encode(const std::vector<int>& d, int p) {
  int code = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  if (q < 2 || q > 32) throw StructureError("field size must be in 2..32");
  int p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) p = q;  // remaining q is prime
  }
  int e = 0, t = q;
  while (t > 1) {
    if (t % p != 0) throw StructureError("field size is not a prime power");
    t /= p;
    ++e;
  }
  p_ = p;
  e_ = e;

  const Modulus* mod = nullptr;
  if (e > 1) {
    for (const auto& m : kModuli)
      if (m.p == p && m.e == e) mod = &m;
    if (!mod) throw StructureError("no modulus on file for this field size");
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p, e);
    std::vector<int> dn(e);
    for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = encode(dn, p);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p, e);
      std::vector<int> ds(e);
      for (int i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = encode(ds, p);

      // polynomial product reduced by the modulus
      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (int d = 2 * e - 2; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i)
          prod[d - e + i] = ((prod[d - e + i] - c * mod->coeffs[i]) % p + p) % p;
      }
      prod.resize(e);
      mul_[a * q + b] = encode(prod, p);
    }
  }

  // every nonzero element must be invertible, or the modulus was bad
  for (int a = 1; a < q; ++a) {
    bool has_inv = false;
    for (int b = 1; b < q && !has_inv; ++b) has_inv = mul(a, b) == 1;
    if (!has_inv) throw StructureError("modulus on file is not irreducible");
  }

  primitive_ = 0;
  for (int g = 1; g < q && primitive_ == 0; ++g) {
    int x = g, ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) primitive_ = g;
  }

  square_.assign(q, false);
  for (int a = 0; a < q; ++a) square_[mul(a, a)] = true;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw StructureError("inverting zero");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  return 0;  // unreachable after construction-time validation
}

int FiniteField::pow(int a, int64_t k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  k %= (q_ - 1);
  if (k < 0) k += q_ - 1;
  int r = 1, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

}  // namespace bismash
