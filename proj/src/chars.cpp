#include "bismash/chars.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bismash/errors.hpp"

namespace bismash {

namespace {

constexpr double kTol = 1e-6;

int64_t factorial(int m) {
  int64_t f = 1;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

std::string key_of(const Partition& t) {
  std::string s;
  for (int part : t) {
    s += std::to_string(part);
    s += ',';
  }
  return s;
}

void gen_partitions(int remaining, int max_part, Partition& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    gen_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

// centralizer order of the cycle type inside Sym(m)
int64_t z_order(const Partition& t) {
  int64_t z = 1;
  int run = 0, prev = 0;
  for (int part : t) {
    if (part == prev) {
      ++run;
    } else {
      prev = part;
      run = 1;
    }
    z *= static_cast<int64_t>(part) * run;
  }
  return z;
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  Partition prefix;
  gen_partitions(m, m, prefix, out);
  if (m == 0) out = {Partition{}};
  return out;
}

int64_t sym_dimension(const Partition& shape) {
  int m = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> conj;  // column lengths
  for (int col = 0; col < (shape.empty() ? 0 : shape[0]); ++col) {
    int len = 0;
    for (int part : shape)
      if (part > col) ++len;
    conj.push_back(len);
  }
  int64_t hooks = 1;
  for (size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j)
      hooks *= shape[i] - j + conj[j] - static_cast<int>(i) - 1;
  return factorial(m) / hooks;
}

namespace {

// beta-number form of the Murnaghan-Nakayama recursion; consumes the
// first part of the cycle type each step
int64_t mn_recurse(const Partition& shape, const Partition& type,
                   std::map<std::pair<Partition, Partition>, int64_t>& memo) {
  if (shape.empty()) return 1;
  auto memo_key = std::make_pair(shape, type);
  if (auto it = memo.find(memo_key); it != memo.end()) return it->second;

  int r = type[0];
  Partition rest(type.begin() + 1, type.end());
  int L = static_cast<int>(shape.size());
  std::vector<int> beta(L);  // decreasing
  for (int i = 0; i < L; ++i) beta[i] = shape[i] + (L - 1 - i);

  int64_t total = 0;
  for (int i = 0; i < L; ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Partition next;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) next.push_back(part);
    }
    int64_t sub = mn_recurse(next, rest, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo[memo_key] = total;
  return total;
}

std::map<std::pair<Partition, Partition>, int64_t>& mn_memo() {
  static std::map<std::pair<Partition, Partition>, int64_t> memo;
  return memo;
}

std::mutex& mn_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

int64_t sym_character(const Partition& shape, const Partition& cycle_type) {
  int m1 = std::accumulate(shape.begin(), shape.end(), 0);
  int m2 = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  if (m1 != m2) throw StructureError("shape and cycle type have different sizes");
  std::lock_guard<std::mutex> lock(mn_mutex());
  return mn_recurse(shape, cycle_type, mn_memo());
}

CharacterTable CharacterTable::symmetric_on_support(int degree,
                                                    std::vector<int> support) {
  std::sort(support.begin(), support.end());
  int s = static_cast<int>(support.size());

  CharacterTable t;
  t.sym_route_ = true;
  t.degree_n_ = degree;
  t.group_order_ = factorial(s);
  t.support_ = support;

  for (const Partition& type : partitions_of(s)) {
    Column col;
    col.cycle_type = type;
    col.size = t.group_order_ / z_order(type);
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 1);
    int at = 0;
    for (int part : type) {
      for (int j = 0; j < part; ++j)
        im[support[at + j] - 1] = support[at + (j + 1) % part];
      at += part;
    }
    col.representative = Perm::from_one_line(im);
    t.columns_.push_back(std::move(col));
  }
  std::sort(t.columns_.begin(), t.columns_.end(), [](const Column& a, const Column& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  for (size_t i = 0; i < t.columns_.size(); ++i)
    t.cycle_type_index_[key_of(t.columns_[i].cycle_type)] = static_cast<int>(i);

  struct Row {
    int64_t degree;
    std::vector<int64_t> vals;
  };
  std::vector<Row> rows;
  for (const Partition& shape : partitions_of(s)) {
    Row row;
    row.degree = sym_dimension(shape);
    for (const Column& col : t.columns_)
      row.vals.push_back(sym_character(shape, col.cycle_type));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.vals < b.vals;
  });
  for (const Row& row : rows) {
    t.degrees_.push_back(row.degree);
    std::vector<std::complex<double>> vals;
    for (int64_t v : row.vals) vals.emplace_back(static_cast<double>(v), 0.0);
    t.values_.push_back(std::move(vals));
  }
  return t;
}

CharacterTable CharacterTable::for_group(const PermGroup& g) {
  // support of the group = union of generator supports
  std::vector<bool> moved(g.degree(), false);
  for (const Perm& gen : g.generators())
    for (int i = 1; i <= g.degree(); ++i)
      if (gen.apply(i) != i) moved[i - 1] = true;
  std::vector<int> support;
  for (int i = 1; i <= g.degree(); ++i)
    if (moved[i - 1]) support.push_back(i);

  if (support.size() <= 20 &&
      g.order() == factorial(static_cast<int>(support.size())))
    return symmetric_on_support(g.degree(), std::move(support));
  return dixon(g);
}

// ---------------------------------------------------------------------------
// Dixon's modular method

namespace {

class ModP {
 public:
  explicit ModP(int64_t p) : p_(p) {}
  int64_t p() const { return p_; }
  int64_t add(int64_t a, int64_t b) const { return (a + b) % p_; }
  int64_t sub(int64_t a, int64_t b) const { return ((a - b) % p_ + p_) % p_; }
  int64_t mul(int64_t a, int64_t b) const { return (a % p_) * (b % p_) % p_; }
  int64_t pow(int64_t a, int64_t e) const {
    a %= p_;
    if (a < 0) a += p_;
    int64_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  int64_t inv(int64_t a) const { return pow(a, p_ - 2); }

 private:
  int64_t p_;
};

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// deterministic splitmix rng
struct Rng {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

using Poly = std::vector<int64_t>;  // low coefficients first, normalized

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mod(const ModP& F, Poly a, const Poly& m) {
  for (int d = static_cast<int>(a.size()) - 1;
       d >= static_cast<int>(m.size()) - 1; --d) {
    if (a[d] == 0) continue;
    int64_t c = F.mul(a[d], F.inv(m.back()));
    int off = d - (static_cast<int>(m.size()) - 1);
    for (size_t i = 0; i < m.size(); ++i)
      a[off + i] = F.sub(a[off + i], F.mul(c, m[i]));
  }
  return poly_trim(std::move(a));
}

Poly poly_mulmod(const ModP& F, const Poly& a, const Poly& b, const Poly& m) {
  Poly prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
  }
  return poly_mod(F, std::move(prod), m);
}

Poly poly_powmod(const ModP& F, Poly base, int64_t e, const Poly& m) {
  Poly r{1};
  base = poly_mod(F, std::move(base), m);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(F, r, base, m);
    base = poly_mulmod(F, base, base, m);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(const ModP& F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    int64_t lead_inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, lead_inv);
  }
  return a;
}

Poly poly_derivative(const ModP& F, const Poly& f) {
  Poly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], i % F.p()));
  return poly_trim(std::move(d));
}

// all roots of a squarefree fully-split monic polynomial, Cantor-Zassenhaus
void poly_roots(const ModP& F, const Poly& f, Rng& rng, std::vector<int64_t>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(F.mul(F.sub(0, f[0]), F.inv(f[1])));
    return;
  }
  while (true) {
    int64_t shift = static_cast<int64_t>(rng.next() % F.p());
    Poly xa{shift, 1};
    Poly h = poly_powmod(F, xa, (F.p() - 1) / 2, f);
    if (h.empty())
      h = Poly{F.sub(0, 1)};
    else
      h[0] = F.sub(h[0], 1);
    Poly g = poly_gcd(F, h, f);
    if (g.size() > 1 && g.size() < f.size()) {
      poly_roots(F, g, rng, out);
      // f / g by synthetic division
      Poly q, r = f;
      Poly div = g;
      int qd = static_cast<int>(f.size() - g.size());
      q.assign(qd + 1, 0);
      for (int d = static_cast<int>(r.size()) - 1;
           d >= static_cast<int>(div.size()) - 1; --d) {
        int64_t c = F.mul(r[d], F.inv(div.back()));
        q[d - (div.size() - 1)] = c;
        int off = d - (static_cast<int>(div.size()) - 1);
        for (size_t i = 0; i < div.size(); ++i)
          r[off + i] = F.sub(r[off + i], F.mul(c, div[i]));
      }
      poly_roots(F, poly_trim(std::move(q)), rng, out);
      return;
    }
  }
}

// det(t I - M) by evaluation at r+1 points and Lagrange interpolation
Poly char_poly(const ModP& F, std::vector<std::vector<int64_t>> M) {
  int r = static_cast<int>(M.size());
  std::vector<int64_t> xs, ys;
  for (int t = 0; t <= r; ++t) {
    std::vector<std::vector<int64_t>> A(r, std::vector<int64_t>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        A[i][j] = i == j ? F.sub(t, M[i][j]) : F.sub(0, M[i][j]);
    // gaussian elimination determinant
    int64_t det = 1;
    for (int col = 0; col < r && det != 0; ++col) {
      int pivot = -1;
      for (int row = col; row < r; ++row)
        if (A[row][col] != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) {
        det = 0;
        break;
      }
      if (pivot != col) {
        std::swap(A[pivot], A[col]);
        det = F.sub(0, det);
      }
      det = F.mul(det, A[col][col]);
      int64_t inv = F.inv(A[col][col]);
      for (int row = col + 1; row < r; ++row) {
        if (A[row][col] == 0) continue;
        int64_t factor = F.mul(A[row][col], inv);
        for (int j = col; j < r; ++j)
          A[row][j] = F.sub(A[row][j], F.mul(factor, A[col][j]));
      }
    }
    xs.push_back(t);
    ys.push_back(det);
  }
  // Lagrange interpolation
  Poly result(r + 1, 0);
  for (int i = 0; i <= r; ++i) {
    Poly basis{1};
    int64_t denom = 1;
    for (int j = 0; j <= r; ++j) {
      if (j == i) continue;
      Poly next(basis.size() + 1, 0);
      for (size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] = F.add(next[d + 1], basis[d]);
        next[d] = F.sub(next[d], F.mul(basis[d], xs[j]));
      }
      basis = std::move(next);
      denom = F.mul(denom, F.sub(xs[i], xs[j]));
    }
    int64_t scale = F.mul(ys[i], F.inv(denom));
    for (size_t d = 0; d < basis.size(); ++d)
      result[d] = F.add(result[d], F.mul(scale, basis[d]));
  }
  return poly_trim(std::move(result));
}

// kernel of (M - lambda I); empty result means dimension != 1
std::vector<int64_t> eigenvector(const ModP& F,
                                 const std::vector<std::vector<int64_t>>& M,
                                 int64_t lambda) {
  int r = static_cast<int>(M.size());
  std::vector<std::vector<int64_t>> A(r, std::vector<int64_t>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      A[i][j] = i == j ? F.sub(M[i][j], lambda) : M[i][j];

  std::vector<int> pivot_col(r, -1);
  int rank = 0;
  for (int col = 0; col < r && rank < r; ++col) {
    int pivot = -1;
    for (int row = rank; row < r; ++row)
      if (A[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(A[pivot], A[rank]);
    int64_t inv = F.inv(A[rank][col]);
    for (int j = 0; j < r; ++j) A[rank][j] = F.mul(A[rank][j], inv);
    for (int row = 0; row < r; ++row) {
      if (row == rank || A[row][col] == 0) continue;
      int64_t factor = A[row][col];
      for (int j = 0; j < r; ++j)
        A[row][j] = F.sub(A[row][j], F.mul(factor, A[rank][j]));
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank != r - 1) return {};
  std::vector<bool> is_pivot(r, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  int free_col = -1;
  for (int col = 0; col < r; ++col)
    if (!is_pivot[col]) free_col = col;
  std::vector<int64_t> v(r, 0);
  v[free_col] = 1;
  for (int i = 0; i < rank; ++i)
    v[pivot_col[i]] = F.sub(0, A[i][free_col]);
  return v;
}

}  // namespace

CharacterTable CharacterTable::dixon(const PermGroup& g) {
  if (g.order() > 200000)
    throw CapError("character table computation capped at group order 200000");
  auto conj_classes = g.conjugacy_classes();
  int r = static_cast<int>(conj_classes.size());
  if (r > 60) throw CapError("character table computation capped at 60 classes");

  CharacterTable t;
  t.degree_n_ = g.degree();
  t.group_order_ = g.order();
  for (const auto& c : conj_classes) {
    Column col;
    col.representative = c.representative;
    col.size = c.size();
    t.columns_.push_back(std::move(col));
    for (const Perm& m : c.members)
      t.class_index_.emplace(m, static_cast<int>(t.columns_.size()) - 1);
  }

  if (r == 1) {  // trivial group
    t.degrees_ = {1};
    t.values_ = {{{1.0, 0.0}}};
    return t;
  }

  int id_class = 0;
  while (!t.columns_[id_class].representative.is_identity()) ++id_class;

  std::vector<int> rep_order(r);
  int64_t exponent = 1;
  for (int i = 0; i < r; ++i) {
    rep_order[i] = t.columns_[i].representative.order();
    exponent = std::lcm(exponent, static_cast<int64_t>(rep_order[i]));
  }

  int64_t p = ((2 * g.order()) / exponent + 1) * exponent + 1;
  while (!is_prime(p)) p += exponent;
  ModP F(p);

  // class multiplication coefficients a[i][j][k]
  const auto& els = g.elements();
  std::vector<int> cls_of(els.size());
  for (int ci = 0; ci < r; ++ci)
    for (const Perm& m : conj_classes[ci].members) cls_of[g.index_of(m)] = ci;
  std::vector<std::vector<std::vector<int64_t>>> a(
      r, std::vector<std::vector<int64_t>>(r, std::vector<int64_t>(r, 0)));
  std::vector<Perm> inverses;
  inverses.reserve(els.size());
  for (const Perm& x : els) inverses.push_back(x.inverse());
  for (int k = 0; k < r; ++k) {
    const Perm& z = t.columns_[k].representative;
    for (size_t idx = 0; idx < els.size(); ++idx) {
      int j = cls_of[g.index_of(inverses[idx] * z)];
      a[cls_of[idx]][j][k] += 1;
    }
  }

  // central characters = shared eigenvectors of a random class-matrix combo
  Rng rng{0x5eed0000ull + static_cast<uint64_t>(g.order()) * 31 +
          static_cast<uint64_t>(r)};
  std::vector<std::vector<int64_t>> omegas;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<int64_t>> M(r, std::vector<int64_t>(r, 0));
    for (int i = 0; i < r; ++i) {
      int64_t c = static_cast<int64_t>(rng.next() % p);
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          M[j][k] = F.add(M[j][k], F.mul(c, a[i][j][k]));
    }
    Poly f = char_poly(F, M);
    if (poly_gcd(F, f, poly_derivative(F, f)).size() > 1) continue;  // repeated
    std::vector<int64_t> roots;
    poly_roots(F, f, rng, roots);
    if (static_cast<int>(roots.size()) != r) continue;
    omegas.clear();
    bool ok = true;
    for (int64_t lambda : roots) {
      auto v = eigenvector(F, M, lambda);
      if (v.empty()) {
        ok = false;
        break;
      }
      if (v[id_class] == 0) {
        ok = false;
        break;
      }
      int64_t norm = F.inv(v[id_class]);
      for (auto& x : v) x = F.mul(x, norm);
      omegas.push_back(std::move(v));
    }
    if (ok) break;
    omegas.clear();
  }
  if (static_cast<int>(omegas.size()) != r)
    throw StructureError("class matrix eigendecomposition failed");

  // degrees from the inverted norm sum, then values mod p
  std::vector<int> inv_class(r);
  for (int i = 0; i < r; ++i)
    inv_class[i] = t.class_index_.at(t.columns_[i].representative.inverse());
  int64_t max_d = 1;
  while ((max_d + 1) * (max_d + 1) <= g.order()) ++max_d;

  std::vector<int64_t> degs(r);
  std::vector<std::vector<int64_t>> chi_p(r, std::vector<int64_t>(r));
  for (int row = 0; row < r; ++row) {
    const auto& w = omegas[row];
    int64_t denom = 0;
    for (int i = 0; i < r; ++i)
      denom = F.add(denom, F.mul(F.mul(w[i], w[inv_class[i]]),
                                 F.inv(t.columns_[i].size % p)));
    int64_t d2 = F.mul(g.order() % p, F.inv(denom));
    int64_t d = 0;
    for (int64_t cand = 1; cand <= max_d; ++cand)
      if (F.mul(cand, cand) == d2) {
        d = cand;
        break;
      }
    if (d == 0) throw StructureError("character degree recovery failed");
    degs[row] = d;
    for (int i = 0; i < r; ++i)
      chi_p[row][i] = F.mul(F.mul(d, w[i]), F.inv(t.columns_[i].size % p));
  }
  int64_t degree_sq_sum = 0;
  for (int row = 0; row < r; ++row) degree_sq_sum += degs[row] * degs[row];
  if (degree_sq_sum != g.order())
    throw StructureError("character degrees do not square-sum to the order");

  // lift values: multiplicities of each root of unity via a mod-p DFT
  int64_t gen = 2;
  for (;; ++gen) {
    // gen is primitive iff gen^((p-1)/q) != 1 for every prime q | p-1
    bool primitive = true;
    int64_t m = p - 1;
    for (int64_t q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      if (F.pow(gen, (p - 1) / q) == 1) primitive = false;
      while (m % q == 0) m /= q;
    }
    if (m > 1 && F.pow(gen, (p - 1) / m) == 1) primitive = false;
    if (primitive) break;
  }
  int64_t zeta = F.pow(gen, (p - 1) / exponent);  // primitive exponent-th root

  const double two_pi = 6.283185307179586476925286766559;
  std::vector<std::vector<std::complex<double>>> values(
      r, std::vector<std::complex<double>>(r));
  for (int i = 0; i < r; ++i) {
    int o = rep_order[i];
    std::vector<int> power_class(o);
    Perm pow_perm(g.degree());
    for (int s = 0; s < o; ++s) {
      power_class[s] = t.class_index_.at(pow_perm);
      pow_perm = pow_perm * t.columns_[i].representative;
    }
    int64_t w = F.pow(zeta, exponent / o);  // primitive o-th root
    int64_t w_inv = F.inv(w);
    int64_t o_inv = F.inv(o % p);
    for (int row = 0; row < r; ++row) {
      std::complex<double> val(0.0, 0.0);
      int64_t mult_sum = 0;
      for (int tt = 0; tt < o; ++tt) {
        int64_t m_t = 0;
        for (int s = 0; s < o; ++s)
          m_t = F.add(m_t, F.mul(chi_p[row][power_class[s]],
                                 F.pow(w_inv, static_cast<int64_t>(s) * tt)));
        m_t = F.mul(m_t, o_inv);
        if (m_t > 2 * max_d)
          throw StructureError("root-of-unity multiplicity out of range");
        mult_sum += m_t;
        double angle = two_pi * tt / o;
        val += static_cast<double>(m_t) *
               std::complex<double>(std::cos(angle), std::sin(angle));
      }
      if (mult_sum != degs[row])
        throw StructureError("root-of-unity multiplicities do not sum to degree");
      values[row][i] = val;
    }
  }

  // order rows by (degree, values)
  std::vector<int> row_order(r);
  std::iota(row_order.begin(), row_order.end(), 0);
  auto row_key = [&](int row) {
    std::vector<std::pair<int64_t, int64_t>> key;
    for (int i = 0; i < r; ++i)
      key.emplace_back(llround(values[row][i].real() * 1e6),
                       llround(values[row][i].imag() * 1e6));
    return key;
  };
  std::sort(row_order.begin(), row_order.end(), [&](int x, int y) {
    if (degs[x] != degs[y]) return degs[x] < degs[y];
    return row_key(x) < row_key(y);
  });
  for (int row : row_order) {
    t.degrees_.push_back(degs[row]);
    t.values_.push_back(std::move(values[row]));
  }

  // first orthogonality, numerically
  for (int x = 0; x < r; ++x)
    for (int y = x; y < r; ++y) {
      std::complex<double> dot(0.0, 0.0);
      for (int i = 0; i < r; ++i)
        dot += static_cast<double>(t.columns_[i].size) * t.values_[x][i] *
               std::conj(t.values_[y][i]);
      dot /= static_cast<double>(t.group_order_);
      double want = x == y ? 1.0 : 0.0;
      if (std::abs(dot - want) > 1e-8)
        throw StructureError("character table fails orthogonality");
    }

  return t;
}

bool CharacterTable::row_integral(int row) const {
  for (const auto& v : values_[row]) {
    if (std::abs(v.imag()) > kTol) return false;
    if (std::abs(v.real() - std::round(v.real())) > kTol) return false;
  }
  return true;
}

bool CharacterTable::integral() const {
  for (int row = 0; row < num_rows(); ++row)
    if (!row_integral(row)) return false;
  return true;
}

int64_t CharacterTable::ivalue(int row, int cls) const {
  const auto& v = values_[row][cls];
  if (std::abs(v.imag()) > kTol ||
      std::abs(v.real() - std::round(v.real())) > kTol)
    throw StructureError("character value is not an integer");
  return llround(v.real());
}

int CharacterTable::class_of(const Perm& p) const {
  if (sym_route_) return class_of_cycle_type(p.cycle_type_on(support_));
  auto it = class_index_.find(p);
  if (it == class_index_.end())
    throw StructureError("element is not in the table's group");
  return it->second;
}

int CharacterTable::class_of_cycle_type(const Partition& t) const {
  auto it = cycle_type_index_.find(key_of(t));
  if (it == cycle_type_index_.end())
    throw StructureError("cycle type does not belong to this table");
  return it->second;
}

std::string CharacterTable::to_csv() const {
  std::ostringstream os;
  os << "class";
  for (const auto& c : columns_) os << ',' << c.representative.str();
  os << "\nsize";
  for (const auto& c : columns_) os << ',' << c.size;
  os << '\n';
  for (int row = 0; row < num_rows(); ++row) {
    os << "chi" << row + 1;
    for (int i = 0; i < num_classes(); ++i) {
      const auto& v = values_[row][i];
      os << ',';
      if (std::abs(v.imag()) < kTol &&
          std::abs(v.real() - std::round(v.real())) < kTol) {
        os << llround(v.real());
      } else {
        os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << 'i';
      }
    }
    os << '\n';
  }
  return os.str();
}

int group_fs_indicator(const CharacterTable& table, int row) {
  std::complex<double> sum(0.0, 0.0);
  for (int i = 0; i < table.num_classes(); ++i) {
    const Perm& rep = table.columns()[i].representative;
    int cls = table.class_of(rep * rep);
    sum += static_cast<double>(table.columns()[i].size) * table.value(row, cls);
  }
  sum /= static_cast<double>(table.group_order());
  if (std::abs(sum.imag()) > kTol ||
      std::abs(sum.real() - std::round(sum.real())) > kTol)
    throw StructureError("indicator failed to round to an integer");
  int nu = static_cast<int>(llround(sum.real()));
  if (nu < -1 || nu > 1)
    throw StructureError("indicator outside the Frobenius-Schur range");
  return nu;
}

}  // namespace bismash
