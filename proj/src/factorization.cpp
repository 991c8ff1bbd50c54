#include "bismash/factorization.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "bismash/catalog.hpp"
#include "bismash/errors.hpp"

namespace bismash {

namespace {

constexpr size_t kCacheCap = 1u << 20;

// falling factorial n(n-1)...(n-k+1) matches target for exactly one k
int transitivity_degree_for_order(int n, int64_t order) {
  int64_t prod = 1;
  for (int k = 1; k <= n; ++k) {
    prod *= n - k + 1;
    if (prod == order) return k;
    if (prod > order) return 0;
  }
  return 0;
}

int64_t factorial_or_zero(int m) {
  if (m > 20) return 0;  // past int64; no group under the caps gets here
  int64_t f = 1;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

bool fixes_points_above(const Perm& p, int cut) {
  for (int i = cut + 1; i <= p.degree(); ++i)
    if (p.apply(i) != i) return false;
  return true;
}

}  // namespace

ExactFactorization ExactFactorization::build(PermGroup f, PermGroup g) {
  if (f.degree() != g.degree())
    throw StructureError("factors live on different degrees");

  ExactFactorization fact;
  fact.n_ = f.degree();
  fact.f_ = std::move(f);
  fact.g_ = std::move(g);
  fact.cache_ = std::make_shared<Cache>();
  int n = fact.n_;

  // sharply k-transitive shape: G's order is a falling factorial, G is
  // sharply k-transitive, and F is all of Sym({1..n-k}).  Exactness is
  // then automatic: |F||G| = n! and only the identity of G fixes the top
  // k points, so the intersection is trivial.
  int64_t g_order = fact.g_.order();
  int k = transitivity_degree_for_order(n, g_order);
  if (k > 0 && fact.f_.order() == factorial_or_zero(n - k) &&
      std::all_of(fact.f_.generators().begin(), fact.f_.generators().end(),
                  [&](const Perm& p) { return fixes_points_above(p, n - k); }) &&
      is_sharply_k_transitive(fact.g_, k)) {
    fact.shape_ = true;
    fact.k_ = k;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    fact.l_ = PermGroup::full_symmetric_on(n, all);
    const auto& els = fact.g_.elements();
    for (size_t i = 0; i < els.size(); ++i)
      fact.tuple_index_.emplace(fact.tuple_key(els[i]), static_cast<int>(i));
    return fact;
  }

  // generic route: check the intersection on the smaller factor, then
  // match |F||G| against the closure of the union
  const PermGroup& small =
      fact.f_.order() <= fact.g_.order() ? fact.f_ : fact.g_;
  const PermGroup& large =
      fact.f_.order() <= fact.g_.order() ? fact.g_ : fact.f_;
  for (const Perm& p : small.elements())
    if (!p.is_identity() && large.contains(p))
      throw NotExactError("factors intersect nontrivially; witness " + p.str());

  int64_t product = fact.f_.order() * fact.g_.order();
  if (product == factorial_or_zero(n) && n <= 20) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    fact.l_ = PermGroup::full_symmetric_on(n, all);
    return fact;
  }
  std::vector<Perm> gens = fact.f_.generators();
  gens.insert(gens.end(), fact.g_.generators().begin(),
              fact.g_.generators().end());
  fact.l_ = PermGroup::from_generators(n, std::move(gens));
  if (fact.l_.order() != product) {
    std::ostringstream os;
    os << "orders " << fact.f_.order() << " * " << fact.g_.order() << " = "
       << product << " but the closure of the factors has order "
       << fact.l_.order();
    throw NotExactError(os.str());
  }
  return fact;
}

std::vector<int> ExactFactorization::gamma_points() const {
  if (!shape_) throw StructureError("no sharply transitive shape detected");
  std::vector<int> pts(n_ - k_);
  std::iota(pts.begin(), pts.end(), 1);
  return pts;
}

std::vector<int> ExactFactorization::delta_points() const {
  if (!shape_) throw StructureError("no sharply transitive shape detected");
  std::vector<int> pts(k_);
  std::iota(pts.begin(), pts.end(), n_ - k_ + 1);
  return pts;
}

uint64_t ExactFactorization::tuple_key(const Perm& l) const {
  uint64_t key = 0;
  for (int i = 0; i < k_; ++i)
    key |= static_cast<uint64_t>(l.apply(n_ - k_ + 1 + i)) << (8 * i);
  return key;
}

std::pair<Perm, Perm> ExactFactorization::decompose(const Perm& l) const {
  if (shape_) {
    const Perm& g = g_.element(tuple_index_.at(tuple_key(l)));
    return {l * g.inverse(), g};
  }
  if (!l_.contains(l))
    throw StructureError("element is not in the factored group");
  {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (auto it = cache_->table.find(l); it != cache_->table.end())
      return it->second;
  }
  std::pair<Perm, Perm> result;
  bool found = false;
  if (f_.order() <= g_.order()) {
    for (const Perm& f : f_.elements()) {
      Perm g = f.inverse() * l;
      if (g_.contains(g)) {
        result = {f, std::move(g)};
        found = true;
        break;
      }
    }
  } else {
    for (const Perm& g : g_.elements()) {
      Perm f = l * g.inverse();
      if (f_.contains(f)) {
        result = {std::move(f), g};
        found = true;
        break;
      }
    }
  }
  if (!found)
    throw StructureError("element admits no decomposition; factorization bug");
  std::lock_guard<std::mutex> lock(cache_->m);
  if (cache_->table.size() < kCacheCap) cache_->table.emplace(l, result);
  return result;
}

Perm ExactFactorization::act_left(const Perm& g, const Perm& f) const {
  if (!g_.contains(g) || !f_.contains(f))
    throw StructureError("action arguments outside their factors");
  return decompose(g * f).first;
}

Perm ExactFactorization::act_right(const Perm& g, const Perm& f) const {
  if (!g_.contains(g) || !f_.contains(f))
    throw StructureError("action arguments outside their factors");
  return decompose(g * f).second;
}

std::vector<int> ExactFactorization::gident_tuple(const Perm& g) const {
  if (!shape_) throw StructureError("no sharply transitive shape detected");
  std::vector<int> alphas(k_);
  for (int i = 0; i < k_; ++i) alphas[i] = g.apply(n_ - k_ + 1 + i);
  return alphas;
}

const Perm& ExactFactorization::from_gident_tuple(
    const std::vector<int>& alphas) const {
  if (!shape_) throw StructureError("no sharply transitive shape detected");
  if (static_cast<int>(alphas.size()) != k_)
    throw StructureError("tuple length does not match k");
  uint64_t key = 0;
  for (int i = 0; i < k_; ++i)
    key |= static_cast<uint64_t>(alphas[i]) << (8 * i);
  auto it = tuple_index_.find(key);
  if (it == tuple_index_.end())
    throw StructureError("tuple does not identify a group element");
  return g_.element(it->second);
}

ExactFactorization ExactFactorization::conjugate_factors(const Perm& x,
                                                          const Perm& y) const {
  if (!l_.contains(x) || !l_.contains(y))
    throw StructureError("conjugating elements outside the ambient group");
  std::vector<Perm> fg, gg;
  for (const Perm& p : f_.generators()) fg.push_back(p.conjugate_by(y));
  for (const Perm& p : g_.generators()) gg.push_back(p.conjugate_by(x));
  return build(PermGroup::from_generators(n_, std::move(fg)),
               PermGroup::from_generators(n_, std::move(gg)));
}

namespace {

PermGroup group_from_block(int n, const std::string& label,
                           const std::vector<std::string>& lines) {
  if (lines.empty())
    throw FormatError("block [" + label + "] has no content");
  if (lines[0][0] != '(') {
    if (lines.size() != 1)
      throw FormatError("block [" + label +
                        "] must be one catalog name or generator lines");
    return catalog_group_at_degree(lines[0], n);
  }
  std::vector<Perm> gens;
  for (const auto& line : lines) gens.push_back(parse_cycles(line, n));
  return PermGroup::from_generators(n, std::move(gens));
}

}  // namespace

ExactFactorization ExactFactorization::from_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open spec file " + path);

  int n = 0;
  std::vector<std::string> f_lines, g_lines;
  std::vector<std::string>* block = nullptr;
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    std::string line = raw.substr(a, b - a + 1);

    if (line.rfind("degree", 0) == 0) {
      std::istringstream is(line.substr(6));
      if (!(is >> n) || n < 1)
        throw FormatError("bad degree line: " + line);
      continue;
    }
    if (line == "[F]") {
      block = &f_lines;
      continue;
    }
    if (line == "[G]") {
      block = &g_lines;
      continue;
    }
    if (n == 0) throw FormatError("content before the degree line");
    if (block == nullptr)
      throw FormatError("content outside [F]/[G] blocks: " + line);
    block->push_back(line);
  }
  if (n == 0) throw FormatError("spec file has no degree line");
  return build(group_from_block(n, "F", f_lines),
               group_from_block(n, "G", g_lines));
}

}  // namespace bismash
