#include "bismash/orbits.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "bismash/errors.hpp"

namespace bismash {

MemberClass classify(const ExactFactorization& fact, const Perm& g) {
  auto alphas = fact.gident_tuple(g);  // throws outside the shape
  int n = fact.degree(), k = fact.k();

  MemberClass mc;
  for (int i = 1; i <= k; ++i) {
    if (alphas[i - 1] <= n - k)
      mc.gamma_indices.push_back(i);
    else
      mc.delta_tuple.push_back(alphas[i - 1]);
  }
  mc.m = static_cast<int>(mc.gamma_indices.size());
  mc.delta_set = mc.delta_tuple;
  std::sort(mc.delta_set.begin(), mc.delta_set.end());
  for (int i : mc.gamma_indices)
    if (std::binary_search(mc.delta_set.begin(), mc.delta_set.end(), n - k + i))
      mc.mixed = true;
  return mc;
}

bool restriction_is_involution(const Perm& g, const MemberClass& mc) {
  if (mc.mixed)
    throw StructureError("restriction is only defined for unmixed classes");
  for (int point : mc.delta_set) {
    int image = g.apply(point);
    if (!std::binary_search(mc.delta_set.begin(), mc.delta_set.end(), image))
      throw StructureError("restriction does not permute the Delta-set");
    if (g.apply(image) != point) return false;
  }
  return true;
}

PermGroup stabilizer_in_F(const ExactFactorization& fact, const Perm& x) {
  const PermGroup& f = fact.left_factor();
  if (fact.shape_route()) {
    std::vector<int> fixed;
    for (int alpha : fact.gident_tuple(x))
      if (alpha <= fact.degree() - fact.k()) fixed.push_back(alpha);
    return f.point_stabilizer(fixed);
  }
  std::vector<Perm> hits;
  for (const Perm& a : f.elements())
    if (fact.act_right(x, a) == x) hits.push_back(a);
  return PermGroup::from_elements(fact.degree(), std::move(hits));
}

bool is_null_indicator_orbit(const ExactFactorization& fact, const Perm& x) {
  Perm target = x.inverse();
  if (target == x) return false;
  std::unordered_set<Perm, PermHash> seen{x};
  std::deque<Perm> queue{x};
  const auto& gens = fact.left_factor().generators();
  while (!queue.empty()) {
    Perm y = std::move(queue.front());
    queue.pop_front();
    for (const Perm& a : gens) {
      Perm z = fact.decompose(y * a).second;
      if (z == target) return false;
      if (seen.insert(z).second) queue.push_back(std::move(z));
    }
  }
  return true;
}

OrbitSet compute_orbits(const ExactFactorization& fact) {
  const PermGroup& g = fact.right_factor();
  const PermGroup& f = fact.left_factor();
  const auto& els = g.elements();
  int total = static_cast<int>(els.size());
  const auto& gens = f.generators();
  int64_t f_order = f.order();

  OrbitSet set;
  set.shape_ = fact.shape_route();
  set.orbit_of_.assign(total, -1);

  for (int seed = 0; seed < total; ++seed) {
    if (set.orbit_of_[seed] >= 0) continue;
    int id = static_cast<int>(set.records_.size());

    std::vector<int> members{seed};
    set.orbit_of_[seed] = id;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      int yi = queue.front();
      queue.pop_front();
      for (const Perm& a : gens) {
        int zi = g.index_of(fact.decompose(els[yi] * a).second);
        if (set.orbit_of_[zi] < 0) {
          set.orbit_of_[zi] = id;
          members.push_back(zi);
          queue.push_back(zi);
        }
      }
    }
    std::sort(members.begin(), members.end());

    OrbitRecord rec;
    rec.representative = els[seed];
    rec.size = static_cast<int64_t>(members.size());
    rec.null_indicator =
        set.orbit_of_[g.index_of(rec.representative.inverse())] != id;
    if (rec.size == 1)
      rec.stabilizer = f;
    else if (rec.size == f_order)
      rec.stabilizer = PermGroup::trivial(fact.degree());
    else
      rec.stabilizer = stabilizer_in_F(fact, rec.representative);
    if (fact.shape_route()) rec.member_class = classify(fact, rec.representative);
    rec.members = std::move(members);
    set.records_.push_back(std::move(rec));
  }
  return set;
}

std::map<int, std::pair<int64_t, int64_t>> OrbitSet::family_census() const {
  if (!shape_)
    throw StructureError("family census requires the sharply transitive shape");
  std::map<int, std::pair<int64_t, int64_t>> census;
  for (const auto& rec : records_) {
    auto& slot = census[rec.member_class->m];
    slot.first += 1;
    if (rec.null_indicator) slot.second += 1;
  }
  return census;
}

}  // namespace bismash
