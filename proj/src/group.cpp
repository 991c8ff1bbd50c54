#include "bismash/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "bismash/errors.hpp"

namespace bismash {

namespace {

int64_t factorial(int m) {
  int64_t f = 1;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

std::unordered_set<Perm, PermHash> bfs_closure(int n, const std::vector<Perm>& gens,
                                               int64_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  seen.insert(Perm(n));
  queue.push_back(Perm(n));
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) {
        if (static_cast<int64_t>(seen.size()) > cap)
          throw CapError("group enumeration exceeded cap of " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace

PermGroup PermGroup::trivial(int n) {
  PermGroup g;
  g.n_ = n;
  return g;
}

PermGroup PermGroup::from_generators(int n, std::vector<Perm> gens) {
  PermGroup g;
  g.n_ = n;
  for (auto& p : gens) {
    if (p.degree() != n)
      throw StructureError("generator degree does not match the group degree");
    if (p.is_identity()) continue;
    if (std::find(g.gens_.begin(), g.gens_.end(), p) == g.gens_.end())
      g.gens_.push_back(std::move(p));
  }
  return g;
}

PermGroup PermGroup::from_elements(int n, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw StructureError("element list must contain the identity");

  PermGroup g;
  g.n_ = n;
  // a small generating set, grown greedily until it spans the whole list
  std::unordered_set<Perm, PermHash> span;
  span.insert(Perm(n));
  for (const Perm& e : elements) {
    if (span.size() == elements.size()) break;
    if (span.count(e)) continue;
    g.gens_.push_back(e);
    span = bfs_closure(n, g.gens_, static_cast<int64_t>(elements.size()));
  }
  g.state_->elements = std::move(elements);
  g.state_->index.reserve(g.state_->elements.size());
  for (size_t i = 0; i < g.state_->elements.size(); ++i)
    g.state_->index.emplace(g.state_->elements[i], static_cast<int>(i));
  g.state_->done.store(true, std::memory_order_release);
  return g;
}

PermGroup PermGroup::full_symmetric_on(int n, std::vector<int> points) {
  std::sort(points.begin(), points.end());
  PermGroup g;
  g.n_ = n;
  g.kind_ = Kind::full_sym;
  g.points_ = std::move(points);
  const auto& pts = g.points_;
  if (pts.size() >= 2) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::swap(im[pts[0] - 1], im[pts[1] - 1]);
    g.gens_.push_back(Perm::from_one_line(im));
  }
  if (pts.size() >= 3) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    for (size_t i = 0; i < pts.size(); ++i)
      im[pts[i] - 1] = pts[(i + 1) % pts.size()];
    g.gens_.push_back(Perm::from_one_line(im));
  }
  return g;
}

PermGroup PermGroup::full_alternating_on(int n, std::vector<int> points) {
  std::sort(points.begin(), points.end());
  PermGroup g;
  g.n_ = n;
  g.kind_ = Kind::full_alt;
  g.points_ = std::move(points);
  const auto& pts = g.points_;
  for (size_t i = 0; i + 2 < pts.size(); ++i) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    im[pts[i] - 1] = pts[i + 1];
    im[pts[i + 1] - 1] = pts[i + 2];
    im[pts[i + 2] - 1] = pts[i];
    g.gens_.push_back(Perm::from_one_line(im));
  }
  return g;
}

int64_t PermGroup::enumeration_cap() {
  if (const char* env = std::getenv("BISMASH_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

int64_t PermGroup::order() const {
  if (kind_ == Kind::full_sym) return factorial(static_cast<int>(points_.size()));
  if (kind_ == Kind::full_alt) {
    int s = static_cast<int>(points_.size());
    return s <= 2 ? 1 : factorial(s) / 2;
  }
  return static_cast<int64_t>(elements().size());
}

void PermGroup::enumerate() const {
  if (state_->done.load(std::memory_order_acquire)) return;
  std::lock_guard<std::mutex> lock(state_->m);
  if (state_->done.load(std::memory_order_relaxed)) return;

  std::vector<Perm> els;
  if (kind_ == Kind::full_sym || kind_ == Kind::full_alt) {
    if (order() > enumeration_cap())
      throw CapError("group enumeration exceeded cap of " +
                     std::to_string(enumeration_cap()));
    // run over all assignments of images to the support points; ascending
    // assignments give ascending image arrays, so the list lands sorted
    std::vector<int> target = points_;
    do {
      std::vector<int> im(n_);
      std::iota(im.begin(), im.end(), 1);
      for (size_t i = 0; i < points_.size(); ++i) im[points_[i] - 1] = target[i];
      Perm p = Perm::from_one_line(im);
      if (kind_ == Kind::full_alt && !p.is_even()) continue;
      els.push_back(std::move(p));
    } while (std::next_permutation(target.begin(), target.end()));
  } else {
    auto seen = bfs_closure(n_, gens_, enumeration_cap());
    els.assign(seen.begin(), seen.end());
    std::sort(els.begin(), els.end());
  }

  state_->elements = std::move(els);
  state_->index.reserve(state_->elements.size());
  for (size_t i = 0; i < state_->elements.size(); ++i)
    state_->index.emplace(state_->elements[i], static_cast<int>(i));
  state_->done.store(true, std::memory_order_release);
}

const std::vector<Perm>& PermGroup::elements() const {
  enumerate();
  return state_->elements;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != n_) return false;
  if (kind_ == Kind::full_sym || kind_ == Kind::full_alt) {
    std::vector<bool> in_support(n_, false);
    for (int q : points_) in_support[q - 1] = true;
    for (int i = 1; i <= n_; ++i)
      if (!in_support[i - 1] && p.apply(i) != i) return false;
    return kind_ == Kind::full_sym || p.is_even();
  }
  enumerate();
  return state_->index.count(p) > 0;
}

int PermGroup::index_of(const Perm& p) const {
  enumerate();
  auto it = state_->index.find(p);
  return it == state_->index.end() ? -1 : it->second;
}

bool PermGroup::same_group(const PermGroup& other) const {
  if (n_ != other.n_ || order() != other.order()) return false;
  return elements() == other.elements();
}

PermGroup PermGroup::point_stabilizer(const std::vector<int>& points) const {
  for (int p : points)
    if (p < 1 || p > n_) throw StructureError("stabilizer point out of range");
  if (kind_ == Kind::full_sym || kind_ == Kind::full_alt) {
    std::vector<int> rest;
    for (int q : points_)
      if (std::find(points.begin(), points.end(), q) == points.end())
        rest.push_back(q);
    return kind_ == Kind::full_sym ? full_symmetric_on(n_, rest)
                                   : full_alternating_on(n_, rest);
  }
  std::vector<Perm> fixed;
  for (const Perm& e : elements()) {
    bool ok = true;
    for (int p : points)
      if (e.apply(p) != p) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(e);
  }
  return from_elements(n_, std::move(fixed));
}

std::vector<ConjClass> PermGroup::conjugacy_classes() const {
  const auto& els = elements();
  std::vector<bool> visited(els.size(), false);
  std::vector<ConjClass> classes;
  for (size_t i = 0; i < els.size(); ++i) {
    if (visited[i]) continue;
    std::vector<int> member_idx{static_cast<int>(i)};
    visited[i] = true;
    for (size_t head = 0; head < member_idx.size(); ++head) {
      const Perm& cur = els[member_idx[head]];
      for (const Perm& g : gens_) {
        int j = index_of(cur.conjugate_by(g));
        if (!visited[j]) {
          visited[j] = true;
          member_idx.push_back(j);
        }
      }
    }
    std::sort(member_idx.begin(), member_idx.end());
    ConjClass c;
    c.representative = els[member_idx.front()];
    c.members.reserve(member_idx.size());
    for (int j : member_idx) c.members.push_back(els[j]);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  return classes;
}

int64_t PermGroup::count_involutions() const {
  if (kind_ == Kind::full_sym && order() > enumeration_cap())
    return involution_count(static_cast<int>(points_.size()));
  int64_t c = 0;
  for (const Perm& e : elements())
    if (e.is_involution()) ++c;
  return c;
}

}  // namespace bismash
