#include "bismash/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "bismash/errors.hpp"

namespace bismash {

Perm::Perm(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<uint8_t> images0) : images_(std::move(images0)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint8_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw FormatError("image array is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::from_one_line(const std::vector<int>& images1) {
  std::vector<uint8_t> im(images1.size());
  for (size_t i = 0; i < images1.size(); ++i) {
    if (images1[i] < 1 || images1[i] > static_cast<int>(images1.size()))
      throw FormatError("one-line image out of range");
    im[i] = static_cast<uint8_t>(images1[i] - 1);
  }
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw StructureError("composing permutations of different degrees");
  Perm r;
  r.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<uint8_t>(i);
  return r;
}

Perm Perm::conjugate_by(const Perm& x) const {
  if (degree() != x.degree())
    throw StructureError("conjugating by a permutation of different degree");
  Perm r;
  r.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    r.images_[x.images_[i]] = x.images_[images_[i]];
  return r;
}

Perm Perm::power(int64_t e) const {
  int o = order();
  e %= o;
  if (e < 0) e += o;
  Perm acc(degree()), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Perm::is_involution() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[images_[i]] != i) return false;
  return true;
}

int Perm::sign() const {
  // parity of n minus the number of cycles, fixed points included
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return ((images_.size() - cycles) % 2 == 0) ? 1 : -1;
}

int Perm::order() const {
  int64_t o = 1;
  for (int len : cycle_type()) o = std::lcm<int64_t>(o, len);
  return static_cast<int>(o);
}

int Perm::num_fixed_points() const {
  int c = 0;
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) ++c;
  return c;
}

std::vector<int> Perm::fixed_points() const {
  std::vector<int> fp;
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) fp.push_back(static_cast<int>(i) + 1);
  return fp;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> cs;
  std::vector<bool> seen(images_.size(), false);
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> c;
    for (size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      c.push_back(static_cast<int>(j) + 1);
    }
    cs.push_back(std::move(c));
  }
  return cs;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  std::vector<bool> seen(images_.size(), false);
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<int> Perm::cycle_type_on(const std::vector<int>& points) const {
  std::vector<bool> in_set(images_.size(), false);
  for (int p : points) in_set[p - 1] = true;
  std::vector<int> t;
  std::vector<bool> seen(images_.size(), false);
  for (int p : points) {
    size_t i = static_cast<size_t>(p - 1);
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = images_[j]) {
      if (!in_set[j])
        throw StructureError("cycle_type_on: set is not invariant");
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  return os << p.str();
}

Perm parse_cycles(const std::string& text, int n) {
  if (n < 0 || n > 255) throw FormatError("degree out of range");
  std::vector<int> images1(n);
  std::iota(images1.begin(), images1.end(), 1);
  std::vector<bool> used(n, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw FormatError("empty permutation text");
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw FormatError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw FormatError("expected a point in cycle notation");
      int p = std::stoi(text.substr(start, i - start));
      if (p < 1 || p > n) throw FormatError("point out of range in cycle notation");
      if (used[p - 1]) throw FormatError("repeated point in cycle notation");
      used[p - 1] = true;
      cyc.push_back(p);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i == text.size()) throw FormatError("unterminated cycle");
    ++i;  // ')'
    if (cyc.size() == 1) throw FormatError("singleton cycle in cycle notation");
    for (size_t j = 0; j < cyc.size(); ++j)
      images1[cyc[j] - 1] = cyc[(j + 1) % cyc.size()];
    any = true;
    skip_ws();
  }
  if (!any) throw FormatError("no cycles found");
  return Perm::from_one_line(images1);
}

size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image bytes
  uint64_t h = 1469598103934665603ull;
  for (uint8_t b : p.images()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

int64_t involution_count(int n) {
  if (n < 0 || n > 25) throw CapError("involution_count: n out of exact range");
  int64_t a = 1, b = 1;  // i_0, i_1
  if (n == 0) return 1;
  for (int m = 2; m <= n; ++m) {
    int64_t c = b + static_cast<int64_t>(m - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

std::vector<int64_t> fixed_point_profile(int n) {
  if (n < 0 || n > 10)
    throw CapError("fixed_point_profile: enumeration refused beyond n = 10");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<int64_t> profile(n + 1, 0);
  do {
    int fixed = 0;
    for (int i = 0; i < n; ++i)
      if (v[i] == i) ++fixed;
    ++profile[fixed];
  } while (std::next_permutation(v.begin(), v.end()));
  return profile;
}

}  // namespace bismash
