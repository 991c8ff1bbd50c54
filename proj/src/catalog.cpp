#include "bismash/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "bismash/errors.hpp"
#include "bismash/field.hpp"

namespace bismash {

namespace {

// affine point labels: field element a sits at point a+1
Perm affine_map(const FiniteField& k, int scale, int shift, int frob_power) {
  std::vector<int> im(k.q());
  for (int a = 0; a < k.q(); ++a) {
    int x = a;
    for (int j = 0; j < frob_power; ++j) x = k.frobenius(x);
    im[a] = k.add(k.mul(scale, x), shift) + 1;
  }
  return Perm::from_one_line(im);
}

// projective point labels: infinity = 1, field element a at point a+2
int proj_point(bool infinite, int a) {
  return infinite ? 1 : a + 2;
}

// x -> (ax+b)/(cx+d) as a permutation of the projective line
Perm moebius_map(const FiniteField& k, int a, int b, int c, int d) {
  std::vector<int> im(k.q() + 1);
  // image of infinity
  im[0] = c == 0 ? proj_point(true, 0) : proj_point(false, k.div(a, c));
  for (int x = 0; x < k.q(); ++x) {
    int num = k.add(k.mul(a, x), b);
    int den = k.add(k.mul(c, x), d);
    im[x + 1] = den == 0 ? proj_point(true, 0) : proj_point(false, k.div(num, den));
  }
  return Perm::from_one_line(im);
}

// all Moebius permutations, optionally only the square-determinant classes
std::vector<Perm> moebius_elements(const FiniteField& k, bool square_det_only) {
  std::vector<Perm> els;
  // matrices up to scalar: c = 0 (normalize d = 1) or c = 1
  for (int a = 1; a < k.q(); ++a)      // det = a
    for (int b = 0; b < k.q(); ++b) {
      if (square_det_only && !k.is_square(a)) continue;
      els.push_back(moebius_map(k, a, b, 0, 1));
    }
  for (int a = 0; a < k.q(); ++a)
    for (int b = 0; b < k.q(); ++b)
      for (int d = 0; d < k.q(); ++d) {
        int det = k.sub(k.mul(a, d), b);  // ad - b with c = 1
        if (det == 0) continue;
        if (square_det_only && !k.is_square(det)) continue;
        els.push_back(moebius_map(k, a, b, 1, d));
      }
  return els;
}

}  // namespace

PermGroup cyclic_regular(int n) {
  if (n < 1) throw StructureError("cyclic group degree must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 2 <= n ? i + 2 : 1;
  return PermGroup::from_generators(n, {Perm::from_one_line(im)});
}

PermGroup symmetric_group(int n) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 1);
  return PermGroup::full_symmetric_on(n, pts);
}

PermGroup alternating_group(int n) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 1);
  return PermGroup::full_alternating_on(n, pts);
}

PermGroup agl1(int q) {
  FiniteField k(q);
  std::vector<Perm> gens{affine_map(k, 1, 1, 0)};
  if (q > 2) gens.push_back(affine_map(k, k.primitive_element(), 0, 0));
  return PermGroup::from_generators(q, gens);
}

PermGroup asl1(int q) {
  auto full = agl1(q);
  std::vector<Perm> even;
  for (const Perm& p : full.elements())
    if (p.is_even()) even.push_back(p);
  return PermGroup::from_elements(q, std::move(even));
}

PermGroup agammal1(int q) {
  FiniteField k(q);
  std::vector<Perm> gens{affine_map(k, 1, 1, 0)};
  if (q > 2) gens.push_back(affine_map(k, k.primitive_element(), 0, 0));
  if (k.e() > 1) gens.push_back(affine_map(k, 1, 0, 1));
  return PermGroup::from_generators(q, gens);
}

PermGroup pgl2(int q) {
  FiniteField k(q);
  auto els = moebius_elements(k, false);
  std::sort(els.begin(), els.end());
  els.erase(std::unique(els.begin(), els.end()), els.end());
  if (static_cast<int64_t>(els.size()) !=
      static_cast<int64_t>(q) * q * q - q)
    throw StructureError("projective group enumeration came out the wrong size");
  return PermGroup::from_elements(q + 1, std::move(els));
}

PermGroup psl2(int q) {
  FiniteField k(q);
  if (k.p() == 2) return pgl2(q);
  auto els = moebius_elements(k, true);
  std::sort(els.begin(), els.end());
  els.erase(std::unique(els.begin(), els.end()), els.end());
  if (static_cast<int64_t>(els.size()) !=
      (static_cast<int64_t>(q) * q * q - q) / 2)
    throw StructureError("projective group enumeration came out the wrong size");
  return PermGroup::from_elements(q + 1, std::move(els));
}

PermGroup pgammal2(int q) {
  FiniteField k(q);
  auto base = pgl2(q);
  if (k.e() == 1) return base;
  std::vector<int> im(q + 1);
  im[0] = 1;
  for (int x = 0; x < q; ++x) im[x + 1] = k.frobenius(x) + 2;
  std::vector<Perm> gens = base.generators();
  gens.push_back(Perm::from_one_line(im));
  auto g = PermGroup::from_generators(q + 1, gens);
  if (g.order() != base.order() * k.e())
    throw StructureError("semilinear projective group came out the wrong size");
  return g;
}

namespace {

PermGroup build_mathieu(int n) {
  std::vector<Perm> gens{
      parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", n),
      parse_cycles("(3,7,11,8)(4,10,5,6)", n),
  };
  if (n == 12) gens.push_back(parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", n));
  auto g = PermGroup::from_generators(n, gens);
  int64_t want = n == 11 ? 7920 : 95040;
  if (g.order() != want || !is_sharply_k_transitive(g, n - 7))
    throw StructureError("Mathieu generators failed verification");
  return g;
}

}  // namespace

PermGroup mathieu11() {
  static const PermGroup g = build_mathieu(11);
  return g;
}

PermGroup mathieu12() {
  static const PermGroup g = build_mathieu(12);
  return g;
}

PermGroup twisted_symmetric(int n, int k) {
  if (k < 2 || n - k < 3)
    throw StructureError("twisted symmetric group needs k >= 2 and n-k >= 3");
  std::vector<Perm> gens;
  for (int j = 2; j <= n - k; ++j) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::swap(im[0], im[j - 1]);
    std::swap(im[n - 2], im[n - 1]);
    gens.push_back(Perm::from_one_line(im));
  }
  return PermGroup::from_generators(n, gens);
}

bool is_sharply_k_transitive(const PermGroup& g, int k) {
  int n = g.degree();
  if (k < 1 || k > n) return false;
  int64_t want = 1;
  for (int i = 0; i < k; ++i) want *= n - i;
  if (g.order() != want) return false;
  for (const Perm& p : g.elements())
    if (!p.is_identity() && p.num_fixed_points() >= k) return false;
  return true;
}

PermGroup catalog_group(const std::string& name) {
  auto parse_int = [](const std::string& s) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw FormatError("bad number in catalog name");
    }
    if (pos != s.size() || v < 1) throw FormatError("bad number in catalog name");
    return v;
  };
  auto after = [&](const std::string& prefix) {
    return name.substr(prefix.size());
  };

  if (name == "M11") return mathieu11();
  if (name == "M12") return mathieu12();
  if (name.rfind("AGammaL1:", 0) == 0) return agammal1(parse_int(after("AGammaL1:")));
  if (name.rfind("AGL1:", 0) == 0) return agl1(parse_int(after("AGL1:")));
  if (name.rfind("ASL1:", 0) == 0) return asl1(parse_int(after("ASL1:")));
  if (name.rfind("PGammaL2:", 0) == 0) return pgammal2(parse_int(after("PGammaL2:")));
  if (name.rfind("PGL2:", 0) == 0) return pgl2(parse_int(after("PGL2:")));
  if (name.rfind("PSL2:", 0) == 0) return psl2(parse_int(after("PSL2:")));
  if (name.rfind("WtS:", 0) == 0) {
    std::string rest = after("WtS:");
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw FormatError("WtS needs n and k");
    return twisted_symmetric(parse_int(rest.substr(0, colon)),
                             parse_int(rest.substr(colon + 1)));
  }
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'A' || name[0] == 'S')) {
    int n = parse_int(name.substr(1));
    if (name[0] == 'C') return cyclic_regular(n);
    if (name[0] == 'A') return alternating_group(n);
    return symmetric_group(n);
  }
  throw FormatError("unknown catalog group: " + name);
}

PermGroup catalog_group_at_degree(const std::string& name, int n) {
  PermGroup g = catalog_group(name);
  if (g.degree() > n)
    throw FormatError("catalog group " + name +
                      " exceeds the requested degree");
  if (g.degree() == n) return g;
  if (g.is_full_symmetric())
    return PermGroup::full_symmetric_on(n, g.support_points());
  if (g.is_full_alternating())
    return PermGroup::full_alternating_on(n, g.support_points());
  std::vector<Perm> gens;
  for (const Perm& p : g.generators()) {
    std::vector<int> im(n);
    for (int i = 1; i <= n; ++i) im[i - 1] = i <= g.degree() ? p.apply(i) : i;
    gens.push_back(Perm::from_one_line(im));
  }
  return PermGroup::from_generators(n, std::move(gens));
}

}  // namespace bismash
