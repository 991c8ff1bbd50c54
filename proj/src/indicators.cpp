// Indicator engine: per-orbit histogram evaluation of chi-hat(Lambda^[2]),
// induced character values, the parallel full report with the antipode
// trace check, and JSON/CSV serialization.

#include "bismash/indicators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "bismash/errors.hpp"

namespace bismash {

namespace {

uint64_t splitmix(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

InducedModule::InducedModule(const ExactFactorization& fact, const Perm& x,
                             uint64_t shuffle_seed)
    : fact_(&fact), x_(x), stab_(stabilizer_in_F(fact, x)) {
  build(shuffle_seed);
}

InducedModule::InducedModule(const ExactFactorization& fact,
                             const OrbitRecord& record, uint64_t shuffle_seed)
    : fact_(&fact), x_(record.representative), stab_(record.stabilizer) {
  build(shuffle_seed);
  if (orbit_size() != record.size || null_ != record.null_indicator)
    throw StructureError("orbit record disagrees with the recomputed orbit");
}

void InducedModule::build(uint64_t shuffle_seed) {
  const auto& gens = fact_->left_factor().generators();
  witness_[x_] = Perm(fact_->degree());
  members_.push_back(x_);
  std::deque<Perm> queue{x_};
  while (!queue.empty()) {
    Perm y = queue.front();
    queue.pop_front();
    Perm c = witness_.at(y);
    for (const Perm& a : gens) {
      Perm next = fact_->act_right(y, a);
      if (witness_.count(next)) continue;
      witness_[next] = c * a;
      members_.push_back(next);
      queue.push_back(next);
    }
  }
  null_ = witness_.count(x_.inverse()) == 0;
  if (shuffle_seed != 0) {
    uint64_t state = shuffle_seed;
    const auto& sels = stab_.elements();
    for (const Perm& y : members_) {
      const Perm& s = sels[splitmix(state) % sels.size()];
      witness_[y] = s * witness_[y];
    }
  }
  table_ = CharacterTable::for_group(stab_);
}

std::complex<double> InducedModule::induced_value(
    int row, const HopfBasisElem& elem) const {
  auto it = witness_.find(elem.y);
  if (it == witness_.end()) return {0.0, 0.0};
  // the single transversal element b with y <| b = x is b = c^-1
  Perm t = elem.a.conjugate_by(it->second.inverse());  // b^-1 a b
  if (!stab_.contains(t)) return {0.0, 0.0};
  return table_.value(row, table_.class_of(t));
}

std::vector<int> InducedModule::indicators() const {
  std::vector<int> out(table_.num_rows(), 0);
  if (null_) return out;
  const int64_t forder = fact_->left_factor().order();
  std::vector<int64_t> hist(table_.num_classes(), 0);
  const auto& sels = stab_.elements();
  for (const Perm& y : members_) {
    const Perm& c = witness_.at(y);
    Perm yinv = y.inverse();
    const Perm& cp = witness_.at(yinv);  // every inverse is in the orbit
    Perm cpinv = cp.inverse();
    Perm cinv = c.inverse();
    for (const Perm& s : sels) {
      // a runs over F_{y^-1,y} = F_{y^-1} a0 with a0 = cp^-1 c
      Perm a = cpinv * (s * c);
      Perm u = fact_->act_left(yinv, a) * a;  // (y^-1 |> a) a, fixes y
      Perm t = u.conjugate_by(cinv);          // back into the stabilizer of x
      hist[table_.class_of(t)] += 1;
    }
  }
  int64_t covered = 0;
  for (int64_t h : hist) covered += h;
  if (covered != forder)
    throw StructureError("indicator histogram does not cover F exactly");
  for (int row = 0; row < table_.num_rows(); ++row) {
    int64_t value = 0;
    if (table_.row_integral(row)) {
      int64_t acc = 0;
      for (int cls = 0; cls < table_.num_classes(); ++cls)
        acc += hist[cls] * table_.ivalue(row, cls);
      if (acc % forder != 0)
        throw StructureError("indicator value is not an integer");
      value = acc / forder;
    } else {
      std::complex<double> z{0.0, 0.0};
      for (int cls = 0; cls < table_.num_classes(); ++cls)
        z += static_cast<double>(hist[cls]) * table_.value(row, cls);
      double re = z.real() / static_cast<double>(forder);
      double im = z.imag() / static_cast<double>(forder);
      double rounded = std::round(re);
      if (std::abs(im) > 1e-6 || std::abs(re - rounded) > 1e-6)
        throw StructureError("indicator value is not an integer");
      value = static_cast<int64_t>(rounded);
    }
    if (value < -1 || value > 1)
      throw StructureError("indicator outside {-1, 0, 1}");
    out[row] = static_cast<int>(value);
  }
  return out;
}

std::complex<double> induced_char_value(const ExactFactorization& fact,
                                        const Perm& x, int row,
                                        const HopfBasisElem& elem) {
  return InducedModule(fact, x).induced_value(row, elem);
}

int indicator(const ExactFactorization& fact, const Perm& x, int row) {
  return InducedModule(fact, x).indicators()[row];
}

LambdaSq lambda_sq(const ExactFactorization& fact) {
  LambdaSq res;
  const PermGroup& f = fact.left_factor();
  const PermGroup& g = fact.right_factor();
  res.denominator = f.order();
  const auto& fels = f.elements();
  for (const Perm& y : g.elements()) {
    Perm yinv = y.inverse();
    const Perm* a0 = nullptr;
    for (const Perm& a : fels) {
      if (fact.act_right(yinv, a) == y) {
        a0 = &a;
        break;
      }
    }
    if (a0 == nullptr) continue;  // F_{y^-1,y} empty
    PermGroup stab = stabilizer_in_F(fact, yinv);
    for (const Perm& s : stab.elements()) {
      Perm a = s * (*a0);
      Perm c = fact.act_left(yinv, a) * a;
      res.terms[{y, c}] += 1;
    }
  }
  return res;
}

std::vector<SimpleModuleDescriptor> IndicatorReport::all_modules() const {
  std::vector<SimpleModuleDescriptor> out;
  for (const auto& mods : orbit_modules)
    out.insert(out.end(), mods.begin(), mods.end());
  return out;
}

int64_t ambient_involution_count(const ExactFactorization& fact) {
  if (fact.shape_route()) return involution_count(fact.degree());
  const PermGroup& l = fact.ambient();
  if (l.is_full_symmetric())
    return involution_count(static_cast<int>(l.support_points().size()));
  return l.count_involutions();
}

IndicatorReport full_report(const ExactFactorization& fact, int threads) {
  IndicatorReport rep;
  rep.degree = fact.degree();
  rep.f_order = fact.left_factor().order();
  rep.g_order = fact.right_factor().order();
  rep.k = fact.k();
  {
    std::ostringstream id;
    id << "degree " << rep.degree << ", |F| = " << rep.f_order
       << ", |G| = " << rep.g_order;
    if (fact.shape_route()) id << ", k = " << rep.k;
    rep.id = id.str();
  }
  rep.orbits = compute_orbits(fact);
  const auto& records = rep.orbits.orbits();
  const int count = rep.orbits.count();
  rep.orbit_modules.assign(count, {});

  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, count));
  std::atomic<int> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&]() {
    while (!stop.load()) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        InducedModule mod(fact, records[i]);
        auto inds = mod.indicators();
        auto& out = rep.orbit_modules[i];
        out.reserve(inds.size());
        for (int row = 0; row < static_cast<int>(inds.size()); ++row)
          out.push_back({i, row, mod.table().degree(row), mod.dim(row),
                         inds[row]});
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop.store(true);
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  rep.totally_orthogonal = true;
  for (const auto& mods : rep.orbit_modules) {
    for (const auto& mod : mods) {
      rep.trace_lhs += static_cast<int64_t>(mod.indicator) * mod.dim;
      rep.indicator_histogram[mod.indicator] += 1;
      if (mod.indicator != 1) rep.totally_orthogonal = false;
    }
  }
  rep.trace_rhs = ambient_involution_count(fact);
  if (rep.trace_lhs != rep.trace_rhs) {
    std::ostringstream msg;
    msg << "antipode trace identity failed: " << rep.trace_lhs
        << " != " << rep.trace_rhs;
    throw StructureError(msg.str());
  }
  return rep;
}

bool conjugation_invariance_check(const ExactFactorization& fact,
                                  const Perm& x, const Perm& y, int threads) {
  auto base = full_report(fact, threads);
  auto conj = full_report(fact.conjugate_factors(x, y), threads);
  auto key = [](const IndicatorReport& rep) {
    std::multiset<std::pair<int64_t, int>> pairs;
    for (const auto& mods : rep.orbit_modules)
      for (const auto& mod : mods) pairs.insert({mod.dim, mod.indicator});
    return pairs;
  };
  return key(base) == key(conj);
}

namespace {

void json_indent(std::ostringstream& out, int depth) {
  out << '\n';
  for (int i = 0; i < depth; ++i) out << "  ";
}

}  // namespace

std::string report_json(const IndicatorReport& report) {
  std::ostringstream out;
  out << "{";
  json_indent(out, 1);
  out << "\"factorization\": {\"id\": \"" << report.id
      << "\", \"degree\": " << report.degree
      << ", \"f_order\": " << report.f_order
      << ", \"g_order\": " << report.g_order << ", \"k\": ";
  if (report.k > 0)
    out << report.k;
  else
    out << "null";
  out << "},";
  json_indent(out, 1);
  out << "\"orbits\": [";
  const auto& records = report.orbits.orbits();
  for (size_t i = 0; i < records.size(); ++i) {
    if (i > 0) out << ",";
    json_indent(out, 2);
    const auto& rec = records[i];
    out << "{\"rep\": \"" << rec.representative.str()
        << "\", \"size\": " << rec.size
        << ", \"stab_order\": " << rec.stabilizer.order() << ", \"m\": ";
    if (rec.member_class)
      out << rec.member_class->m;
    else
      out << "null";
    out << ", \"null\": " << (rec.null_indicator ? "true" : "false")
        << ", \"modules\": [";
    const auto& mods = report.orbit_modules[i];
    for (size_t j = 0; j < mods.size(); ++j) {
      if (j > 0) out << ", ";
      out << "{\"char_degree\": " << mods[j].char_degree
          << ", \"dim\": " << mods[j].dim
          << ", \"indicator\": " << mods[j].indicator << "}";
    }
    out << "]}";
  }
  json_indent(out, 1);
  out << "],";
  json_indent(out, 1);
  out << "\"trace\": {\"lhs\": " << report.trace_lhs
      << ", \"rhs\": " << report.trace_rhs << "},";
  json_indent(out, 1);
  out << "\"totally_orthogonal\": "
      << (report.totally_orthogonal ? "true" : "false");
  out << "\n}\n";
  return out.str();
}

std::string report_csv(const IndicatorReport& report) {
  std::ostringstream out;
  out << "orbit,rep,size,stab_order,m,null,char_degree,dim,indicator\n";
  const auto& records = report.orbits.orbits();
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    for (const auto& mod : report.orbit_modules[i]) {
      out << i << ",\"" << rec.representative.str() << "\"," << rec.size << ","
          << rec.stabilizer.order() << ",";
      if (rec.member_class) out << rec.member_class->m;
      out << "," << (rec.null_indicator ? "true" : "false") << ","
          << mod.char_degree << "," << mod.dim << "," << mod.indicator << "\n";
    }
  }
  return out.str();
}

}  // namespace bismash
