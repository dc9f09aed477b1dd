#include "rspec/finiverse/universe.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/factor.hpp"

namespace rspec {

namespace {

unsigned long ipow(unsigned long b, unsigned e) {
  unsigned long r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<long> coeffs_mod(const Poly& g, long p) {
  std::vector<long> c(static_cast<std::size_t>(g.total_degree()) + 1, 0);
  for (const auto& t : g.terms) {
    mpz_class v = t.coef.get_num() % p;
    if (v < 0) v += p;
    c[static_cast<std::size_t>(t.exp[0])] = v.get_si();
  }
  return c;
}

}  // namespace

ArtinianRing ArtinianRing::analyze(const RingPtr& r) {
  ArtinianRing a;
  a.ring = r;
  const RingDescriptor& d = r->descriptor();
  if (r->engine() == Engine::Integer && r->int_modulus() >= 2) {
    if (!r->int_modulus().fits_slong_p()) throw UnsupportedRing("modulus too large for the finite universe");
    for (const auto& f : factor_integer(r->int_modulus())) {
      SpecPoint pt{PrimeIdeal::certify(Ideal(r, {r->from_int(f.prime)})), r->from_int(f.prime), {f.prime.get_si()},
                   f.exponent, f.prime.get_ui()};
      a.spectrum.push_back(pt);
    }
    return a;
  }
  if (r->engine() == Engine::FieldPoly && d.base == BaseKind::PrimeField && r->nvars() == 1 && !d.quotient.empty() &&
      d.modulus.fits_slong_p()) {
    a.polynomial = true;
    a.characteristic = d.modulus.get_si();
    RingDescriptor ad = d;
    ad.quotient.clear();
    RingPtr amb = Ring::make(ad);
    Ideal q(amb, d.quotient);
    const auto& basis = q.canonical_basis();
    if (basis.size() != 1 || basis[0].total_degree() < 1) throw UnsupportedRing("quotient must be a nonconstant polynomial");
    Poly f = basis[0];
    for (const auto& g : univariate_irreducible_factors(*amb, f)) {
      unsigned e = 0;
      Poly rest = f, quo, rem;
      for (;;) {
        univariate_divmod(*amb, rest, g, quo, rem);
        if (!rem.is_zero()) break;
        rest = quo;
        ++e;
      }
      SpecPoint pt{PrimeIdeal::certify(Ideal(r, {g})), r->reduce(g), coeffs_mod(g, a.characteristic), e,
                   ipow(static_cast<unsigned long>(a.characteristic), static_cast<unsigned>(g.total_degree()))};
      a.spectrum.push_back(pt);
    }
    return a;
  }
  throw UnsupportedRing("finite universes need Z/n or F_p[x]/(f), got " + r->to_string());
}

bool partition_contains(const Partition& big, const Partition& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

namespace {

unsigned total(const Partition& p) {
  unsigned s = 0;
  for (unsigned x : p) s += x;
  return s;
}

struct LrSearch {
  const Partition& lambda;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<unsigned>> t;  // t[row][col], 0 = unfilled / inside mu
  std::vector<unsigned> count;
  unsigned long found = 0;

  unsigned mu_at(std::size_t i) const { return i < mu.size() ? mu[i] : 0; }

  void run(std::size_t row, long col) {
    if (row == lambda.size()) {
      ++found;
      return;
    }
    if (col < static_cast<long>(mu_at(row))) {
      std::size_t next = row + 1;
      run(next, next < lambda.size() ? static_cast<long>(lambda[next]) - 1 : -1);
      return;
    }
    const std::size_t c = static_cast<std::size_t>(col);
    unsigned hi = static_cast<unsigned>(nu.size());
    if (c + 1 < lambda[row]) hi = std::min(hi, t[row][c + 1]);  // weakly increasing rows
    unsigned lo = 1;
    if (row > 0 && c < lambda[row - 1] && c >= mu_at(row - 1)) lo = t[row - 1][c] + 1;  // strict columns
    for (unsigned v = lo; v <= hi; ++v) {
      if (count[v - 1] >= nu[v - 1]) continue;
      if (v > 1 && count[v - 1] + 1 > count[v - 2]) continue;  // lattice word
      t[row][c] = v;
      ++count[v - 1];
      run(row, col - 1);
      --count[v - 1];
      t[row][c] = 0;
    }
  }
};

}  // namespace

unsigned long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (total(lambda) != total(mu) + total(nu) || !partition_contains(lambda, mu)) return 0;
  if (lambda.empty()) return 1;
  static std::mutex mtx;
  static std::map<std::tuple<Partition, Partition, Partition>, unsigned long> cache;
  auto key = std::make_tuple(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LrSearch s{lambda, mu, nu, {}, std::vector<unsigned>(nu.size(), 0)};
  for (unsigned len : lambda) s.t.emplace_back(len, 0);
  s.run(0, static_cast<long>(lambda[0]) - 1);
  std::lock_guard<std::mutex> lock(mtx);
  cache[key] = s.found;
  return s.found;
}

bool class_is_sub(const ModuleClass& sub, const ModuleClass& m) {
  for (std::size_t i = 0; i < m.parts.size(); ++i) {
    if (!partition_contains(m.parts[i], sub.parts[i])) return false;
  }
  return true;
}

bool class_extension(const ModuleClass& a, const ModuleClass& c, const ModuleClass& e) {
  for (std::size_t i = 0; i < e.parts.size(); ++i) {
    if (lr_coefficient(e.parts[i], a.parts[i], c.parts[i]) == 0) return false;
  }
  return true;
}

bool class_essential(const ModuleClass& n, const ModuleClass& m) {
  for (std::size_t i = 0; i < m.parts.size(); ++i) {
    if (n.parts[i].size() != m.parts[i].size() || !partition_contains(m.parts[i], n.parts[i])) return false;
  }
  return true;
}

namespace {

void sub_partitions(const Partition& a, std::size_t i, Partition& cur, std::vector<Partition>& out) {
  if (i == a.size()) {
    Partition p = cur;
    while (!p.empty() && p.back() == 0) p.pop_back();
    out.push_back(p);
    return;
  }
  unsigned hi = std::min(a[i], i == 0 ? a[i] : cur[i - 1]);
  for (unsigned v = 0; v <= hi; ++v) {
    cur.push_back(v);
    sub_partitions(a, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool class_cokernel(const ModuleClass& a, const ModuleClass& b, const ModuleClass& c) {
  for (std::size_t i = 0; i < b.parts.size(); ++i) {
    std::vector<Partition> images;
    Partition cur;
    sub_partitions(a.parts[i], 0, cur, images);
    bool any = false;
    for (const auto& nu : images) any = any || lr_coefficient(b.parts[i], nu, c.parts[i]) > 0;
    if (!any) return false;
  }
  return true;
}

bool class_subquotient(const ModuleClass& p, const ModuleClass& m) {
  for (std::size_t i = 0; i < m.parts.size(); ++i) {
    if (p.parts[i].empty()) continue;
    if (m.parts[i].empty() || p.parts[i][0] > m.parts[i][0]) return false;
  }
  return true;
}

ModuleClass class_sum(const ModuleClass& a, const ModuleClass& b) {
  ModuleClass c;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    Partition p = a.parts[i];
    p.insert(p.end(), b.parts[i].begin(), b.parts[i].end());
    std::sort(p.rbegin(), p.rend());
    c.parts.push_back(p);
  }
  return c;
}

namespace {

unsigned long class_size(const ArtinianRing& r, const ModuleClass& c) {
  unsigned long s = 1;
  for (std::size_t i = 0; i < c.parts.size(); ++i) s *= ipow(r.spectrum[i].residue_size, total(c.parts[i]));
  return s;
}

void partitions_at(unsigned long q, unsigned max_part, unsigned long budget, Partition& cur,
                   std::vector<std::pair<Partition, unsigned long>>& out, unsigned long used) {
  out.push_back({cur, used});
  unsigned hi = cur.empty() ? max_part : cur.back();
  for (unsigned e = 1; e <= hi; ++e) {
    unsigned long f = ipow(q, e);
    if (used * f > budget) break;
    cur.push_back(e);
    partitions_at(q, max_part, budget, cur, out, used * f);
    cur.pop_back();
  }
}

void classes_from(const ArtinianRing& r, std::size_t i, unsigned long budget, ModuleClass& cur,
                  std::vector<ModuleClass>& out) {
  if (i == r.spectrum.size()) {
    out.push_back(cur);
    return;
  }
  std::vector<std::pair<Partition, unsigned long>> ps;
  Partition p;
  partitions_at(r.spectrum[i].residue_size, r.spectrum[i].max_exponent, budget, p, ps, 1);
  for (const auto& [part, used] : ps) {
    cur.parts.push_back(part);
    classes_from(r, i + 1, budget / used, cur, out);
    cur.parts.pop_back();
  }
}

std::vector<ModuleClass> enumerate_classes(const ArtinianRing& r, unsigned long bound) {
  std::vector<ModuleClass> out;
  ModuleClass cur;
  classes_from(r, 0, bound, cur, out);
  std::sort(out.begin(), out.end(), [&](const ModuleClass& a, const ModuleClass& b) {
    unsigned long sa = class_size(r, a), sb = class_size(r, b);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

std::vector<char> to_vec(std::uint64_t mask, std::size_t n) {
  std::vector<char> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = mask >> i & 1;
  return v;
}

std::string class_label(const ArtinianRing& r, const ModuleClass& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    for (unsigned e : c.parts[i]) {
      os << (first ? "" : " + ");
      first = false;
      if (r.polynomial) {
        std::string pi = r.ring->element_to_string(r.spectrum[i].pi);
        if (e > 1) pi = (r.spectrum[i].pi.terms.size() > 1 ? "(" + pi + ")" : pi) + "^" + std::to_string(e);
        os << "R/(" << pi << ")";
      } else {
        os << "Z/" << ipow(static_cast<unsigned long>(r.spectrum[i].pi_coeffs[0]), e);
      }
    }
  }
  return first ? "0" : os.str();
}

}  // namespace

GateReport compare_fast_paths(const ArtinianRing& r, unsigned long bound) {
  GateReport rep;
  std::vector<ModuleClass> cls = enumerate_classes(r, std::min(bound, 32ul));
  rep.classes = cls.size();
  struct Raw {
    std::set<ModuleClass> subs, quots;
    std::set<std::pair<ModuleClass, ModuleClass>> sub_quot;  // (N, E/N)
    std::set<ModuleClass> essential;
  };
  std::vector<Raw> raw(cls.size());
  auto fail = [&](const std::string& what) { rep.mismatches.push_back(what); };
  for (std::size_t e = 0; e < cls.size(); ++e) {
    ExplicitModule m(r, cls[e]);
    std::vector<char> all(m.size(), 1);
    ++rep.comparisons;
    if (!(raw_class_of_sub(r, m, all) == cls[e])) fail("class invariants of " + class_label(r, cls[e]));
    for (std::uint64_t s : raw_submodules(m)) {
      std::vector<char> v = to_vec(s, m.size());
      ModuleClass n = raw_class_of_sub(r, m, v), q = raw_class_of_quotient(r, m, v);
      raw[e].subs.insert(n);
      raw[e].quots.insert(q);
      raw[e].sub_quot.insert({n, q});
      if (raw_is_essential(m, s)) raw[e].essential.insert(n);
    }
  }
  for (std::size_t a = 0; a < cls.size(); ++a) {
    for (std::size_t e = 0; e < cls.size(); ++e) {
      rep.comparisons += 3;
      std::string pair = class_label(r, cls[a]) + " in " + class_label(r, cls[e]);
      if (class_is_sub(cls[a], cls[e]) != static_cast<bool>(raw[e].subs.count(cls[a]))) fail("submodule " + pair);
      if (class_is_sub(cls[a], cls[e]) != static_cast<bool>(raw[e].quots.count(cls[a]))) fail("quotient " + pair);
      if (class_essential(cls[a], cls[e]) != static_cast<bool>(raw[e].essential.count(cls[a]))) fail("essential " + pair);
      if (auto sq = raw_subquotient(r, cls[a], cls[e])) {
        ++rep.comparisons;
        if (*sq != class_subquotient(cls[a], cls[e])) fail("subquotient " + pair);
      }
      for (std::size_t c = 0; c < cls.size(); ++c) {
        rep.comparisons += 2;
        bool ext = raw[e].sub_quot.count({cls[a], cls[c]}) > 0;
        if (class_extension(cls[a], cls[c], cls[e]) != ext)
          fail("extension " + class_label(r, cls[e]) + " of " + class_label(r, cls[c]) + " by " + class_label(r, cls[a]));
        // cokernels of maps a -> e, landing in c
        bool coker = false;
        for (const auto& [n, q] : raw[e].sub_quot) coker = coker || (q == cls[c] && raw[a].quots.count(n));
        if (class_cokernel(cls[a], cls[e], cls[c]) != coker)
          fail("cokernel " + class_label(r, cls[c]) + " of a map " + class_label(r, cls[a]) + " -> " + class_label(r, cls[e]));
      }
    }
  }
  return rep;
}

std::optional<std::size_t> FiniteUniverse::index_of(const ModuleClass& c) const {
  auto it = std::find(classes_.begin(), classes_.end(), c);
  if (it == classes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - classes_.begin());
}

unsigned long FiniteUniverse::size_of(const ModuleClass& c) const { return class_size(ring_, c); }
unsigned long FiniteUniverse::cardinality(std::size_t i) const { return size_of(classes_[i]); }
std::string FiniteUniverse::name(std::size_t i) const { return class_label(ring_, classes_[i]); }
std::string FiniteUniverse::name(const ModuleClass& c) const { return class_label(ring_, c); }

ModulePresentation FiniteUniverse::presentation(std::size_t i) const {
  std::vector<Poly> ds;
  const ModuleClass& c = classes_[i];
  for (std::size_t k = 0; k < c.parts.size(); ++k) {
    for (unsigned e : c.parts[k]) ds.push_back(ring_.ring->pow(ring_.spectrum[k].pi, e));
  }
  if (ds.empty()) return ModulePresentation::zero(ring_.ring);
  return ModulePresentation::diagonal(ring_.ring, ds);
}

const FiniteUniverse::Tables& FiniteUniverse::tables() const {
  std::call_once(*once_, [this] {
    const std::size_t n = classes_.size();
    auto t = std::make_shared<Tables>();
    t->subs.resize(n);
    t->ess.resize(n);
    t->ext.resize(n * n);
    t->coker.resize(n * n);
    t->sum.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (class_is_sub(classes_[a], classes_[b])) t->subs[b].push_back(a);
        if (class_essential(classes_[a], classes_[b])) t->ess[a].push_back(b);
        t->sum[a * n + b] = index_of(class_sum(classes_[a], classes_[b]));
        for (std::size_t c = 0; c < n; ++c) {
          if (class_extension(classes_[a], classes_[b], classes_[c])) t->ext[a * n + b].push_back(c);
          if (class_cokernel(classes_[a], classes_[b], classes_[c])) t->coker[a * n + b].push_back(c);
        }
      }
    }
    tables_ = t;
  });
  return *tables_;
}

FiniteUniverse enumerate_universe(const RingPtr& ring, unsigned long bound) {
  if (bound < 1) throw InvalidArgument("universe bound must be at least 1");
  FiniteUniverse u;
  u.ring_ = ArtinianRing::analyze(ring);
  {
    static std::mutex mtx;
    static std::map<std::string, bool> gated;
    std::lock_guard<std::mutex> lock(mtx);
    std::string key = ring->to_string();
    if (!gated.count(key)) {
      GateReport g = compare_fast_paths(u.ring_, 32);
      if (!g.ok()) throw Error("class-level relations disagree with raw search: " + g.mismatches.front());
      gated[key] = true;
    }
  }
  u.bound_ = bound;
  u.classes_ = enumerate_classes(u.ring_, bound);
  if (u.classes_.size() > 600)
    throw ExplosionGuard("universe has " + std::to_string(u.classes_.size()) + " classes (limit 600)");
  u.once_ = std::make_shared<std::once_flag>();
  return u;
}

bool brute_subquotient(const FiniteUniverse& u, std::size_t p, std::size_t m) {
  return class_subquotient(u.cls(p), u.cls(m));
}

bool brute_equiv(const FiniteUniverse& u, std::size_t p, std::size_t m) {
  return brute_subquotient(u, p, m) && brute_subquotient(u, m, p);
}

}  // namespace rspec
