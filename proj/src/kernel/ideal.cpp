#include "rspec/kernel/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/linalg.hpp"

namespace rspec {

namespace {

mpz_class gcd_of(mpz_class a, const mpz_class& b) {
  mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return a;
}

mpz_class lcm_of(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Ideal int_ideal(const RingPtr& ring, const mpz_class& g) {
  if (g == ring->int_modulus()) return Ideal::zero(ring);
  return Ideal(ring, {ring->from_int(g)});
}

Ideal ideal_from_column_entries(const RingPtr& ring, const std::vector<Column>& cols, std::size_t row) {
  std::vector<Poly> gens;
  for (const auto& c : cols) {
    if (!c[row].is_zero()) gens.push_back(c[row]);
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    Poly r = ring_->reduce(g);
    if (!r.is_zero()) gens_.push_back(std::move(r));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Poly one = ring->one();
  return Ideal(std::move(ring), {one});
}

void Ideal::populate() const {
  std::call_once(cache_->once, [this] {
    require_computable(*ring_);
    if (ring_->engine() == Engine::Integer) {
      mpz_class g = ring_->int_modulus();
      for (const auto& x : gens_) g = gcd_of(g, ring_->to_int(x));
      cache_->int_gen = g;
      if (g != ring_->int_modulus()) cache_->basis.push_back(ring_->from_int(g));
      return;
    }
    const PolyArith& pa = ring_->arith();
    ModuleArith ma(pa);
    std::vector<MVec> vs;
    for (const auto& x : gens_) vs.push_back(ma.embed(x, 0));
    for (const auto& q : ring_->quotient_basis()) vs.push_back(q);
    cache_->ambient_gb = groebner_basis(pa, vs);
    for (const auto& g : cache_->ambient_gb) {
      Poly r = ring_->reduce(ma.component(g, 0));
      if (!r.is_zero()) cache_->basis.push_back(std::move(r));
    }
    std::reverse(cache_->basis.begin(), cache_->basis.end());
  });
}

const std::vector<Poly>& Ideal::canonical_basis() const {
  populate();
  return cache_->basis;
}

mpz_class Ideal::int_generator() const {
  if (ring_->engine() != Engine::Integer) throw NotIntegerRing();
  populate();
  return cache_->int_gen;
}

bool Ideal::contains(const Poly& f0) const {
  populate();
  Poly f = ring_->reduce(f0);
  if (f.is_zero()) return true;
  if (ring_->engine() == Engine::Integer) {
    const mpz_class& g = cache_->int_gen;
    if (g == 0) return false;
    mpz_class v = ring_->to_int(f);
    return mpz_divisible_p(v.get_mpz_t(), g.get_mpz_t()) != 0;
  }
  return normal_form(ring_->arith(), f, cache_->ambient_gb).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*ring_, *other.ring_);
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::is_unit() const { return contains(ring_->one()); }

bool Ideal::operator==(const Ideal& o) const {
  if (!ring_->same_as(*o.ring_)) return false;
  return canonical_basis() == o.canonical_basis();
}

std::string Ideal::to_string() const {
  const auto& b = canonical_basis();
  std::ostringstream os;
  os << "(";
  if (b.empty()) os << "0";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << ring_->element_to_string(b[i]);
  os << ")";
  return os.str();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  std::vector<Poly> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  const Ring& r = *a.ring();
  std::vector<Poly> g;
  for (const auto& x : a.canonical_basis()) {
    for (const auto& y : b.canonical_basis()) g.push_back(r.mul(x, y));
  }
  return Ideal(a.ring(), std::move(g));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  Ideal r = Ideal::unit(a.ring());
  for (unsigned k = 0; k < n; ++k) r = ideal_product(r, a);
  return r;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  const RingPtr& ring = a.ring();
  require_computable(*ring);
  if (ring->engine() == Engine::Integer) return int_ideal(ring, lcm_of(a.int_generator(), b.int_generator()));
  // I cap J = ann of (1,1) in R/I (+) R/J
  std::vector<Column> gens;
  gens.push_back({ring->one(), ring->one()});
  for (const auto& g : a.canonical_basis()) gens.push_back({g, Poly{}});
  for (const auto& g : b.canonical_basis()) gens.push_back({Poly{}, g});
  return ideal_from_column_entries(ring, syzygies(*ring, gens, 2), 0);
}

Ideal ideal_intersection(const std::vector<Ideal>& ideals, const RingPtr& ring) {
  Ideal r = Ideal::unit(ring);
  for (const auto& i : ideals) r = ideal_intersection(r, i);
  return r;
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  require_same_ring(*i.ring(), *j.ring());
  const RingPtr& ring = i.ring();
  require_computable(*ring);
  if (j.is_zero()) return Ideal::unit(ring);
  if (ring->engine() == Engine::Integer) {
    mpz_class a = i.int_generator(), b = j.int_generator();
    if (a == 0) return Ideal::zero(ring);
    return int_ideal(ring, a / gcd_of(a, b));
  }
  // (I : J) = ann of (g_1, ..., g_s) in (R/I)^s
  const auto& jb = j.canonical_basis();
  const std::size_t s = jb.size();
  std::vector<Column> gens;
  gens.push_back(Column(jb.begin(), jb.end()));
  for (std::size_t k = 0; k < s; ++k) {
    for (const auto& h : i.canonical_basis()) {
      Column c(s);
      c[k] = h;
      gens.push_back(std::move(c));
    }
  }
  return ideal_from_column_entries(ring, syzygies(*ring, gens, s), 0);
}

Saturation saturation(const Ideal& i, const Ideal& j, unsigned cap) {
  require_same_ring(*i.ring(), *j.ring());
  if (j.is_zero()) throw InvalidArgument("saturation: J must be nonzero");
  Ideal cur = i;
  for (unsigned k = 0; k <= cap; ++k) {
    Ideal next = ideal_quotient(cur, j);
    if (next == cur) return {cur, k};
    cur = next;
  }
  throw IterationCap("saturation did not stabilize within " + std::to_string(cap) + " steps");
}

bool radical_contains(const Ideal& i, const Poly& f0) {
  const RingPtr& ring = i.ring();
  require_computable(*ring);
  Poly f = ring->reduce(f0);
  if (f.is_zero()) return true;
  if (ring->engine() == Engine::Integer) {
    const mpz_class d = i.int_generator();
    if (d == 0) return false;
    if (d == 1) return true;
    // f in sqrt(d) iff d | f^e with e = bit length of d
    mpz_class v = ring->to_int(f);
    mpz_class e = mpz_sizeinbase(d.get_mpz_t(), 2);
    mpz_class r;
    mpz_powm(r.get_mpz_t(), v.get_mpz_t(), e.get_mpz_t(), d.get_mpz_t());
    return r == 0;
  }
  // 1 in I + (1 - t f) in R[t]
  RingPtr ext = ring->extend({"__rabinowitsch"}, MonomialOrder{});
  const std::size_t n = ring->nvars();
  auto lift = [n](const Poly& p) {
    Poly q = p;
    for (auto& t : q.terms) t.exp.resize(n + 1, 0);
    return q;
  };
  std::vector<Poly> gens;
  for (const auto& g : i.canonical_basis()) gens.push_back(lift(g));
  Exponents te(n + 1, 0);
  te[n] = 1;
  Poly tf = ext->arith().mul(ext->arith().monomial(te, 1), lift(f));
  gens.push_back(ext->arith().sub(ext->arith().constant(1), tf));
  return Ideal(ext, std::move(gens)).is_unit();
}

}  // namespace rspec
