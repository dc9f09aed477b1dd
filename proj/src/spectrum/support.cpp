#include "rspec/spectrum/support.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/factor.hpp"
#include "rspec/modules/smith.hpp"

namespace rspec {

bool supp_contains(const PrimeIdeal& p, const ModulePresentation& m) {
  require_same_ring(*p.ring(), *m.ring());
  return p.ideal().contains(m.annihilator());
}

SpecSet spec_closure(const RingPtr& ring, const std::vector<PrimeIdeal>& points) {
  return SpecSet::closure(ring, points);
}

bool ass_contains(const PrimeIdeal& p, const ModulePresentation& m) {
  require_same_ring(*p.ring(), *m.ring());
  if (!supp_contains(p, m)) return false;
  HomModule h = hom_module(ModulePresentation::cyclic(p.ideal()), m);
  return supp_contains(p, h.module);
}

namespace {

bool single_term(const Poly& p) { return p.terms.size() <= 1; }

bool monomial_quotient(const Ring& r) {
  for (const auto& q : r.descriptor().quotient) {
    if (!single_term(q)) return false;
  }
  return true;
}

RingPtr ambient_of(const Ring& r) {
  RingDescriptor d = r.descriptor();
  d.quotient.clear();
  return Ring::make(d);
}

std::vector<PrimeIdeal> int_primes(const RingPtr& ring, const std::vector<mpz_class>& ps) {
  std::vector<PrimeIdeal> out;
  for (const auto& p : ps) out.push_back(PrimeIdeal::certify(Ideal(ring, {ring->from_int(p)})));
  return out;
}

std::vector<PrimeIdeal> poly_factor_primes(const RingPtr& ring, const Poly& f) {
  RingPtr amb = ambient_of(*ring);
  std::vector<PrimeIdeal> out;
  for (const auto& g : univariate_irreducible_factors(*amb, f)) out.push_back(PrimeIdeal::certify(Ideal(ring, {g})));
  return out;
}

// Monomial primes (x_S) containing `ann` whose ideal contains the quotient.
std::vector<PrimeIdeal> monomial_primes_over(const Ideal& ann) {
  const RingPtr& ring = ann.ring();
  const std::size_t n = ring->nvars();
  if (n > 16) throw NeedCandidates("too many variables for monomial prime enumeration");
  std::vector<PrimeIdeal> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) gens.push_back(ring->arith().variable(i));
    }
    Ideal cand(ring, gens);
    if (cand.is_unit()) continue;
    auto p = PrimeIdeal::try_certify(cand);
    if (!p) continue;
    if (p->ideal().contains(ann)) out.push_back(*p);
  }
  return out;
}

}  // namespace

bool ring_is_artinian(const Ring& r) {
  if (r.engine() == Engine::Integer) return r.int_modulus() != 0;
  if (r.engine() != Engine::FieldPoly) return false;
  if (r.nvars() == 0) return true;
  RingDescriptor d = r.descriptor();
  std::vector<Poly> q = d.quotient;
  d.quotient.clear();
  RingPtr amb = Ring::make(d);
  Ideal qi(amb, q);
  const auto& basis = qi.canonical_basis();
  for (std::size_t v = 0; v < r.nvars(); ++v) {
    bool pure = false;
    for (const auto& g : basis) {
      const Exponents& e = g.lead().exp;
      bool only_v = true;
      for (std::size_t t = 0; t < e.size(); ++t) only_v = only_v && (t == v || e[t] == 0);
      pure = pure || (only_v && e[v] > 0);
    }
    if (!pure) return false;
  }
  return true;
}

bool ring_is_principal(const Ring& r) {
  return r.engine() == Engine::Integer || (r.engine() == Engine::FieldPoly && r.nvars() <= 1);
}

bool ring_is_field(const RingPtr& r) {
  if (r->engine() == Engine::Integer) return r->int_modulus() != 0 && is_prime_integer(r->int_modulus());
  if (r->engine() != Engine::FieldPoly) return false;
  return ring_is_artinian(*r) && PrimeIdeal::try_certify(Ideal::zero(r)).has_value();
}

bool is_multigraded(const ModulePresentation& m) {
  const Ring& r = *m.ring();
  if (r.engine() != Engine::FieldPoly || !monomial_quotient(r)) return false;
  const std::size_t n = m.rank(), k = m.relations().size(), nv = r.nvars();
  // nodes: generators 0..n-1, relations n..n+k-1; deg(rel) = deg(gen) + exp(entry)
  std::vector<std::optional<std::vector<long>>> deg(n + k);
  std::vector<std::vector<std::pair<std::size_t, std::vector<long>>>> adj(n + k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Poly& e = m.relations()[j][i];
      if (e.is_zero()) continue;
      if (!single_term(e)) return false;
      std::vector<long> off(e.lead().exp.begin(), e.lead().exp.end());
      adj[i].push_back({n + j, off});
      std::vector<long> neg(off);
      for (auto& x : neg) x = -x;
      adj[n + j].push_back({i, neg});
    }
  }
  for (std::size_t s = 0; s < n + k; ++s) {
    if (deg[s]) continue;
    deg[s] = std::vector<long>(nv, 0);
    std::vector<std::size_t> stack = {s};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, off] : adj[u]) {
        std::vector<long> d = *deg[u];
        for (std::size_t t = 0; t < nv; ++t) d[t] += off[t];
        if (!deg[v]) {
          deg[v] = d;
          stack.push_back(v);
        } else if (*deg[v] != d) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<PrimeIdeal> candidate_primes(const ModulePresentation& m) {
  const RingPtr& ring = m.ring();
  if (m.is_zero()) return {};
  if (ring->engine() == Engine::Integer) {
    PidInvariants inv = pid_invariants(m);
    std::vector<mpz_class> ps;
    for (const auto& d : inv.torsion) {
      for (const auto& p : prime_divisors(Ring::integers()->to_int(d))) ps.push_back(p);
    }
    std::vector<PrimeIdeal> out = int_primes(ring, ps);
    if (inv.free_rank > 0) out.push_back(PrimeIdeal::certify(Ideal::zero(ring)));
    return unique_primes(out);
  }
  if (ring->engine() == Engine::FieldPoly && ring->nvars() == 0) return {PrimeIdeal::certify(Ideal::zero(ring))};
  if (ring->engine() == Engine::FieldPoly && ring->nvars() == 1) {
    PidInvariants inv = pid_invariants(m);
    std::vector<PrimeIdeal> out;
    for (const auto& d : inv.torsion) {
      auto fs = poly_factor_primes(ring, d);
      out.insert(out.end(), fs.begin(), fs.end());
    }
    if (inv.free_rank > 0) out.push_back(PrimeIdeal::certify(Ideal::zero(ring)));
    return unique_primes(out);
  }
  if (is_multigraded(m)) return monomial_primes_over(m.annihilator());
  throw NeedCandidates("no complete associated-prime strategy for this presentation over " + ring->to_string() +
                       "; supply candidate primes");
}

std::vector<PrimeIdeal> ass_enumerate(const ModulePresentation& m,
                                      const std::optional<std::vector<PrimeIdeal>>& candidates) {
  std::vector<PrimeIdeal> cands = candidates ? unique_primes(*candidates) : candidate_primes(m);
  std::vector<PrimeIdeal> out;
  for (const auto& p : cands) {
    if (ass_contains(p, m)) out.push_back(p);
  }
  return out;
}

std::vector<PrimeIdeal> minimal_primes(const Ideal& i) {
  const RingPtr& ring = i.ring();
  if (i.is_unit()) return {};
  std::vector<PrimeIdeal> all;
  if (ring->engine() == Engine::Integer) {
    mpz_class d = i.int_generator();
    if (d == 0) return {PrimeIdeal::certify(Ideal::zero(ring))};
    all = int_primes(ring, prime_divisors(d));
  } else if (ring->engine() == Engine::FieldPoly && ring->nvars() == 0) {
    return {PrimeIdeal::certify(Ideal::zero(ring))};
  } else if (ring->engine() == Engine::FieldPoly && ring->nvars() == 1) {
    RingPtr amb = ambient_of(*ring);
    std::vector<Poly> gens = i.canonical_basis();
    for (const auto& q : ring->descriptor().quotient) gens.push_back(q);
    Ideal a(amb, gens);
    if (a.is_zero()) return {PrimeIdeal::certify(Ideal::zero(ring))};
    all = poly_factor_primes(ring, a.canonical_basis().front());
  } else if (ring->engine() == Engine::FieldPoly && monomial_quotient(*ring) &&
             std::all_of(i.canonical_basis().begin(), i.canonical_basis().end(), single_term)) {
    all = monomial_primes_over(i);
  } else {
    throw NeedCandidates("minimal primes need a principal ring or monomial data");
  }
  std::vector<PrimeIdeal> out;
  for (const auto& p : all) {
    bool minimal = std::none_of(all.begin(), all.end(), [&](const PrimeIdeal& q) {
      return !(q == p) && q.specializes_to(p);
    });
    if (minimal) out.push_back(p);
  }
  return unique_primes(out);
}

SpecSet support(const ModulePresentation& m) { return SpecSet::closure(m.ring(), minimal_primes(m.annihilator())); }

PrimeFiltration prime_filtration(const ModulePresentation& m, unsigned cap) {
  const RingPtr& ring = m.ring();
  PrimeFiltration f;
  std::vector<Column> cur;
  for (unsigned step = 0; step <= cap; ++step) {
    Quotient q = quotient(m, cur);
    if (q.module.is_zero()) return f;
    std::vector<PrimeIdeal> ass = ass_enumerate(q.module);
    if (ass.empty()) throw Error("prime filtration: nonzero module without associated primes");
    // an inclusion-maximal associated prime
    const PrimeIdeal* top = &ass.front();
    for (const auto& p : ass) {
      if (top->specializes_to(p)) top = &p;
    }
    PrimeIdeal p = *top;
    HomModule h = hom_module(ModulePresentation::cyclic(p.ideal()), q.module);
    std::optional<Column> v;
    for (std::size_t i = 0; i < h.vec_generators.size() && !v; ++i) {
      Column img = h.generator_map(i).apply({ring->one()});
      if (!q.module.element_is_zero(img)) v = img;
    }
    if (!v) throw Error("prime filtration: no element with the associated prime as annihilator");
    if (!(element_annihilator(q.module, *v) == p.ideal()))
      throw Error("prime filtration: witness annihilator differs from the prime");
    cur.push_back(*v);
    f.chain.push_back(cur);
    f.elements.push_back(*v);
    f.primes.push_back(p);
  }
  throw IterationCap("prime filtration did not terminate within " + std::to_string(cap) + " steps");
}

std::optional<PrimeIdeal> is_spectral(const ModulePresentation& m) {
  if (m.is_zero()) return std::nullopt;
  auto p = PrimeIdeal::try_certify(m.annihilator());
  if (!p) return std::nullopt;
  std::vector<PrimeIdeal> ass = ass_enumerate(m);
  if (ass.size() == 1 && ass.front() == *p) return p;
  return std::nullopt;
}

bool subquotient_rel(const ModulePresentation& p, const ModulePresentation& m) {
  require_same_ring(*p.ring(), *m.ring());
  Pruned pr = prune(p);
  if (pr.module.rank() != 1) throw InvalidArgument("left argument must be a cyclic module R/p");
  auto prime = PrimeIdeal::try_certify(pr.module.annihilator());
  if (!prime) throw InvalidArgument("left argument must have a prime annihilator");
  return supp_contains(*prime, m);
}

}  // namespace rspec
