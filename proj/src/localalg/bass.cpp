#include "rspec/localalg/bass.hpp"

#include <functional>
#include <sstream>

#include "rspec/kernel/errors.hpp"

namespace rspec {

ShortExactSequence::ShortExactSequence(ModuleMap f, ModuleMap g) : f_(std::move(f)), g_(std::move(g)) {
  if (!f_.target().ring()->same_as(*g_.source().ring())) throw RingMismatch("short exact sequence over two rings");
  if (f_.target().rank() != g_.source().rank() || !(f_.target().relation_span().canonical() ==
                                                    g_.source().relation_span().canonical()))
    throw InvalidArgument("maps in a short exact sequence must share the middle module");
  if (!kernel(f_).module.is_zero()) throw InvalidArgument("sequence is not exact at the left (f not injective)");
  if (!cokernel(g_).module.is_zero()) throw InvalidArgument("sequence is not exact at the right (g not surjective)");
  if (!compose(g_, f_).is_zero()) throw InvalidArgument("sequence is not a complex (g f != 0)");
  if (!submodule_contains(middle(), f_.lift().cols, kernel(g_).generators()))
    throw InvalidArgument("sequence is not exact in the middle (ker g not in im f)");
}

bool bass_nonvanishing(const PrimeIdeal& p, std::size_t k, const ModulePresentation& m) {
  require_same_ring(*p.ring(), *m.ring());
  return supp_contains(p, ext_module(k, ModulePresentation::cyclic(p.ideal()), m));
}

bool cosyzygy_ass_membership(const PrimeIdeal& p, std::size_t k, const ModulePresentation& m) {
  return bass_nonvanishing(p, k, m);
}

namespace {

// R/p as a ring with canonical forms, and the map R -> R/p.
struct DomainQuotient {
  RingPtr ring;
  std::function<Poly(const Poly&)> map;
};

DomainQuotient residue_domain(const PrimeIdeal& p) {
  const RingPtr& r = p.ring();
  if (r->engine() == Engine::Integer) {
    mpz_class d = p.ideal().int_generator();
    RingPtr q = d == 0 ? Ring::integers() : Ring::integers_mod(d);
    return {q, [r, q](const Poly& f) { return q->from_int(r->to_int(f)); }};
  }
  if (r->engine() != Engine::FieldPoly) throw UnsupportedRing("rank computation needs Z, Z/n or a field-coefficient ring");
  RingDescriptor d = r->descriptor();
  for (const auto& g : p.ideal().canonical_basis()) d.quotient.push_back(g);
  RingPtr q = Ring::make(d);
  return {q, [q](const Poly& f) { return q->reduce(f); }};
}

}  // namespace

std::size_t rank_mod_prime(const PrimeIdeal& p, const Matrix& a0) {
  DomainQuotient dq = residue_domain(p);
  const Ring& q = *dq.ring;
  std::vector<std::vector<Poly>> a(a0.rows, std::vector<Poly>(a0.ncols()));
  for (std::size_t i = 0; i < a0.rows; ++i) {
    for (std::size_t j = 0; j < a0.ncols(); ++j) a[i][j] = dq.map(a0.at(i, j));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a0.ncols() && rank < a0.rows; ++c) {
    std::size_t piv = rank;
    while (piv < a0.rows && a[piv][c].is_zero()) ++piv;
    if (piv == a0.rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < a0.rows; ++i) {
      if (a[i][c].is_zero()) continue;
      Poly f = a[i][c];
      for (std::size_t j = c; j < a0.ncols(); ++j) a[i][j] = q.sub(q.mul(a[rank][c], a[i][j]), q.mul(f, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::size_t bass_dimension(const PrimeIdeal& p, std::size_t k, const ModulePresentation& m) {
  require_same_ring(*p.ring(), *m.ring());
  Pruned e = prune(ext_module(k, ModulePresentation::cyclic(p.ideal()), m));
  return e.module.rank() - rank_mod_prime(p, e.module.relation_matrix());
}

std::string BassTable::injective_term(std::size_t k) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < cands_.size(); ++i) {
    const BassEntry& e = entry(i, k);
    if (!e.nonvanishing) continue;
    os << (first ? "" : " + ") << "E(R/" << cands_[i].to_string() << ")^";
    if (e.dimension) {
      os << *e.dimension;
    } else {
      os << "?";
    }
    first = false;
  }
  return first ? "0" : os.str();
}


std::vector<PrimeIdeal> bass_candidates(const ModulePresentation& m) {
  const RingPtr& r = m.ring();
  if (m.is_zero()) return {};
  if (ring_is_principal(*r)) {
    std::vector<PrimeIdeal> out = candidate_primes(m);
    if (auto z = PrimeIdeal::try_certify(Ideal::zero(r))) out.push_back(*z);
    return unique_primes(out);
  }
  if (ring_is_artinian(*r)) return ass_enumerate(m);
  throw NeedCandidates("Bass tables over " + r->to_string() + " need explicit candidate primes");
}

BassTable symbolic_injective_resolution(const ModulePresentation& m, std::size_t up_to,
                                        const std::optional<std::vector<PrimeIdeal>>& candidates) {
  std::vector<PrimeIdeal> cands = candidates ? unique_primes(*candidates) : bass_candidates(m);
  std::map<std::pair<std::size_t, std::size_t>, BassEntry> entries;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    require_same_ring(*cands[i].ring(), *m.ring());
    for (std::size_t k = 0; k <= up_to; ++k) {
      BassEntry e;
      e.nonvanishing = bass_nonvanishing(cands[i], k, m);
      try {
        e.dimension = bass_dimension(cands[i], k, m);
      } catch (const UnsupportedRing&) {
      }
      if (e.dimension && (*e.dimension > 0) != e.nonvanishing)
        throw Error("Bass number and nonvanishing test disagree at " + cands[i].to_string());
      entries.emplace(std::make_pair(i, k), e);
    }
  }
  return BassTable(m, std::move(cands), up_to + 1, std::move(entries));
}

bool cor710_check(const ShortExactSequence& ses, std::size_t k, const std::vector<PrimeIdeal>& candidates) {
  auto a = [](const PrimeIdeal& p, long deg, const ModulePresentation& x) {
    return deg >= 0 && bass_nonvanishing(p, static_cast<std::size_t>(deg), x);
  };
  const long d = static_cast<long>(k);
  for (const auto& p : candidates) {
    const auto &l = ses.left(), &m = ses.middle(), &r = ses.right();
    if (a(p, d, l) && !(a(p, d, m) || a(p, d - 1, r))) return false;
    if (a(p, d, m) && !(a(p, d, l) || a(p, d, r))) return false;
    if (a(p, d, r) && !(a(p, d, m) || a(p, d + 1, l))) return false;
  }
  return true;
}

}  // namespace rspec
