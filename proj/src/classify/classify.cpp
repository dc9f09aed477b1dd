#include "rspec/classify/classify.hpp"

#include <sstream>

#include "rspec/kernel/errors.hpp"
#include "rspec/localalg/divisible.hpp"

namespace rspec {

bool serre_member(const ModulePresentation& m, const SpecSet& s) { return torsion_class_member(m, s); }

SpecSet supp_of_family(const RingPtr& ring, const std::vector<ModulePresentation>& ms) {
  std::vector<PrimeIdeal> pts;
  for (const auto& m : ms) {
    require_same_ring(*ring, *m.ring());
    for (auto& p : ass_enumerate(m)) pts.push_back(std::move(p));
  }
  return SpecSet::closure(ring, pts);
}

Generator Generator::ring(const RingPtr& r) { return Generator(ModulePresentation::free(r, 1), true); }

Generator Generator::with_epimorphism(const ModulePresentation& g, const ModuleMap& epi) {
  const RingPtr& r = g.ring();
  require_same_ring(*r, *epi.source().ring());
  const ModulePresentation& t = epi.target();
  if (t.rank() != 1 || !t.relations().empty()) throw InvalidArgument("generator witness must map onto R");
  std::size_t n = g.rank();
  if (n == 0 || epi.source().rank() % n != 0) throw InvalidArgument("generator witness source is not a sum of copies of G");
  std::vector<ModulePresentation> copies(epi.source().rank() / n, g);
  ModulePresentation sum = direct_sum(copies, r);
  if (!spans_equal(*r, sum.relations(), epi.source().relations(), sum.rank()))
    throw InvalidArgument("generator witness source is not a sum of copies of G");
  if (!cokernel(epi).module.is_zero()) throw InvalidArgument("generator witness is not surjective");
  return Generator(g, false);
}

bool one_resolving_member(const ModulePresentation& m, const SpecSet& s) { return torsion_free_member(m, s); }

bool one_resolving_valid(const SpecSet& s, const Generator& g) {
  require_same_ring(*s.ring(), *g.module().ring());
  for (const auto& p : ass_enumerate(g.module())) {
    if (s.contains(p)) return false;
  }
  return true;
}

const char* completeness_name(Completeness c) { return c == Completeness::Proved ? "proved" : "sampled"; }

GSequence::GSequence(std::vector<SpecSet> ys, Generator g) : ys_(std::move(ys)), g_(std::move(g)) {
  for (std::size_t i = 0; i < ys_.size(); ++i) {
    require_same_ring(*ys_[i].ring(), *g_.module().ring());
    if (i > 0 && !ys_[i].subset_of(ys_[i - 1]))
      throw InvalidArgument("G-sequence must decrease: Y_" + std::to_string(i + 1) + " is not inside Y_" +
                            std::to_string(i));
  }
}

namespace {

bool is_integers(const Ring& r) { return r.engine() == Engine::Integer && r.int_modulus() == 0; }

// A nonzero point of Ass(D) for a nonzero divisible group.
PrimeIdeal divisible_witness(const RingPtr& z, const DivisibleGroup& d) {
  if (d.rank() > 0) return PrimeIdeal::certify(Ideal::zero(z));
  for (const auto& [p, m] : d.exceptions()) {
    if (m > 0) return PrimeIdeal::certify(Ideal(z, {z->from_int(p)}));
  }
  mpz_class p = 2;
  while (d.multiplicity(p) == 0) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return PrimeIdeal::certify(Ideal(z, {z->from_int(p)}));
}

// Ass(cosyzygy_k(X)) ∩ Y = ∅, decided on Y's generators (complete when each
// V(p) is a point or has closed-form Bass data) and on the samples in Y.
ClauseCheck clause_check(const ModulePresentation& x, std::size_t k, const SpecSet& y, std::size_t index,
                         const std::vector<PrimeIdeal>& samples) {
  ClauseCheck c;
  c.index = index;
  const RingPtr& r = x.ring();
  const bool artinian = ring_is_artinian(*r);
  for (const auto& p : y.generators()) {
    c.checked.push_back(p);
    if (bass_nonvanishing(p, k, x)) {
      c.holds = false;
      c.witness = p;
      return c;
    }
    if (artinian) continue;
    if (p.ideal().is_zero() && ring_is_principal(*r)) {
      // V(0) is the whole spectrum of a principal domain
      if (is_integers(*r)) {
        DivisibleGroup d = divisible_cosyzygy(x, k);
        if (!d.is_zero()) {
          c.holds = false;
          c.witness = divisible_witness(r, d);
          return c;
        }
      } else if (k <= 1 && !x.is_zero()) {
        // over k[x] the first two cosyzygies of a nonzero module are nonzero
        c.holds = false;
        return c;
      }
      continue;
    }
    if (ring_is_principal(*r)) continue;  // nonzero primes of k[x] are maximal
    c.completeness = Completeness::Sampled;
  }
  if (c.completeness == Completeness::Sampled) {
    for (const auto& q : samples) {
      if (!y.contains(q)) continue;
      c.checked.push_back(q);
      if (bass_nonvanishing(q, k, x)) {
        c.holds = false;
        c.witness = q;
        return c;
      }
    }
  }
  return c;
}

ClauseReport clauses_for(const ModulePresentation& x, const GSequence& y, const std::vector<PrimeIdeal>& samples) {
  ClauseReport rep;
  for (std::size_t i = 1; i <= y.length(); ++i) {
    ClauseCheck c = clause_check(x, i - 1, y.y(i), i, samples);
    if (c.completeness == Completeness::Sampled) rep.completeness = Completeness::Sampled;
    rep.holds = rep.holds && c.holds;
    rep.clauses.push_back(std::move(c));
  }
  if (rep.completeness == Completeness::Sampled)
    rep.note = "clauses over positive-dimensional non-principal rings were checked on generators and samples only";
  else if (!ring_is_principal(*x.ring()) && !ring_is_artinian(*x.ring()))
    rep.note = "complete on the listed primes";
  return rep;
}

}  // namespace

ClauseReport g_sequence_validate(const GSequence& y, const std::vector<PrimeIdeal>& samples) {
  return clauses_for(y.generator().module(), y, samples);
}

ClauseReport c_tilde_member(const ModulePresentation& m, const GSequence& y, const std::vector<PrimeIdeal>& samples) {
  require_same_ring(*m.ring(), *y.ring());
  return clauses_for(m, y, samples);
}

GSequence c_tilde_truncate(const GSequence& y, std::size_t j) {
  if (j < 1 || j > y.length())
    throw InvalidArgument("truncation index " + std::to_string(j) + " outside 1.." + std::to_string(y.length()));
  std::vector<SpecSet> ys(y.sets().begin() + static_cast<long>(j - 1), y.sets().end());
  GSequence t(std::move(ys), y.generator());
  ClauseReport before = g_sequence_validate(y);
  if (before.holds && !g_sequence_validate(t).holds) throw Error("truncated G-sequence lost validity");
  return t;
}

PointSet PointSet::finite(const RingPtr& r, std::vector<PrimeIdeal> points) {
  for (const auto& p : points) require_same_ring(*r, *p.ring());
  return PointSet(r, unique_primes(std::move(points)), false);
}

PointSet PointSet::all(const RingPtr& r) {
  if (!ring_is_artinian(*r)) throw InvalidArgument("the set of all primes is only available over Artinian rings");
  return PointSet(r, {}, true);
}

bool PointSet::contains(const PrimeIdeal& p) const {
  require_same_ring(*ring_, *p.ring());
  if (all_) return true;
  for (const auto& q : points_) {
    if (q == p) return true;
  }
  return false;
}

bool PointSet::operator==(const PointSet& o) const {
  if (!ring_->same_as(*o.ring_)) return false;
  if (all_ || o.all_) return all_ == o.all_;
  return points_ == o.points_;
}

std::string PointSet::to_string() const {
  if (all_) return "all primes";
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < points_.size(); ++i) os << (i ? ", " : "") << points_[i].to_string();
  os << "}";
  return os.str();
}

bool psi_member(const ModulePresentation& m, const PointSet& s) {
  for (const auto& p : ass_enumerate(m)) {
    if (!s.contains(p)) return false;
  }
  return true;
}

PointSet phi_of_family(const RingPtr& ring, const std::vector<ModulePresentation>& ms) {
  std::vector<PrimeIdeal> pts;
  for (const auto& m : ms) {
    require_same_ring(*ring, *m.ring());
    for (auto& p : ass_enumerate(m)) pts.push_back(std::move(p));
  }
  return PointSet::finite(ring, std::move(pts));
}

}  // namespace rspec
