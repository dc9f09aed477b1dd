#include "rspec/localalg/divisible.hpp"

#include <sstream>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/factor.hpp"
#include "rspec/modules/smith.hpp"

namespace rspec {

DivisibleGroup::DivisibleGroup(unsigned long rank, unsigned long default_mult,
                               std::map<mpz_class, unsigned long> exceptions)
    : rank_(rank), default_(default_mult) {
  for (auto& [p, m] : exceptions) {
    if (!is_prime_integer(p)) throw InvalidArgument("Pruefer multiplicity keyed by non-prime " + p.get_str());
    if (m != default_) exc_.emplace(p, m);
  }
}

unsigned long DivisibleGroup::multiplicity(const mpz_class& p) const {
  auto it = exc_.find(p);
  return it == exc_.end() ? default_ : it->second;
}

std::string DivisibleGroup::to_string() const {
  std::ostringstream os;
  os << "rank " << rank_ << "; default " << default_ << "; exceptions {";
  bool first = true;
  for (const auto& [p, m] : exc_) {
    os << (first ? "" : ", ") << p.get_str() << ": " << m;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

struct Shape {
  unsigned long free_rank = 0;
  std::map<mpz_class, unsigned long> prime_parts;  // p -> number of cyclic p-power summands
};

Shape integer_shape(const ModulePresentation& m) {
  const Ring& r = *m.ring();
  if (r.engine() != Engine::Integer || r.int_modulus() != 0) throw NotIntegerRing();
  PidInvariants inv = pid_invariants(m);
  Shape s;
  s.free_rank = inv.free_rank;
  for (const auto& d : inv.torsion) {
    for (const auto& f : factor_integer(abs(r.to_int(d)))) s.prime_parts[f.prime] += 1;
  }
  return s;
}

}  // namespace

DivisibleGroup divisible_injective_hull(const ModulePresentation& m) {
  Shape s = integer_shape(m);
  return DivisibleGroup(s.free_rank, 0, s.prime_parts);
}

DivisibleGroup divisible_cosyzygy(const ModulePresentation& m, std::size_t k) {
  Shape s = integer_shape(m);
  if (k == 0) return DivisibleGroup(s.free_rank, 0, s.prime_parts);
  if (k >= 2) return DivisibleGroup();
  // E/M: (Q/Z)^a plus the Pruefer summands of the torsion hull
  std::map<mpz_class, unsigned long> exc;
  for (const auto& [p, n] : s.prime_parts) exc[p] = s.free_rank + n;
  return DivisibleGroup(0, s.free_rank, exc);
}

bool divisible_ass(const DivisibleGroup& d, const PrimeIdeal& p) {
  const Ring& r = *p.ring();
  if (r.engine() != Engine::Integer || r.int_modulus() != 0) throw NotIntegerRing();
  mpz_class g = p.ideal().int_generator();
  if (g == 0) return d.rank() > 0;
  return d.multiplicity(g) > 0;
}

bool divisible_supp(const DivisibleGroup& d, const PrimeIdeal& q) {
  if (d.rank() > 0) return true;
  return divisible_ass(d, q);
}

bool divisible_hom_nonzero(const ModulePresentation& m, const DivisibleGroup& d) {
  Shape s = integer_shape(m);
  if (s.free_rank > 0 && !d.is_zero()) return true;
  for (const auto& [p, n] : s.prime_parts) {
    if (d.multiplicity(p) > 0) return true;
  }
  return false;
}

}  // namespace rspec
