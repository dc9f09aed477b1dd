#include "rspec/spectrum/prime.hpp"

#include <algorithm>
#include <sstream>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/factor.hpp"

namespace rspec {

const char* certification_name(Certification c) { return c == Certification::Auto ? "auto" : "asserted"; }

namespace {

RingPtr ambient_of(const Ring& r) {
  RingDescriptor d = r.descriptor();
  d.quotient.clear();
  return Ring::make(d);
}

std::optional<std::string> primality_failure(const Ideal& i) {
  const Ring& r = *i.ring();
  if (i.is_unit()) return "the unit ideal is not prime";
  if (r.engine() == Engine::Integer) {
    mpz_class d = i.int_generator();
    if (d == 0) return std::nullopt;
    if (is_prime_integer(d)) return std::nullopt;
    return "generator " + d.get_str() + " is not prime";
  }
  if (r.engine() != Engine::FieldPoly) return "no primality test over " + r.to_string();
  RingPtr amb = ambient_of(r);
  std::vector<Poly> gens = i.canonical_basis();
  for (const auto& q : r.descriptor().quotient) gens.push_back(q);
  Ideal a(amb, gens);
  const auto& basis = a.canonical_basis();
  if (basis.empty()) return std::nullopt;  // zero ideal of a polynomial ring
  if (r.nvars() == 1) {
    if (basis.size() == 1 && univariate_is_irreducible(*amb, basis[0])) return std::nullopt;
    return "generator is not irreducible";
  }
  bool linear = std::all_of(basis.begin(), basis.end(), [](const Poly& p) { return p.total_degree() == 1; });
  if (linear) return std::nullopt;
  return "primality of " + i.to_string() + " cannot be certified automatically (use 'assume prime')";
}

}  // namespace

PrimeIdeal PrimeIdeal::certify(const Ideal& i) {
  if (auto why = primality_failure(i)) throw InvalidArgument(*why);
  return PrimeIdeal(i, Certification::Auto);
}

std::optional<PrimeIdeal> PrimeIdeal::try_certify(const Ideal& i) {
  if (primality_failure(i)) return std::nullopt;
  return PrimeIdeal(i, Certification::Auto);
}

PrimeIdeal PrimeIdeal::assume(const Ideal& i) {
  if (i.is_unit()) throw InvalidArgument("the unit ideal is not prime");
  if (auto p = try_certify(i)) return *p;
  return PrimeIdeal(i, Certification::Asserted);
}

std::vector<std::string> PrimeIdeal::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : ideal_.canonical_basis()) out.push_back(ring()->element_to_string(g));
  if (out.empty()) out.push_back("0");
  return out;
}

bool prime_less(const PrimeIdeal& a, const PrimeIdeal& b) {
  auto ga = a.generator_strings(), gb = b.generator_strings();
  // shorter printed ideals first, so (0) < (2) < (3) < (11) over Z
  auto key = [](const std::vector<std::string>& g) {
    std::size_t len = 0;
    for (const auto& s : g) len += s.size();
    return std::make_pair(g.size(), len);
  };
  if (key(ga) != key(gb)) return key(ga) < key(gb);
  return ga < gb;
}

std::vector<PrimeIdeal> unique_primes(std::vector<PrimeIdeal> ps) {
  std::sort(ps.begin(), ps.end(), prime_less);
  std::vector<PrimeIdeal> out;
  for (auto& p : ps) {
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  }
  return out;
}

SpecSet SpecSet::closure(const RingPtr& ring, const std::vector<PrimeIdeal>& points) {
  SpecSet s(ring);
  std::vector<PrimeIdeal> ps = unique_primes(points);
  for (const auto& p : ps) require_same_ring(*ring, *p.ring());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < ps.size() && !redundant; ++j) {
      if (i != j && ps[j].specializes_to(ps[i])) redundant = true;
    }
    if (!redundant) s.gens_.push_back(ps[i]);
  }
  return s;
}

bool SpecSet::contains(const PrimeIdeal& q) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const PrimeIdeal& p) { return p.specializes_to(q); });
}

bool SpecSet::subset_of(const SpecSet& other) const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const PrimeIdeal& p) { return other.contains(p); });
}

bool SpecSet::operator==(const SpecSet& o) const {
  if (gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!(gens_[i] == o.gens_[i])) return false;
  }
  return true;
}

SpecSet SpecSet::unite(const SpecSet& o) const {
  std::vector<PrimeIdeal> all = gens_;
  all.insert(all.end(), o.gens_.begin(), o.gens_.end());
  return closure(ring_, all);
}

Ideal SpecSet::defining_ideal() const {
  std::vector<Ideal> is;
  for (const auto& p : gens_) is.push_back(p.ideal());
  return ideal_intersection(is, ring_);
}

std::string SpecSet::to_string() const {
  std::ostringstream os;
  os << "closure{";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << "}";
  return os.str();
}

}  // namespace rspec
