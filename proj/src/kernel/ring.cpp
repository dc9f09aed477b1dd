#include "rspec/kernel/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rspec/kernel/errors.hpp"

namespace rspec {

namespace {

bool is_prime(const mpz_class& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

CoeffDomain coeffs_for(const RingDescriptor& d) {
  switch (d.base) {
    case BaseKind::Integers:
      return CoeffDomain::integers();
    case BaseKind::IntegersMod:
    case BaseKind::PrimeField:
      return CoeffDomain::modular(d.modulus);
    case BaseKind::Rationals:
      return CoeffDomain::rationals();
  }
  return CoeffDomain::integers();
}

void validate_vars(const std::vector<std::string>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InvalidArgument("invalid variable name '" + v + "'");
    for (char c : v) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InvalidArgument("invalid variable name '" + v + "'");
    }
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
  }
}

void validate_poly(const Poly& p, std::size_t nvars) {
  for (const auto& t : p.terms) {
    if (t.exp.size() != nvars) throw InvalidArgument("quotient generator has wrong number of variables");
    for (int e : t.exp) {
      if (e < 0) throw InvalidArgument("negative exponent");
    }
  }
}

}  // namespace

Ring::Ring(RingDescriptor d)
    : desc_(std::move(d)), engine_(Engine::Unsupported), arith_(desc_.vars.size(), desc_.order, coeffs_for(desc_)) {}

RingPtr Ring::make(RingDescriptor d) {
  validate_vars(d.vars);
  for (const auto& q : d.quotient) validate_poly(q, d.vars.size());

  switch (d.base) {
    case BaseKind::Integers:
      d.modulus = 0;
      break;
    case BaseKind::IntegersMod:
      if (d.modulus < 2) throw InvalidArgument("ZZ/n requires n >= 2");
      if (!d.vars.empty() && is_prime(d.modulus)) d.base = BaseKind::PrimeField;
      break;
    case BaseKind::PrimeField:
      if (!is_prime(d.modulus)) throw InvalidArgument("GF(p) requires a prime p, got " + d.modulus.get_str());
      break;
    case BaseKind::Rationals:
      d.modulus = 0;
      break;
  }

  // Quotients of Z or Z/n with no variables collapse into the modulus.
  if (d.vars.empty() && (d.base == BaseKind::Integers || d.base == BaseKind::IntegersMod)) {
    mpz_class g = d.modulus;
    for (const auto& q : d.quotient) {
      for (const auto& t : q.terms) {
        if (t.coef.get_den() != 1) throw InvalidArgument("non-integer quotient generator");
        mpz_class v = abs(t.coef.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      }
    }
    d.quotient.clear();
    if (g == 1) throw InvalidArgument("quotient is the zero ring");
    if (g == 0) {
      d.base = BaseKind::Integers;
      d.modulus = 0;
    } else {
      d.base = BaseKind::IntegersMod;
      d.modulus = g;
    }
  }

  auto ring = std::shared_ptr<Ring>(new Ring(d));
  Ring& r = *ring;
  if (r.desc_.vars.empty() && (r.desc_.base == BaseKind::Integers || r.desc_.base == BaseKind::IntegersMod)) {
    r.engine_ = Engine::Integer;
    r.int_modulus_ = r.desc_.modulus;
  } else if (r.desc_.base == BaseKind::PrimeField || r.desc_.base == BaseKind::Rationals) {
    r.engine_ = Engine::FieldPoly;
    ModuleArith ma(r.arith_);
    std::vector<MVec> gens;
    for (auto q : r.desc_.quotient) {
      for (auto& t : q.terms) t.coef = r.arith_.normalize(t.coef);
      gens.push_back(ma.embed(r.arith_.from_terms(q.terms), 0));
    }
    r.quotient_basis_ = groebner_basis(r.arith_, gens);
    if (r.quotient_basis_.size() == 1 && r.quotient_basis_[0].size() == 1) {
      const auto& e = r.quotient_basis_[0][0].exp;
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }))
        throw InvalidArgument("quotient is the zero ring");
    }
    r.desc_.quotient.clear();
    for (const auto& g : r.quotient_basis_) r.desc_.quotient.push_back(ma.component(g, 0));
  } else {
    r.engine_ = Engine::Unsupported;
    std::vector<Poly> qs;
    for (auto q : r.desc_.quotient) {
      Poly p = r.arith_.from_terms(q.terms);
      if (!p.is_zero()) qs.push_back(p);
    }
    r.desc_.quotient = qs;
  }
  return ring;
}

RingPtr Ring::integers() { return make({BaseKind::Integers, 0, {}, {}, {}}); }

RingPtr Ring::integers_mod(const mpz_class& n) { return make({BaseKind::IntegersMod, n, {}, {}, {}}); }

RingPtr Ring::rationals(std::vector<std::string> vars) {
  return make({BaseKind::Rationals, 0, std::move(vars), {}, {}});
}

RingPtr Ring::prime_field(const mpz_class& p, std::vector<std::string> vars) {
  return make({BaseKind::PrimeField, p, std::move(vars), {}, {}});
}

bool Ring::has_quotient() const {
  if (engine_ == Engine::Integer) return int_modulus_ != 0;
  return !desc_.quotient.empty();
}

Poly Ring::reduce(const Poly& p) const {
  for (const auto& t : p.terms) {
    if (t.exp.size() != nvars()) throw RingMismatch("element has wrong number of variables");
  }
  Poly q;
  q.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) {
    mpq_class c = arith_.normalize(t.coef);
    if (c != 0) q.terms.push_back({t.exp, c});
  }
  // Inputs may come from a different order; re-sort defensively only when needed.
  bool sorted = true;
  for (std::size_t i = 1; i < q.terms.size(); ++i) {
    if (arith_.compare(q.terms[i - 1].exp, q.terms[i].exp) <= 0) {
      sorted = false;
      break;
    }
  }
  if (!sorted) q = arith_.from_terms(q.terms);
  if (engine_ == Engine::FieldPoly && !quotient_basis_.empty()) return normal_form(arith_, q, quotient_basis_);
  return q;
}

Poly Ring::pow(const Poly& a, unsigned n) const {
  Poly r = one();
  Poly base = a;
  while (n) {
    if (n & 1u) r = mul(r, base);
    n >>= 1u;
    if (n) base = mul(base, base);
  }
  return r;
}

mpz_class Ring::to_int(const Poly& p) const {
  if (p.is_zero()) return 0;
  if (!p.is_constant() || p.lead().coef.get_den() != 1) throw InvalidArgument("element is not an integer constant");
  return p.lead().coef.get_num();
}

bool Ring::is_pid_domain() const {
  if (engine_ == Engine::Integer) return int_modulus_ == 0;
  if (engine_ == Engine::FieldPoly) return nvars() <= 1 && desc_.quotient.empty();
  return false;
}

bool Ring::is_principal() const {
  if (engine_ == Engine::Integer) return true;
  if (engine_ == Engine::FieldPoly) return nvars() <= 1;
  return false;
}

bool Ring::is_field() const {
  if (engine_ == Engine::Integer) return int_modulus_ != 0 && is_prime(int_modulus_);
  if (engine_ == Engine::FieldPoly) return nvars() == 0;
  return false;
}

bool Ring::is_artinian_principal() const {
  if (engine_ == Engine::Integer) return int_modulus_ != 0;
  if (engine_ == Engine::FieldPoly) return nvars() == 0 || (nvars() == 1 && !desc_.quotient.empty());
  return false;
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  return desc_.base == o.desc_.base && desc_.modulus == o.desc_.modulus && desc_.vars == o.desc_.vars &&
         desc_.order == o.desc_.order && desc_.quotient == o.desc_.quotient;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw RingMismatch();
}

RingPtr Ring::extend(const std::vector<std::string>& extra, MonomialOrder order) const {
  RingDescriptor d = desc_;
  d.order = order;
  for (const auto& v : extra) d.vars.push_back(v);
  for (auto& q : d.quotient) {
    for (auto& t : q.terms) t.exp.resize(d.vars.size(), 0);
  }
  return make(d);
}

std::string Ring::element_to_string(const Poly& p) const { return poly_to_string(p, desc_.vars); }

std::string Ring::to_string() const {
  std::ostringstream os;
  switch (desc_.base) {
    case BaseKind::Integers:
      os << "ZZ";
      break;
    case BaseKind::IntegersMod:
      os << "ZZ/" << desc_.modulus.get_str();
      break;
    case BaseKind::PrimeField:
      os << "GF(" << desc_.modulus.get_str() << ")";
      break;
    case BaseKind::Rationals:
      os << "QQ";
      break;
  }
  if (!desc_.vars.empty()) {
    os << "[";
    for (std::size_t i = 0; i < desc_.vars.size(); ++i) os << (i ? "," : "") << desc_.vars[i];
    os << "]";
  }
  if (!desc_.quotient.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < desc_.quotient.size(); ++i)
      os << (i ? ", " : "") << poly_to_string(desc_.quotient[i], desc_.vars);
    os << ")";
  }
  return os.str();
}

RingElement RingElement::operator+(const RingElement& o) const {
  require_same_ring(*ring_, *o.ring_);
  return {ring_, ring_->add(value_, o.value_)};
}

RingElement RingElement::operator-(const RingElement& o) const {
  require_same_ring(*ring_, *o.ring_);
  return {ring_, ring_->sub(value_, o.value_)};
}

RingElement RingElement::operator*(const RingElement& o) const {
  require_same_ring(*ring_, *o.ring_);
  return {ring_, ring_->mul(value_, o.value_)};
}

RingElement RingElement::operator-() const { return {ring_, ring_->neg(value_)}; }

bool RingElement::operator==(const RingElement& o) const {
  return ring_->same_as(*o.ring_) && value_ == o.value_;
}

}  // namespace rspec
