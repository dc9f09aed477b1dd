#include "rspec/kernel/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "rspec/kernel/errors.hpp"

namespace rspec {

namespace {

int sum_range(const Exponents& e, std::size_t from, std::size_t to) {
  int s = 0;
  for (std::size_t i = from; i < to; ++i) s += e[i];
  return s;
}

// grevlex restricted to [from, to)
int grevlex(const Exponents& a, const Exponents& b, std::size_t from, std::size_t to) {
  int da = sum_range(a, from, to), db = sum_range(b, from, to);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = to; i-- > from;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  switch (kind) {
    case OrderKind::GRevLex:
      return grevlex(a, b, 0, a.size());
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Elimination: {
      std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(block), a.size());
      if (int c = grevlex(a, b, 0, k)) return c;
      return grevlex(a, b, k, a.size());
    }
  }
  return 0;
}

CoeffDomain::CoeffDomain(Kind k, mpz_class m) : kind_(k), modulus_(std::move(m)) {
  if (kind_ == Kind::Modular) {
    if (modulus_ < 2) throw InvalidArgument("coefficient modulus must be at least 2");
    is_field_ = mpz_probab_prime_p(modulus_.get_mpz_t(), 40) != 0;
  } else {
    is_field_ = kind_ == Kind::Rational;
  }
}

void CoeffDomain::normalize(mpq_class& c) const {
  switch (kind_) {
    case Kind::Rational:
      c.canonicalize();
      return;
    case Kind::Integer:
      c.canonicalize();
      if (c.get_den() != 1) throw InvalidArgument("non-integer coefficient over the integers");
      return;
    case Kind::Modular: {
      c.canonicalize();
      mpz_class num = c.get_num();
      mpz_class den = c.get_den();
      mpz_class r;
      if (den != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
          throw InvalidArgument("denominator not invertible modulo " + modulus_.get_str());
        num *= inv;
      }
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
      c = mpq_class(r);
      return;
    }
  }
}

mpq_class CoeffDomain::inverse(const mpq_class& c) const {
  if (c == 0) throw InvalidArgument("inverse of zero");
  switch (kind_) {
    case Kind::Rational:
      return 1 / c;
    case Kind::Integer:
      if (c == 1 || c == -1) return c;
      throw InvalidArgument("non-unit integer has no inverse");
    case Kind::Modular: {
      mpz_class num = c.get_num();
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw InvalidArgument("non-unit residue has no inverse");
      return mpq_class(inv);
    }
  }
  return c;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, std::accumulate(t.exp.begin(), t.exp.end(), 0));
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

PolyArith::PolyArith(std::size_t nvars, MonomialOrder order, CoeffDomain coeffs)
    : nvars_(nvars), order_(order), coeffs_(std::move(coeffs)) {}

Poly PolyArith::constant(const mpq_class& c) const { return monomial(Exponents(nvars_, 0), c); }

Poly PolyArith::variable(std::size_t i) const {
  Exponents e(nvars_, 0);
  e.at(i) = 1;
  return monomial(e, 1);
}

Poly PolyArith::monomial(const Exponents& e, const mpq_class& c) const {
  mpq_class n = normalize(c);
  Poly p;
  if (n != 0) p.terms.push_back({e, n});
  return p;
}

Poly PolyArith::add(const Poly& a, const Poly& b) const {
  Poly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = compare(a.terms[i].exp, b.terms[j].exp);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      mpq_class s = normalize(a.terms[i].coef + b.terms[j].coef);
      if (s != 0) r.terms.push_back({a.terms[i].exp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

Poly PolyArith::neg(const Poly& a) const { return scale(a, -1); }

Poly PolyArith::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyArith::scale(const Poly& a, const mpq_class& c) const {
  Poly r;
  mpq_class cn = normalize(c);
  if (cn == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    mpq_class v = normalize(t.coef * cn);
    if (v != 0) r.terms.push_back({t.exp, v});
  }
  return r;
}

Poly PolyArith::mul_term(const Poly& a, const Exponents& e, const mpq_class& c) const {
  Poly r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    mpq_class v = normalize(t.coef * c);
    if (v != 0) r.terms.push_back({exp_add(t.exp, e), v});
  }
  return r;
}

Poly PolyArith::from_terms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [this](const Term& x, const Term& y) { return compare(x.exp, y.exp) > 0; });
  Poly r;
  for (auto& t : terms) {
    if (!r.terms.empty() && r.terms.back().exp == t.exp) {
      r.terms.back().coef += t.coef;
    } else {
      if (!r.terms.empty()) {
        r.terms.back().coef = normalize(r.terms.back().coef);
        if (r.terms.back().coef == 0) r.terms.pop_back();
      }
      r.terms.push_back(std::move(t));
    }
  }
  if (!r.terms.empty()) {
    r.terms.back().coef = normalize(r.terms.back().coef);
    if (r.terms.back().coef == 0) r.terms.pop_back();
  }
  return r;
}

Poly PolyArith::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms) {
    for (const auto& t : b.terms) prod.push_back({exp_add(s.exp, t.exp), s.coef * t.coef});
  }
  return from_terms(std::move(prod));
}

Poly PolyArith::pow(const Poly& a, unsigned n) const {
  Poly r = constant(1);
  Poly base = a;
  while (n) {
    if (n & 1u) r = mul(r, base);
    n >>= 1u;
    if (n) base = mul(base, base);
  }
  return r;
}

Poly PolyArith::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, coeffs_.inverse(a.lead().coef));
}

std::string coef_to_string(const mpq_class& c) { return c.get_str(); }

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms) {
    mpq_class c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool has_vars = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (has_vars) mono << "*";
      mono << vars.at(i);
      if (t.exp[i] > 1) mono << "^" << t.exp[i];
      has_vars = true;
    }
    if (!has_vars) {
      os << c.get_str();
    } else if (c == 1) {
      os << mono.str();
    } else {
      os << c.get_str() << "*" << mono.str();
    }
  }
  return os.str();
}

}  // namespace rspec
