#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace rspec {

using Exponents = std::vector<int>;

enum class OrderKind {
  GRevLex,
  Lex,
  /// Block order: grevlex on the first `block` variables, ties broken by
  /// grevlex on the rest. Eliminates the first block.
  Elimination,
};

struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  int block = 0;

  /// Three-way comparison: 1 if a > b, -1 if a < b, 0 if equal.
  int compare(const Exponents& a, const Exponents& b) const;

  bool operator==(const MonomialOrder&) const = default;
};

/// Coefficient arithmetic. Every coefficient is stored as an mpq_class in
/// canonical form: reduced rationals, integers, or residues in [0, m).
class CoeffDomain {
 public:
  enum class Kind { Rational, Integer, Modular };

  static CoeffDomain rationals() { return CoeffDomain(Kind::Rational, 0); }
  static CoeffDomain integers() { return CoeffDomain(Kind::Integer, 0); }
  static CoeffDomain modular(const mpz_class& m) { return CoeffDomain(Kind::Modular, m); }

  Kind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  /// Rationals, or integers modulo a prime.
  bool is_field() const { return is_field_; }

  void normalize(mpq_class& c) const;
  mpq_class inverse(const mpq_class& c) const;

  bool operator==(const CoeffDomain& o) const { return kind_ == o.kind_ && modulus_ == o.modulus_; }

 private:
  CoeffDomain(Kind k, mpz_class m);

  Kind kind_;
  mpz_class modulus_;
  bool is_field_;
};

struct Term {
  Exponents exp;
  mpq_class coef;

  bool operator==(const Term& o) const { return exp == o.exp && coef == o.coef; }
};

/// Sparse polynomial: terms sorted strictly decreasing under the owning
/// ring's monomial order, no zero coefficients. Arithmetic lives in
/// PolyArith because it depends on the order and the coefficients.
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && total_degree() == 0); }
  int total_degree() const;

  bool operator==(const Poly& o) const { return terms == o.terms; }
};

bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);

class PolyArith {
 public:
  PolyArith(std::size_t nvars, MonomialOrder order, CoeffDomain coeffs);

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const CoeffDomain& coeffs() const { return coeffs_; }

  int compare(const Exponents& a, const Exponents& b) const { return order_.compare(a, b); }

  Poly zero() const { return {}; }
  Poly constant(const mpq_class& c) const;
  Poly variable(std::size_t i) const;
  Poly monomial(const Exponents& e, const mpq_class& c) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, const mpq_class& c) const;
  Poly mul_term(const Poly& a, const Exponents& e, const mpq_class& c) const;
  Poly pow(const Poly& a, unsigned n) const;
  /// Divides by the leading coefficient. Requires field coefficients.
  Poly monic(const Poly& a) const;
  /// Re-sorts and combines an unsorted term list.
  Poly from_terms(std::vector<Term> terms) const;

  mpq_class normalize(mpq_class c) const {
    coeffs_.normalize(c);
    return c;
  }

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  CoeffDomain coeffs_;
};

std::string coef_to_string(const mpq_class& c);
std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);

}  // namespace rspec
