#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "rspec/kernel/groebner.hpp"
#include "rspec/kernel/poly.hpp"

namespace rspec {

enum class BaseKind { Integers, IntegersMod, PrimeField, Rationals };

/// R = Base[vars] / quotient. Quotient generators live in the ambient
/// polynomial ring Base[vars].
struct RingDescriptor {
  BaseKind base = BaseKind::Integers;
  mpz_class modulus = 0;  // n for IntegersMod, p for PrimeField
  std::vector<std::string> vars;
  std::vector<Poly> quotient;
  MonomialOrder order{};
};

/// Which computational backend serves the ring.
enum class Engine {
  /// Z or Z/n: Hermite forms over the integers, lifted through the modulus.
  Integer,
  /// k[x1..xn]/Q with k = Q or F_p: module Groebner bases.
  FieldPoly,
  /// Described but not computable (e.g. Z[x], (Z/6)[x]).
  Unsupported,
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  /// Validates the descriptor, canonicalizes it (Z/(n) with no variables
  /// becomes Z/n, (Z/p)[x] becomes F_p[x]) and reduces the quotient.
  static RingPtr make(RingDescriptor d);

  static RingPtr integers();
  static RingPtr integers_mod(const mpz_class& n);
  static RingPtr rationals(std::vector<std::string> vars = {});
  static RingPtr prime_field(const mpz_class& p, std::vector<std::string> vars = {});

  const RingDescriptor& descriptor() const { return desc_; }
  Engine engine() const { return engine_; }
  const PolyArith& arith() const { return arith_; }
  std::size_t nvars() const { return desc_.vars.size(); }
  const std::vector<std::string>& vars() const { return desc_.vars; }

  /// For the Integer engine: 0 for Z, n for Z/n.
  const mpz_class& int_modulus() const { return int_modulus_; }
  /// For the FieldPoly engine: reduced Groebner basis of the quotient ideal
  /// in the ambient polynomial ring.
  const std::vector<MVec>& quotient_basis() const { return quotient_basis_; }
  bool has_quotient() const;

  /// Normal form modulo the quotient (canonical representative).
  Poly reduce(const Poly& p) const;

  Poly zero() const { return {}; }
  Poly one() const { return reduce(arith_.constant(1)); }
  Poly from_int(const mpz_class& n) const { return reduce(arith_.constant(mpq_class(n))); }
  Poly variable(std::size_t i) const { return reduce(arith_.variable(i)); }
  Poly add(const Poly& a, const Poly& b) const { return reduce(arith_.add(a, b)); }
  Poly sub(const Poly& a, const Poly& b) const { return reduce(arith_.sub(a, b)); }
  Poly neg(const Poly& a) const { return reduce(arith_.neg(a)); }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(arith_.mul(a, b)); }
  Poly pow(const Poly& a, unsigned n) const;

  /// Integer value of a constant element (Integer engine).
  mpz_class to_int(const Poly& p) const;

  /// True for Z and k[x] (no quotient).
  bool is_pid_domain() const;
  /// True for Z, Z/n, k[x], k[x]/(f): rings handled by Smith normal form.
  bool is_principal() const;
  /// True when the ring is a field (Z/p, F_p, Q with no variables).
  bool is_field() const;
  /// Z/n with n >= 2, or k[x]/(f) with f nonconstant, or a field.
  bool is_artinian_principal() const;

  /// Structural equality of canonical descriptors.
  bool same_as(const Ring& other) const;

  /// The ring with variables `extra` appended (same base and quotient).
  RingPtr extend(const std::vector<std::string>& extra, MonomialOrder order) const;

  std::string element_to_string(const Poly& p) const;
  /// DSL spelling, e.g. "ZZ", "ZZ/12", "QQ[x,y]/(x^2)".
  std::string to_string() const;

 private:
  explicit Ring(RingDescriptor d);

  RingDescriptor desc_;
  Engine engine_;
  PolyArith arith_;
  mpz_class int_modulus_ = 0;
  std::vector<MVec> quotient_basis_;
};

void require_same_ring(const Ring& a, const Ring& b);

/// An element with its owning ring; the value is always in canonical form.
class RingElement {
 public:
  RingElement(RingPtr ring, const Poly& value) : ring_(std::move(ring)), value_(ring_->reduce(value)) {}

  const RingPtr& ring() const { return ring_; }
  const Poly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  bool operator==(const RingElement& o) const;

  std::string to_string() const { return ring_->element_to_string(value_); }

 private:
  RingPtr ring_;
  Poly value_;
};

}  // namespace rspec
