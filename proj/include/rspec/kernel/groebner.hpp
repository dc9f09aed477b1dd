#pragma once

#include <cstddef>
#include <vector>

#include "rspec/kernel/poly.hpp"

namespace rspec {

/// A term of a vector in a free module P^r: component index, monomial,
/// coefficient.
struct MTerm {
  int comp;
  Exponents exp;
  mpq_class coef;

  bool operator==(const MTerm& o) const { return comp == o.comp && exp == o.exp && coef == o.coef; }
};

/// Sparse module vector, terms strictly decreasing in the position-over-term
/// order: lower component index first, then the ring's monomial order.
/// Ideals are the rank-one case (all comps 0).
using MVec = std::vector<MTerm>;

class ModuleArith {
 public:
  explicit ModuleArith(const PolyArith& pa) : pa_(pa) {}

  const PolyArith& poly() const { return pa_; }

  int compare(const MTerm& a, const MTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return pa_.compare(a.exp, b.exp);
  }

  MVec add(const MVec& a, const MVec& b) const;
  /// a - c * x^e * b
  MVec sub_mul(const MVec& a, const mpq_class& c, const Exponents& e, const MVec& b) const;
  MVec scale(const MVec& a, const mpq_class& c) const;
  MVec monic(const MVec& a) const;
  MVec from_terms(std::vector<MTerm> terms) const;

  /// Embeds a polynomial in component `comp`.
  MVec embed(const Poly& p, int comp) const;
  /// Extracts component `comp` as a polynomial.
  Poly component(const MVec& v, int comp) const;

 private:
  const PolyArith& pa_;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t product_skips = 0;
  std::size_t chain_skips = 0;
};

/// Reduced Groebner basis of the submodule generated by `gens`, sorted
/// increasing in the module order. Requires field coefficients.
/// Buchberger's algorithm, normal selection strategy (smallest lcm, ties by
/// index), with the product criterion (rank-one input only) and the chain
/// criterion.
std::vector<MVec> groebner_basis(const PolyArith& pa, const std::vector<MVec>& gens,
                                 GroebnerStats* stats = nullptr);

/// Full normal form of `f` modulo `basis` (any generating set; the result is
/// canonical when `basis` is a Groebner basis).
MVec normal_form(const PolyArith& pa, const MVec& f, const std::vector<MVec>& basis);

Poly normal_form(const PolyArith& pa, const Poly& f, const std::vector<MVec>& basis);

}  // namespace rspec
