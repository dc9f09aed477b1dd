#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "rspec/modules/presentation.hpp"
#include "rspec/spectrum/prime.hpp"

namespace rspec {

/// Q^rank + sum_p Z(p^inf)^{mult(p)}, where mult is `default_mult` for all
/// but finitely many primes.
class DivisibleGroup {
 public:
  DivisibleGroup() = default;
  DivisibleGroup(unsigned long rank, unsigned long default_mult, std::map<mpz_class, unsigned long> exceptions);

  unsigned long rank() const { return rank_; }
  unsigned long default_multiplicity() const { return default_; }
  /// Primes whose multiplicity differs from the default.
  const std::map<mpz_class, unsigned long>& exceptions() const { return exc_; }
  unsigned long multiplicity(const mpz_class& p) const;
  bool is_zero() const { return rank_ == 0 && default_ == 0 && exc_.empty(); }

  bool operator==(const DivisibleGroup& o) const {
    return rank_ == o.rank_ && default_ == o.default_ && exc_ == o.exc_;
  }
  std::string to_string() const;

 private:
  unsigned long rank_ = 0;
  unsigned long default_ = 0;
  std::map<mpz_class, unsigned long> exc_;
};

/// E(M) for a finitely generated abelian group M.
DivisibleGroup divisible_injective_hull(const ModulePresentation& m);
/// The k-th cosyzygy in the minimal injective resolution of M over Z.
DivisibleGroup divisible_cosyzygy(const ModulePresentation& m, std::size_t k);
/// p in Ass(D): (0) iff rank > 0, (q) iff mult(q) > 0.
bool divisible_ass(const DivisibleGroup& d, const PrimeIdeal& p);

/// q in Supp(D): some associated prime of D lies inside q.
bool divisible_supp(const DivisibleGroup& d, const PrimeIdeal& q);

/// Hom(M, D) != 0 for a finitely generated abelian group M.
bool divisible_hom_nonzero(const ModulePresentation& m, const DivisibleGroup& d);

}  // namespace rspec
