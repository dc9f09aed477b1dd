#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rspec/kernel/ring.hpp"

namespace rspec {

/// Finitely generated ideal with a lazily computed canonical basis:
/// the gcd generator over Z and Z/n (a divisor of n), the reduced Groebner
/// basis over field-coefficient polynomial rings. Copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  /// Canonical basis of the ideal in R; empty for the zero ideal. Computed
  /// once, thread-safe.
  const std::vector<Poly>& canonical_basis() const;

  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool is_zero() const { return canonical_basis().empty(); }
  bool is_unit() const;

  bool operator==(const Ideal& o) const;

  /// Over Z / Z/n: nonnegative canonical generator (0 for the zero ideal
  /// of Z, n for the zero ideal of Z/n).
  mpz_class int_generator() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
    std::vector<MVec> ambient_gb;  // GB of I + Q in the ambient ring
    mpz_class int_gen = 0;
  };
  void populate() const;

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned n);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const std::vector<Ideal>& ideals, const RingPtr& ring);

/// (I : J) = {f : f J subset I}.
Ideal ideal_quotient(const Ideal& i, const Ideal& j);

struct Saturation {
  Ideal ideal;
  /// Smallest n with (I : J^n) = (I : J^(n+1)).
  unsigned exponent;
};

/// (I : J^infinity), computed as the stabilizing chain of iterated
/// quotients. J must be nonzero. Hard cap of `cap` steps.
Saturation saturation(const Ideal& i, const Ideal& j, unsigned cap = 64);

/// f in sqrt(I). Rabinowitsch over polynomial rings, prime-power
/// divisibility over Z and Z/n.
bool radical_contains(const Ideal& i, const Poly& f);

}  // namespace rspec
