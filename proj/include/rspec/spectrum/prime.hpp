#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rspec/kernel/ideal.hpp"

namespace rspec {

enum class Certification { Auto, Asserted };

const char* certification_name(Certification c);

/// A prime ideal with a record of how primality was established.
class PrimeIdeal {
 public:
  /// Certifies primality automatically or throws InvalidArgument. Covered:
  /// (0) and (p) over Z; (p) over Z/n; (0) and irreducible generators over
  /// k[x] and k[x]/(f); ideals of linear forms (monomial primes included)
  /// over multivariate rings whose quotient lies inside them.
  static PrimeIdeal certify(const Ideal& i);
  static std::optional<PrimeIdeal> try_certify(const Ideal& i);
  /// Accepts the caller's assertion that `i` is prime (proper ideals only).
  static PrimeIdeal assume(const Ideal& i);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  Certification certification() const { return cert_; }

  /// this subset of q, i.e. q lies in the closure V(this).
  bool specializes_to(const PrimeIdeal& q) const { return q.ideal_.contains(ideal_); }

  bool operator==(const PrimeIdeal& o) const { return ideal_ == o.ideal_; }
  std::string to_string() const { return ideal_.to_string(); }
  /// Generators as strings; ["0"] for the zero ideal.
  std::vector<std::string> generator_strings() const;

 private:
  PrimeIdeal(Ideal i, Certification c) : ideal_(std::move(i)), cert_(c) {}

  Ideal ideal_;
  Certification cert_;
};

/// Deterministic total order on primes of one ring (by printed form).
bool prime_less(const PrimeIdeal& a, const PrimeIdeal& b);

/// Drops duplicates and sorts.
std::vector<PrimeIdeal> unique_primes(std::vector<PrimeIdeal> ps);

/// A finite-type specialization-closed set V(p_1) u ... u V(p_r), stored as
/// its minimal antichain.
class SpecSet {
 public:
  explicit SpecSet(RingPtr ring) : ring_(std::move(ring)) {}

  static SpecSet closure(const RingPtr& ring, const std::vector<PrimeIdeal>& points);

  const RingPtr& ring() const { return ring_; }
  const std::vector<PrimeIdeal>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  bool contains(const PrimeIdeal& q) const;
  /// Every point of this set lies in `other`.
  bool subset_of(const SpecSet& other) const;
  bool operator==(const SpecSet& o) const;

  SpecSet unite(const SpecSet& o) const;

  /// The intersection of the generators (R for the empty set).
  Ideal defining_ideal() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<PrimeIdeal> gens_;
};

}  // namespace rspec
