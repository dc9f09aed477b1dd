#pragma once

#include <optional>
#include <vector>

#include "rspec/modules/ops.hpp"
#include "rspec/spectrum/prime.hpp"

namespace rspec {

/// Krull dimension zero: Z/n, k, or a quotient whose leading terms
/// include a pure power of every variable.
bool ring_is_artinian(const Ring& r);
/// Z, Z/n, k, k[x] and k[x]/(f).
bool ring_is_principal(const Ring& r);
bool ring_is_field(const RingPtr& r);

/// p in Supp(M), i.e. ann(M) subset p (M finitely generated).
bool supp_contains(const PrimeIdeal& p, const ModulePresentation& m);

SpecSet spec_closure(const RingPtr& ring, const std::vector<PrimeIdeal>& points);

/// p in Ass(M), decided as ann(Hom(R/p, M)) subset p.
bool ass_contains(const PrimeIdeal& p, const ModulePresentation& m);

/// True when the presentation admits a Z^n-grading with single-term
/// entries over a monomial quotient (so that Ass consists of monomial primes).
bool is_multigraded(const ModulePresentation& m);

/// A finite set of primes guaranteed to contain Ass(M). Throws
/// NeedCandidates when the ring/presentation has no complete strategy.
std::vector<PrimeIdeal> candidate_primes(const ModulePresentation& m);

/// Exactly Ass(M) when `candidates` is omitted. With explicit candidates
/// the result is Ass(M) intersected with them.
std::vector<PrimeIdeal> ass_enumerate(const ModulePresentation& m,
                                      const std::optional<std::vector<PrimeIdeal>>& candidates = std::nullopt);

/// Minimal primes over an ideal, for principal rings (Z, Z/n, k[x],
/// k[x]/(f), fields) and monomial ideals over monomial quotients.
std::vector<PrimeIdeal> minimal_primes(const Ideal& i);

/// Supp(M) as a SpecSet: the closure of the minimal primes over ann(M).
SpecSet support(const ModulePresentation& m);

struct PrimeFiltration {
  /// chain[i] generates M_{i+1} inside M (as elements of R^rank); M_0 = 0.
  std::vector<std::vector<Column>> chain;
  /// M_{i+1} / M_i is generated by the image of `elements[i]`, which has
  /// annihilator exactly primes[i] there.
  std::vector<Column> elements;
  std::vector<PrimeIdeal> primes;
};

PrimeFiltration prime_filtration(const ModulePresentation& m, unsigned cap = 256);

/// The prime p if ann(M) = p is prime and Ass(M) = {p}; nothing otherwise.
std::optional<PrimeIdeal> is_spectral(const ModulePresentation& m);

/// R/p < M restricted to prime-quotient left arguments. Throws
/// InvalidArgument if P is not cyclic with prime annihilator.
bool subquotient_rel(const ModulePresentation& p, const ModulePresentation& m);

}  // namespace rspec
