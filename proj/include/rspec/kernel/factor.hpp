#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "rspec/kernel/ring.hpp"

namespace rspec {

struct IntFactor {
  mpz_class prime;
  unsigned exponent;
};

bool is_prime_integer(const mpz_class& n);
/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<IntFactor> factor_integer(const mpz_class& n);
/// Distinct prime divisors of |n|, ascending; empty for 0 and +-1.
std::vector<mpz_class> prime_divisors(const mpz_class& n);

/// Univariate helpers for a ring with one variable and field coefficients.
/// Polynomials are taken in the ambient ring k[x] (any quotient ignored).
Poly univariate_gcd(const Ring& ring, const Poly& a, const Poly& b);
Poly univariate_rem(const Ring& ring, const Poly& a, const Poly& b);
void univariate_divmod(const Ring& ring, const Poly& a, const Poly& b, Poly& q, Poly& r);
/// Monic squarefree part.
Poly univariate_squarefree(const Ring& ring, const Poly& f);

/// Distinct monic irreducible factors of f, in increasing order. Over F_p
/// the search is complete; over Q it uses rational roots and Kronecker's
/// method, throwing NeedCandidates when the work budget runs out.
std::vector<Poly> univariate_irreducible_factors(const Ring& ring, const Poly& f, std::size_t budget = 200000);

bool univariate_is_irreducible(const Ring& ring, const Poly& f, std::size_t budget = 200000);

}  // namespace rspec
